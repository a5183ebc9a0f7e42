#include "sposet/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace sposet {

namespace {

using ZRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

void make_primitive(ZRow& r) {
  mpz_class g = 0;
  for (auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a * x - b * y, both sorted by column.
ZRow combine(const mpz_class& a, const ZRow& x, const mpz_class& b, const ZRow& y) {
  ZRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  mpz_class t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rational_rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  std::vector<ZRow> pivot(cols);
  std::size_t rank = 0;
  for (std::size_t idx : order) {
    if (rank == cols) break;
    auto src = rows[idx];
    std::sort(src.begin(), src.end());
    ZRow r;
    for (auto [c, v] : src) {
      if (v != 0) r.emplace_back(c, mpz_class(static_cast<long>(v)));
    }
    while (!r.empty()) {
      const std::uint32_t c = r.front().first;
      if (pivot[c].empty()) {
        make_primitive(r);
        pivot[c] = std::move(r);
        ++rank;
        break;
      }
      const ZRow& p = pivot[c];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
      mpz_class a = p.front().second / g;
      mpz_class b = r.front().second / g;
      r = combine(a, r, b, p);
      if (!r.empty()) make_primitive(r);
    }
  }
  return rank;
}

}  // namespace sposet
