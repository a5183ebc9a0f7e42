#include "sposet/facering.hpp"

#include "sposet/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace sposet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in face ring");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in face ring");
  return r;
}

void add_term(ChainPolynomial& f, const Chain& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = f.emplace(m, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) f.erase(it);
  }
}

}  // namespace

FaceRing::FaceRing(const SimplicialPoset& p) : p_(p), words_((p.num_faces() + 63) / 64) {
  const std::size_t n = p.num_faces();
  up_.assign(n, std::vector<std::uint64_t>(words_, 0));
  std::vector<FaceId> ids(n);
  for (FaceId i = 0; i < n; ++i) ids[i] = i;
  std::stable_sort(ids.begin(), ids.end(), [&](FaceId a, FaceId b) { return p.rank(a) > p.rank(b); });
  for (FaceId a : ids) {
    auto& u = up_[a];
    u[a / 64] |= std::uint64_t{1} << (a % 64);
    for (FaceId c : p.cofaces(a)) {
      for (std::size_t w = 0; w < words_; ++w) u[w] |= up_[c][w];
    }
  }
}

int FaceRing::degree(const Chain& m) const {
  int deg = 0;
  for (FaceId q : m) deg += p_.rank(q);
  return deg;
}

bool FaceRing::is_chain(const Chain& m) const {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] == kEmptyFace || !leq(m[i], m[i + 1])) return false;
  }
  return m.empty() || m.back() != kEmptyFace;
}

bool FaceRing::leq(FaceId a, FaceId b) const { return up_[a][b / 64] >> (b % 64) & 1U; }

const std::vector<FaceId>& FaceRing::minimal_upper_bounds(FaceId a, FaceId b) const {
  const auto key = std::minmax(a, b);
  auto it = mub_cache_.find(key);
  if (it != mub_cache_.end()) return it->second;
  const auto& va = p_.vertices(a);
  const auto& vb = p_.vertices(b);
  std::vector<VertexId> joint;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(joint));
  const int target = static_cast<int>(joint.size());
  std::vector<FaceId> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = up_[a][w] & up_[b][w];
    while (bits) {
      const int k = std::countr_zero(bits);
      bits &= bits - 1;
      const auto r = static_cast<FaceId>(w * 64 + static_cast<std::size_t>(k));
      if (p_.rank(r) == target) out.push_back(r);
    }
  }
  return mub_cache_.emplace(key, std::move(out)).first->second;
}

FaceId FaceRing::meet(FaceId a, FaceId b) const {
  const auto& vb = p_.vertices(b);
  FaceId cur = a;
  for (VertexId v : p_.vertices(a)) {
    if (!std::binary_search(vb.begin(), vb.end(), v)) cur = p_.boundary(cur, v);
  }
  return cur;
}

ChainPolynomial FaceRing::multiply(const Chain& m, FaceId p) const {
  if (p == kEmptyFace) return {{m, 1}};
  auto key = std::make_pair(m, p);
  auto hit = product_cache_.find(key);
  if (hit != product_cache_.end()) return hit->second;

  ChainPolynomial out;
  std::size_t bad = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!comparable(m[i], p)) {
      bad = i;
      break;
    }
  }
  if (bad == m.size()) {
    Chain c = m;
    const int r = p_.rank(p);
    auto pos = std::find_if(c.begin(), c.end(), [&](FaceId q) { return p_.rank(q) > r; });
    c.insert(pos, p);
    out.emplace(std::move(c), 1);
  } else {
    const FaceId q = m[bad];
    const auto& ub = minimal_upper_bounds(p, q);
    if (!ub.empty()) {
      Chain rest = m;
      rest.erase(rest.begin() + static_cast<long>(bad));
      const ChainPolynomial base = multiply(rest, meet(p, q));
      for (FaceId r : ub) {
        for (const auto& [mono, c] : multiply(base, r)) add_term(out, mono, c);
      }
    }
  }
  product_cache_.emplace(std::move(key), out);
  return out;
}

ChainPolynomial FaceRing::multiply(const ChainPolynomial& f, FaceId p) const {
  ChainPolynomial out;
  for (const auto& [m, c] : f) {
    for (const auto& [mono, k] : multiply(m, p)) add_term(out, mono, checked_mul(c, k));
  }
  return out;
}

ChainPolynomial FaceRing::straighten(const std::vector<FaceId>& product, std::mt19937_64* rng) const {
  if (!rng) {
    ChainPolynomial f{{Chain{}, 1}};
    for (FaceId q : product) f = multiply(f, q);
    return f;
  }
  ChainPolynomial out;
  std::function<void(std::vector<FaceId>, std::int64_t)> rec = [&](std::vector<FaceId> ms, std::int64_t coeff) {
    ms.erase(std::remove(ms.begin(), ms.end(), kEmptyFace), ms.end());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        if (!comparable(ms[i], ms[j])) pairs.emplace_back(i, j);
      }
    }
    if (pairs.empty()) {
      std::sort(ms.begin(), ms.end(), [&](FaceId a, FaceId b) {
        return std::make_pair(p_.rank(a), a) < std::make_pair(p_.rank(b), b);
      });
      add_term(out, ms, coeff);
      return;
    }
    const auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(*rng)];
    const FaceId a = ms[i];
    const FaceId b = ms[j];
    const auto& ub = minimal_upper_bounds(a, b);
    std::vector<FaceId> rest;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (k != i && k != j) rest.push_back(ms[k]);
    }
    rest.push_back(meet(a, b));
    for (FaceId r : ub) {
      auto next = rest;
      next.push_back(r);
      rec(std::move(next), coeff);
    }
  };
  rec(product, 1);
  return out;
}

std::vector<Chain> FaceRing::basis(int degree) const {
  std::vector<Chain> out;
  if (degree < 0) return out;
  Chain cur;
  std::function<void(FaceId, int)> rec = [&](FaceId last, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = up_[last][w];
      while (bits) {
        const int k = std::countr_zero(bits);
        bits &= bits - 1;
        const auto q = static_cast<FaceId>(w * 64 + static_cast<std::size_t>(k));
        const int r = p_.rank(q);
        if (q == kEmptyFace || r > left) continue;
        cur.push_back(q);
        rec(q, left - r);
        cur.pop_back();
      }
    }
  };
  rec(kEmptyFace, degree);
  return out;
}

Integer hilbert_face_ring(const SimplicialPoset& p, int i) {
  if (i < 0) return 0;
  if (i == 0) return 1;
  const FVector f = p.f_vector();
  Integer total = 0;
  for (int j = 1; j <= f.d(); ++j) total += f[static_cast<std::size_t>(j)] * binomial(i - 1, j - 1);
  return total;
}

namespace {

Integer det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

bool is_lsop(const SimplicialPoset& p, const Lsop& l) {
  const int d = p.dim() + 1;
  if (static_cast<int>(l.theta.size()) != d) return false;
  std::map<VertexId, std::size_t> col;
  for (std::size_t k = 0; k < l.vertices.size(); ++k) col[l.vertices[k]] = k;
  for (FaceId f : p.facets()) {
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(d), std::vector<Integer>(static_cast<std::size_t>(d)));
    const auto& vs = p.vertices(f);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      auto it = col.find(vs[j]);
      if (it == col.end()) return false;
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) m[i][j] = l.theta[i][it->second];
    }
    if (det(std::move(m)) == 0) return false;
  }
  return true;
}

Lsop random_lsop(const SimplicialPoset& p, std::uint64_t seed, long bound, int max_retries) {
  if (bound < 1) throw std::invalid_argument("lsop bound must be positive");
  const int d = p.dim() + 1;
  Lsop l;
  l.vertices = p.vertex_ids();
  l.seed = seed;
  l.bound = bound;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    l.theta.assign(static_cast<std::size_t>(d), std::vector<long>(l.vertices.size()));
    for (auto& row : l.theta) {
      for (auto& x : row) x = entry(rng);
    }
    if (is_lsop(p, l)) {
      l.retries = attempt;
      return l;
    }
  }
  throw std::runtime_error("no l.s.o.p. found in " + std::to_string(max_retries) + " retries (seed " +
                           std::to_string(seed) + ")");
}

std::vector<Integer> quotient_hilbert(const SimplicialPoset& p, const Lsop& l) {
  if (!is_lsop(p, l)) throw std::invalid_argument("matrix is not an l.s.o.p. for this complex");
  const int d = p.dim() + 1;
  FaceRing ring(p);
  std::vector<Integer> out{1};
  std::vector<Chain> prev{Chain{}};
  for (int i = 1; i <= d; ++i) {
    std::vector<Chain> cur = ring.basis(i);
    std::map<Chain, std::uint32_t> index;
    for (std::uint32_t k = 0; k < cur.size(); ++k) index.emplace(cur[k], k);
    std::vector<SparseRow> rows;
    for (const Chain& m : prev) {
      std::vector<std::pair<std::size_t, ChainPolynomial>> products;
      for (std::size_t k = 0; k < l.vertices.size(); ++k) {
        auto f = ring.multiply(m, p.vertex_face(l.vertices[k]));
        if (!f.empty()) products.emplace_back(k, std::move(f));
      }
      for (const auto& coeffs : l.theta) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (const auto& [k, f] : products) {
          const std::int64_t t = coeffs[k];
          if (t == 0) continue;
          for (const auto& [mono, c] : f) {
            auto& slot = acc[index.at(mono)];
            slot = checked_add(slot, checked_mul(t, c));
          }
        }
        SparseRow row;
        for (auto [col, v] : acc) {
          if (v != 0) row.emplace_back(col, v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    out.emplace_back(static_cast<long>(cur.size() - rational_rank(rows, cur.size())));
    prev = std::move(cur);
  }
  return out;
}

}  // namespace sposet
