#include "sposet/hvec.hpp"

#include <cctype>
#include <sstream>

namespace sposet {

IntVector::IntVector(std::initializer_list<long> xs) {
  entries_.reserve(xs.size());
  for (long x : xs) entries_.emplace_back(x);
}

Integer IntVector::sum() const {
  Integer s = 0;
  for (const auto& x : entries_) s += x;
  return s;
}

std::string IntVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str();
  }
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

HVector f_to_h(const FVector& f) {
  const int d = f.d();
  std::vector<Integer> h(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) {
      Integer term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      if ((k - i) % 2) acc -= term; else acc += term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return HVector(std::move(h));
}

FVector h_to_f(const HVector& h) {
  const int d = h.d();
  std::vector<Integer> f(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    Integer acc = 0;
    for (int i = 0; i <= j; ++i) acc += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
    if (acc < 0) {
      throw InvalidVector("h-vector (" + h.to_string() + ") gives negative f_" + std::to_string(j - 1) +
                         " = " + acc.get_str());
    }
    f[static_cast<std::size_t>(j)] = acc;
  }
  return FVector(std::move(f));
}

HVector boundary_h(const HVector& h) {
  const int d = h.d();
  if (d < 1) throw InvalidVector("boundary_h needs d >= 1");
  std::vector<Integer> b(static_cast<std::size_t>(d));
  Integer acc = 0;
  for (int j = 0; j < d; ++j) {
    acc += h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(d - j)];
    b[static_cast<std::size_t>(j)] = acc;
  }
  return HVector(std::move(b));
}

GVector g_vector(const HVector& h) {
  const int d = h.d();
  std::vector<Integer> g;
  for (int i = 0; i <= d / 2; ++i) {
    g.push_back(i == 0 ? h[0] : h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i - 1)]);
  }
  return GVector(std::move(g));
}

SphereCheck sphere_h_valid(const HVector& h) {
  const int d = h.d();
  if (d < 0) return {false, "empty vector"};
  if (h[0] != 1) return {false, "h_0 = " + h[0].get_str() + " != 1"};
  for (int i = 0; i <= d; ++i) {
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)]) {
      return {false, "h_" + std::to_string(i) + " != h_" + std::to_string(d - i)};
    }
  }
  bool all_positive = true;
  for (const auto& x : h.entries()) {
    if (x < 0) return {false, "negative entry"};
    if (x == 0) all_positive = false;
  }
  if (!all_positive && h.sum() % 2 != 0) {
    return {false, "some h_i = 0 and sum " + h.sum().get_str() + " is odd"};
  }
  return {true, ""};
}

HVector parse_hvector(const std::string& text) {
  std::vector<Integer> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) throw std::invalid_argument("empty entry in vector \"" + text + "\"");
    Integer x;
    if (x.set_str(t, 10) != 0) throw std::invalid_argument("not an integer: \"" + t + "\"");
    xs.push_back(x);
  }
  if (xs.empty()) throw std::invalid_argument("empty vector");
  return HVector(std::move(xs));
}

}  // namespace sposet
