#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sposet {

using Integer = mpz_class;

class InvalidVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Integer vector with a fixed top index d; entries are indexed 0..d.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> xs);

  int d() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  Integer sum() const;
  std::string to_string() const;  // "1,2,0"

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const IntVector& a, const IntVector& b) { return a.entries_ < b.entries_; }

 protected:
  std::vector<Integer> entries_;
};

// h = (h_0, ..., h_d) of a (d-1)-dimensional complex.
class HVector : public IntVector {
 public:
  using IntVector::IntVector;
};

// f = (f_{-1}, f_0, ..., f_{d-1}); entry j stores f_{j-1}.
class FVector : public IntVector {
 public:
  using IntVector::IntVector;
  const Integer& f(int i) const { return entries_.at(static_cast<std::size_t>(i + 1)); }
};

// g_i = h_i - h_{i-1} for 0 <= i <= floor(d/2).
class GVector : public IntVector {
 public:
  using IntVector::IntVector;
};

Integer binomial(long n, long k);

HVector f_to_h(const FVector& f);
// Throws InvalidVector if some face count comes out negative.
FVector h_to_f(const HVector& h);
// h-vector of the boundary of a ball with h-vector h; length d.
HVector boundary_h(const HVector& h);
GVector g_vector(const HVector& h);

struct SphereCheck {
  bool valid = false;
  std::string reason;
};
SphereCheck sphere_h_valid(const HVector& h);

// Parses "1,2,0" (whitespace tolerated). Throws std::invalid_argument.
HVector parse_hvector(const std::string& text);

}  // namespace sposet
