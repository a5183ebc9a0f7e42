#pragma once

#include "sposet/complex.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace sposet {

// A multichain p_1 <= p_2 <= ... of non-empty faces, listed by increasing rank.
using Chain = std::vector<FaceId>;
using ChainPolynomial = std::map<Chain, std::int64_t>;

// Face ring of a simplicial poset in the chain-monomial basis.
// Caches products internally, so one instance must not be shared across threads.
class FaceRing {
 public:
  explicit FaceRing(const SimplicialPoset& p);

  const SimplicialPoset& poset() const { return p_; }
  int degree(const Chain& m) const;
  bool is_chain(const Chain& m) const;

  bool leq(FaceId a, FaceId b) const;
  bool comparable(FaceId a, FaceId b) const { return leq(a, b) || leq(b, a); }
  // Faces of rank |V(a) u V(b)| above both a and b.
  const std::vector<FaceId>& minimal_upper_bounds(FaceId a, FaceId b) const;
  // Greatest lower bound; only meaningful when an upper bound exists.
  FaceId meet(FaceId a, FaceId b) const;

  // Normal form of m * x_p.
  ChainPolynomial multiply(const Chain& m, FaceId p) const;
  ChainPolynomial multiply(const ChainPolynomial& f, FaceId p) const;
  // Normal form of x_{q_1} ... x_{q_k}. With an rng, incomparable pairs are
  // rewritten in random order instead of left to right.
  ChainPolynomial straighten(const std::vector<FaceId>& product, std::mt19937_64* rng = nullptr) const;

  // All chain monomials of the given degree.
  std::vector<Chain> basis(int degree) const;

 private:
  const SimplicialPoset& p_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[a] has bit b iff a <= b
  mutable std::map<std::pair<FaceId, FaceId>, std::vector<FaceId>> mub_cache_;
  mutable std::map<std::pair<Chain, FaceId>, ChainPolynomial> product_cache_;
};

// dim of degree-i part of the face ring: sum_j f_{j-1} C(i-1, j-1).
Integer hilbert_face_ring(const SimplicialPoset& p, int i);

// d x n integer matrix; column k belongs to vertices[k].
struct Lsop {
  std::vector<VertexId> vertices;
  std::vector<std::vector<long>> theta;
  std::uint64_t seed = 0;
  long bound = 0;
  int retries = 0;
};

// det(Theta restricted to F) != 0 for every facet F.
bool is_lsop(const SimplicialPoset& p, const Lsop& l);
// Random integer matrix with entries in [-bound, bound], redrawn until it is an l.s.o.p.
Lsop random_lsop(const SimplicialPoset& p, std::uint64_t seed, long bound = 8, int max_retries = 1000);

// dim_Q of degree i of A_P / (theta) for 0 <= i <= d.
std::vector<Integer> quotient_hilbert(const SimplicialPoset& p, const Lsop& l);

}  // namespace sposet
