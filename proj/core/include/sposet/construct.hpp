#pragma once

#include "sposet/complex.hpp"
#include "sposet/conditions.hpp"
#include "sposet/hvec.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sposet {

// Input does not meet a construction's hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction produced something that is not the promised ball.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Method { PairedCase1, PairedCase2, SimplexPrefix, FiveBallSplice };
// Tags used in reports: thm6.2-case1, thm6.2-case2, thm6.3, prop6.4.
std::string method_tag(Method m);

struct Construction {
  SimplicialPoset complex;
  std::vector<FaceId> order;
  Method method = Method::PairedCase1;
  std::vector<std::string> notes;
  // h-vectors of intermediate shellings (the six-facet splice records one).
  std::vector<HVector> checkpoints;
  // |sigma| of each facet in `order`.
  std::vector<int> sigma_sizes;
};

struct Applicability {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// c_0 = 0 and for 1 <= k < sum(h), c_k is where the running sum of h reaches k + 1.
std::vector<int> c_vector(const HVector& h);

Applicability paired_case1_applies(const HVector& h);
Applicability paired_case2_applies(const HVector& h);
Applicability basic_applies(const HVector& h);
Applicability nonzero_applies(const HVector& h);
Applicability dim5_applies(const HVector& h);

// Paired-facet shelling; case 2 adds a closing facet when some dh_n vanishes.
Construction construct_basic(const HVector& h);
// Simplicial prefix on d + 1 vertices followed by the paired shelling of the reduced vector.
Construction construct_nonzero(const HVector& h);
// Five-balls with h = (1, h1, h2, h3, h4, 0, 0), dh_2 = 0 and odd sum.
Construction construct_dim5(const HVector& h);

enum class AutoStatus { Constructed, Infeasible, Unknown };
std::string to_string(AutoStatus s);

struct AutoResult {
  AutoStatus status = AutoStatus::Unknown;
  std::optional<Construction> construction;
  ConditionReport conditions;
  std::vector<std::string> notes;
};

AutoResult construct_auto(const HVector& h);

}  // namespace sposet
