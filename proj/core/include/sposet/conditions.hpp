#pragma once

#include "sposet/hvec.hpp"

#include <string>
#include <vector>

namespace sposet {

enum class Status { Pass, Fail, Inapplicable };
std::string to_string(Status s);

struct Condition {
  std::string name;
  Status status = Status::Inapplicable;
  std::string detail;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool passed() const;
  const Condition* first_failure() const;
};

// Necessary conditions for h to be the h-vector of a shellable ball.
// Clause names: BC1 BC2 BC3 MONO P-h1 P-h2 P-bh0 P-bh1.
ConditionReport check_necessary(const HVector& h);

enum class Verdict { Feasible, Infeasible };
std::string to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::Infeasible;
  ConditionReport report;
};

// Exact characterizations for balls of dimension 3..6 (h has length dim + 2).
Decision decide_dim3(const HVector& h);
Decision decide_dim4(const HVector& h);
Decision decide_dim5(const HVector& h);
Decision decide_dim6(const HVector& h);
Decision decide(int dim, const HVector& h);
bool has_decider(int dim);

// All feasible h-vectors with at most max_facets facets, in lexicographic order.
std::vector<HVector> enumerate_feasible(int dim, long max_facets);
// All candidates (1, h_1, ..., h_{d-1}, 0) with non-negative entries and sum <= max_facets.
std::vector<HVector> enumerate_candidates(int dim, long max_facets);

}  // namespace sposet
