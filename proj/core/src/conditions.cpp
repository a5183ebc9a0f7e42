#include "sposet/conditions.hpp"

#include <functional>
#include <stdexcept>

namespace sposet {

namespace {

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }
std::string val(const Integer& x) { return x.get_str(); }
bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

Condition pass(std::string name, std::string detail) { return {std::move(name), Status::Pass, std::move(detail)}; }
Condition fail(std::string name, std::string detail) { return {std::move(name), Status::Fail, std::move(detail)}; }
Condition skip(std::string name, std::string detail) {
  return {std::move(name), Status::Inapplicable, std::move(detail)};
}

Condition sum_even(const std::string& name, const HVector& h, const std::string& because) {
  const Integer s = h.sum();
  if (is_even(s)) return pass(name, because + "; sum " + val(s) + " is even");
  return fail(name, because + " but sum " + val(s) + " is odd");
}

// First index in [lo, hi] where pred holds, or -1.
int find_index(int lo, int hi, const std::function<bool(int)>& pred) {
  for (int i = lo; i <= hi; ++i) {
    if (pred(i)) return i;
  }
  return -1;
}

Condition nonnegative(const std::string& name, const HVector& h) {
  for (int i = 0; i <= h.d(); ++i) {
    if (h[i] < 0) return fail(name, idx("h", i) + " = " + val(h[i]) + " < 0");
  }
  return pass(name, "all h_i >= 0");
}

Condition shape(const std::string& name, const HVector& h) {
  if (h[0] != 1) return fail(name, "h_0 = " + val(h[0]) + " != 1");
  if (h[h.d()] != 0) return fail(name, idx("h", h.d()) + " = " + val(h[h.d()]) + " != 0");
  return pass(name, "h_0 = 1 and h_d = 0");
}

// h_i >= dh_i for 0 <= i <= hi.
Condition dominates(const std::string& name, const HVector& h, const HVector& dh, int hi) {
  for (int i = 0; i <= hi; ++i) {
    if (h[i] < dh[i]) {
      return fail(name, "dh_1 = 0 but " + idx("h", i) + " = " + val(h[i]) + " < " + idx("dh", i) + " = " + val(dh[i]));
    }
  }
  return pass(name, "dh_1 = 0 and h_i >= dh_i for i <= " + std::to_string(hi));
}

Decision finish(ConditionReport report) {
  return Decision{report.passed() ? Verdict::Feasible : Verdict::Infeasible, std::move(report)};
}

void require_length(int dim, const HVector& h) {
  if (h.d() != dim + 1) {
    throw std::invalid_argument("a " + std::to_string(dim) + "-ball needs an h-vector of length " +
                                std::to_string(dim + 2) + ", got " + std::to_string(h.size()));
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Feasible ? "feasible" : "infeasible"; }

bool ConditionReport::passed() const { return first_failure() == nullptr; }

const Condition* ConditionReport::first_failure() const {
  for (const auto& c : conditions) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

ConditionReport check_necessary(const HVector& h) {
  ConditionReport r;
  auto& out = r.conditions;
  const int d = h.d();
  const char* names[] = {"BC2", "BC3", "MONO", "P-h1", "P-h2", "P-bh0", "P-bh1"};
  if (d < 1 || h[0] != 1) {
    out.push_back(fail("BC1", d < 1 ? "vector too short" : "h_0 = " + val(h[0]) + " != 1"));
    for (const char* n : names) out.push_back(skip(n, "not evaluated"));
    return r;
  }
  {
    Condition c = shape("BC1", h);
    if (c.status == Status::Pass) {
      c = nonnegative("BC1", h);
      if (c.status == Status::Pass) c.detail = "h_0 = 1, h_d = 0, all h_i >= 0";
    }
    out.push_back(c);
  }
  const HVector dh = boundary_h(h);
  const int half = (d - 1) / 2;
  const Integer sum = h.sum();

  {
    int j = find_index(0, half, [&](int i) { return dh[i] < 0; });
    out.push_back(j < 0 ? pass("BC2", "dh_j >= 0 for j <= " + std::to_string(half))
                        : fail("BC2", idx("dh", j) + " = " + val(dh[j]) + " < 0"));
  }
  if (d % 2 == 1 && !is_even(sum)) {
    int j = find_index(0, half, [&](int i) { return dh[i] <= 0; });
    out.push_back(j < 0 ? pass("BC3", "d odd, sum odd, dh_j > 0 for j <= " + std::to_string(half))
                        : fail("BC3", "d odd and sum " + val(sum) + " odd but " + idx("dh", j) + " = " + val(dh[j])));
  } else {
    out.push_back(skip("BC3", d % 2 == 0 ? "d even" : "sum even"));
  }

  const bool dh1_zero = d >= 2 && dh[1] == 0;
  out.push_back(dh1_zero ? dominates("MONO", h, dh, d - 1) : skip("MONO", "dh_1 != 0"));

  const int zero_dh = find_index(1, d - 2, [&](int k) { return dh[k] == 0; });
  for (int which : {1, 2}) {
    const std::string name = which == 1 ? "P-h1" : "P-h2";
    if (d > which && h[which] == 0 && zero_dh >= 0) {
      out.push_back(sum_even(name, h, idx("h", which) + " = 0 and " + idx("dh", zero_dh) + " = 0"));
    } else {
      out.push_back(skip(name, "hypothesis does not hold"));
    }
  }

  const int zero_h = find_index(1, d - 1, [&](int k) { return h[k] == 0; });
  if (dh1_zero && zero_h >= 0) {
    out.push_back(sum_even("P-bh0", h, "dh_1 = 0 and " + idx("h", zero_h) + " = 0"));
  } else {
    out.push_back(skip("P-bh0", "hypothesis does not hold"));
  }

  const int zero_dh2 = find_index(2, d - 2, [&](int k) { return dh[k] == 0; });
  if (d >= 2 && dh[1] == 1 && zero_dh2 >= 0 && zero_h >= 0) {
    out.push_back(sum_even("P-bh1", h,
                           "dh_1 = 1, " + idx("dh", zero_dh2) + " = 0 and " + idx("h", zero_h) + " = 0"));
  } else {
    out.push_back(skip("P-bh1", "hypothesis does not hold"));
  }
  return r;
}

Decision decide_dim3(const HVector& h) {
  require_length(3, h);
  ConditionReport r;
  auto& out = r.conditions;
  out.push_back(shape("dim3-shape", h));
  out.push_back(nonnegative("dim3-clause1", h));
  out.push_back(h[3] <= h[1] + 1 ? pass("dim3-clause2", "h_3 <= h_1 + 1")
                                 : fail("dim3-clause2", "h_3 = " + val(h[3]) + " > h_1 + 1 = " + val(h[1] + 1)));
  if (h[1] == 0 && h[3] == 1) {
    out.push_back(is_even(h[2]) ? pass("dim3-clause3", "h_1 = 0, h_3 = 1 and h_2 is even")
                                : fail("dim3-clause3", "h_1 = 0 and h_3 = 1 but h_2 = " + val(h[2]) + " is odd"));
  } else {
    out.push_back(skip("dim3-clause3", "not (h_1 = 0 and h_3 = 1)"));
  }
  return finish(std::move(r));
}

Decision decide_dim4(const HVector& h) {
  require_length(4, h);
  ConditionReport r;
  auto& out = r.conditions;
  out.push_back(shape("dim4-shape", h));
  out.push_back(nonnegative("dim4-clause1", h));
  if (h[4] > h[1] + 1) {
    out.push_back(fail("dim4-clause2", "h_4 = " + val(h[4]) + " > h_1 + 1 = " + val(h[1] + 1)));
  } else if (h[4] == h[1] + 1 && !is_even(h[2] - h[3])) {
    out.push_back(fail("dim4-clause2", "h_4 = h_1 + 1 but h_2 - h_3 = " + val(h[2] - h[3]) + " is odd"));
  } else {
    out.push_back(pass("dim4-clause2", "h_4 <= h_1 + 1, with h_2 - h_3 even at equality"));
  }
  const Integer lhs = h[3] + h[4];
  const Integer rhs = h[1] + h[2] + 1;
  out.push_back(lhs <= rhs ? pass("dim4-clause3", "h_3 + h_4 <= h_1 + h_2 + 1")
                           : fail("dim4-clause3", "h_3 + h_4 = " + val(lhs) + " > h_1 + h_2 + 1 = " + val(rhs)));
  return finish(std::move(r));
}

Decision decide_dim5(const HVector& h) {
  require_length(5, h);
  ConditionReport r;
  auto& out = r.conditions;
  out.push_back(shape("dim5-shape", h));
  out.push_back(nonnegative("dim5-clause1", h));
  const HVector dh = boundary_h(h);
  if (dh[1] < 0) {
    out.push_back(fail("dim5-clause2", "dh_1 = " + val(dh[1]) + " < 0"));
  } else if (dh[1] == 0) {
    Condition c = dominates("dim5-clause2", h, dh, 5);
    const int j = find_index(1, 4, [&](int k) { return h[k] == 0; });
    if (c.status == Status::Pass && j >= 0) {
      c = sum_even("dim5-clause2", h, "dh_1 = 0 and " + idx("h", j) + " = 0");
    }
    out.push_back(c);
  } else {
    out.push_back(pass("dim5-clause2", "dh_1 = " + val(dh[1]) + " > 0"));
  }
  if (dh[2] < 0) {
    out.push_back(fail("dim5-clause3", "dh_2 = " + val(dh[2]) + " < 0"));
  } else if (dh[2] == 0 && (h[1] == 0 || h[2] == 0)) {
    out.push_back(sum_even("dim5-clause3", h, std::string("dh_2 = 0 and ") + (h[1] == 0 ? "h_1" : "h_2") + " = 0"));
  } else {
    out.push_back(pass("dim5-clause3", "dh_2 = " + val(dh[2]) + " >= 0"));
  }
  return finish(std::move(r));
}

Decision decide_dim6(const HVector& h) {
  require_length(6, h);
  ConditionReport r;
  auto& out = r.conditions;
  out.push_back(shape("dim6-shape", h));
  out.push_back(nonnegative("dim6-clause1", h));
  const HVector dh = boundary_h(h);
  const int neg = find_index(1, 3, [&](int i) { return dh[i] < 0; });
  out.push_back(neg < 0 ? pass("dim6-clause2", "dh_i >= 0 for 1 <= i <= 3")
                        : fail("dim6-clause2", idx("dh", neg) + " = " + val(dh[neg]) + " < 0"));
  const int zero = find_index(1, 3, [&](int i) { return dh[i] == 0; });
  out.push_back(zero >= 0 ? sum_even("dim6-clause3", h, idx("dh", zero) + " = 0")
                          : skip("dim6-clause3", "no dh_i = 0 for 1 <= i <= 3"));
  out.push_back(dh[1] == 0 ? dominates("dim6-clause4", h, dh, 6) : skip("dim6-clause4", "dh_1 != 0"));
  return finish(std::move(r));
}

bool has_decider(int dim) { return dim >= 3 && dim <= 6; }

Decision decide(int dim, const HVector& h) {
  switch (dim) {
    case 3: return decide_dim3(h);
    case 4: return decide_dim4(h);
    case 5: return decide_dim5(h);
    case 6: return decide_dim6(h);
    default: throw std::invalid_argument("no exact characterization for dimension " + std::to_string(dim));
  }
}

std::vector<HVector> enumerate_candidates(int dim, long max_facets) {
  const int d = dim + 1;
  std::vector<HVector> out;
  if (d < 1 || max_facets < 1) return out;
  std::vector<long> cur(static_cast<std::size_t>(d + 1), 0);
  cur[0] = 1;
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == d) {
      std::vector<Integer> e(cur.begin(), cur.end());
      out.emplace_back(std::move(e));
      return;
    }
    for (long x = 0; x <= left; ++x) {
      cur[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(1, max_facets - 1);
  return out;
}

std::vector<HVector> enumerate_feasible(int dim, long max_facets) {
  if (!has_decider(dim)) throw std::invalid_argument("no exact characterization for dimension " + std::to_string(dim));
  std::vector<HVector> out;
  for (auto& h : enumerate_candidates(dim, max_facets)) {
    if (decide(dim, h).verdict == Verdict::Feasible) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace sposet
