#include "sposet/construct.hpp"

#include "sposet/shelling.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace sposet {

namespace {

constexpr long kMaxFacets = 200000;

SlotSet low(int c) { return c <= 0 ? 0 : (SlotSet{1} << c) - 1; }
// Slots a..b (1-based, inclusive).
SlotSet range(int a, int b) { return b < a ? 0 : low(b) & ~low(a - 1); }
bool contains(SlotSet s, SlotSet t) { return (s & t) == t; }
bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
std::string val(const Integer& x) { return x.get_str(); }

Applicability yes(std::string why = {}) { return {true, std::move(why)}; }
Applicability no(std::string why) { return {false, std::move(why)}; }

// Common hypotheses: h_0 = 1, h_d = 0, h >= 0, manageable size.
Applicability ball_shape(const HVector& h) {
  const int d = h.d();
  if (d < 1) return no("vector too short");
  if (h[0] != 1) return no("h_0 != 1");
  if (h[d] != 0) return no("h_d != 0");
  for (int i = 0; i <= d; ++i) {
    if (h[i] < 0) return no("h_" + std::to_string(i) + " < 0");
  }
  if (d > kMaxSlots) return no("dimension too large");
  if (h.sum() > kMaxFacets) return no("more than " + std::to_string(kMaxFacets) + " facets");
  return yes();
}

struct Plan {
  bool closing = false;  // case 2
  int n = 0;
  HVector base;  // vector built by the paired shelling proper
};

std::optional<Plan> make_plan(const HVector& h, std::string* why) {
  auto fail = [&](std::string s) -> std::optional<Plan> {
    if (why) *why = std::move(s);
    return std::nullopt;
  };
  if (auto s = ball_shape(h); !s) return fail(s.reason);
  const int d = h.d();
  const int half = (d - 1) / 2;
  const HVector dh = boundary_h(h);
  int n = -1;
  for (int j = 0; j <= half; ++j) {
    if (dh[j] < 0) return fail("dh_" + std::to_string(j) + " = " + val(dh[j]) + " < 0");
    if (dh[j] == 0 && n < 0) n = j;
  }
  if (n < 0) return Plan{false, 0, h};
  if (n == 0) return fail("dh_0 = 0");
  if (!is_even(h.sum())) return fail("dh_" + std::to_string(n) + " = 0 and the sum is odd");
  for (int l = n + 1; l <= d - n - 1; ++l) {
    Integer bound = 0;
    for (int i = 0; i < n; ++i) bound += h[l - i];
    if (dh[l] > bound) {
      return fail("dh_" + std::to_string(l) + " = " + val(dh[l]) + " exceeds " + val(bound));
    }
  }
  HVector base = h;
  base[d - n] -= 1;
  return Plan{true, n, base};
}

Plan require_plan(const HVector& h) {
  std::string why;
  auto p = make_plan(h, &why);
  if (!p) throw PreconditionError("paired shelling does not apply to (" + h.to_string() + "): " + why);
  return *p;
}

// Builds facets one at a time following the paired rules.
class Engine {
 public:
  Engine(SimplicialPoset& p, std::vector<FaceId>& order, int d) : p_(p), order_(order), d_(d) {}

  void start_fresh() { attach(GlueSpec(d_)); }

  // Uses existing faces as the first facet. Missing faces are kNoFace.
  void start_from(std::vector<FaceId> table, std::vector<FaceId> allowed) {
    const SlotSet full = low(d_);
    for (int j = 0; j < d_; ++j) {
      const FaceId f = table[full & ~(SlotSet{1} << j)];
      if (f != kNoFace) stand_in_ridges_.insert(f);
    }
    allowed_.insert(allowed.begin(), allowed.end());
    tables_.push_back(std::move(table));
  }

  int count() const { return static_cast<int>(tables_.size()); }
  const std::vector<FaceId>& table(int k) const { return tables_.at(static_cast<std::size_t>(k - 1)); }

  void even(int cur, int prev) {
    const int i = count() + 1;
    GlueSpec g(d_);
    const SlotSet full = low(d_);
    const SlotSet fresh = low(cur);
    const SlotSet recent = range(prev + 1, cur);
    const SlotSet older = low(prev);
    for (SlotSet s = 1; s < full; ++s) {
      if (contains(s, fresh)) continue;
      if (contains(s, recent) && !contains(s, older)) {
        g.identify(s, lookup(i - 1, s));
      } else {
        g.identify(s, lookup(1, s));
      }
    }
    attach(g);
  }

  void odd(int cur, int partner) {
    const int i = count() + 1;
    if (cur + partner > d_) {
      throw ConstructionError("facet " + std::to_string(i) + ": restriction {" + std::to_string(cur + 1) + ":" +
                              std::to_string(cur + partner) + "} does not fit in " + std::to_string(d_) + " slots");
    }
    GlueSpec g(d_);
    const SlotSet full = low(d_);
    const SlotSet star = range(cur + 1, cur + partner);
    for (SlotSet s = 1; s < full; ++s) {
      if (!contains(s, star)) g.identify(s, lookup(i - 1, s));
    }
    attach(g);
  }

  void run(const std::vector<int>& c) {
    const int a = static_cast<int>(c.size());
    for (int i = 2; i <= a; i += 2) {
      even(c[static_cast<std::size_t>(i / 2)], c[static_cast<std::size_t>(i / 2 - 1)]);
      if (i + 1 <= a) odd(c[static_cast<std::size_t>(i / 2)], c[static_cast<std::size_t>(a - i / 2)]);
    }
  }

  void run(const Plan& plan) {
    const auto c = c_vector(plan.base);
    run(c);
    if (plan.closing) even(d_ - plan.n, c[static_cast<std::size_t>((c.size() - 1) / 2)]);
  }

 private:
  FaceId lookup(int k, SlotSet s) const {
    const FaceId f = table(k).at(s);
    if (f == kNoFace) {
      throw ConstructionError("facet " + std::to_string(count() + 1) + " needs face " + slot_set_string(s) +
                              " of facet " + std::to_string(k) + ", which does not exist");
    }
    return f;
  }

  void attach(const GlueSpec& g) {
    const int i = count() + 1;
    for (auto [s, f] : g.identifications()) {
      if (std::popcount(s) != d_ - 1) continue;
      int n = 0;
      for (FaceId c : p_.cofaces(f)) n += p_.rank(c) == d_;
      if (n != 1) {
        throw ConstructionError("facet " + std::to_string(i) + " glues along face " + std::to_string(f) +
                                ", which already lies in " + std::to_string(n) + " facets");
      }
      if (!allowed_.empty() && stand_in_ridges_.count(f) && !allowed_.count(f)) {
        throw ConstructionError("facet " + std::to_string(i) + " uses face " + std::to_string(f) +
                                " of the first facet, which is not available");
      }
    }
    Attachment a;
    try {
      a = p_.attach_facet(g);
    } catch (const GlueError& e) {
      throw ConstructionError("facet " + std::to_string(i) + ": " + e.what());
    }
    order_.push_back(a.facet);
    tables_.push_back(std::move(a.slot_faces));
  }

  SimplicialPoset& p_;
  std::vector<FaceId>& order_;
  int d_;
  std::vector<std::vector<FaceId>> tables_;
  std::set<FaceId> stand_in_ridges_;
  std::set<FaceId> allowed_;
};

void finalize(Construction& c, const HVector& h) {
  ShellingReport report;
  try {
    if (certify_ball(c.complex, c.order) != Certificate::Ball) {
      throw ConstructionError("result is a closed pseudomanifold, not a ball");
    }
    report = verify_shelling(c.complex, c.order);
  } catch (const ShellingError& e) {
    throw ConstructionError(std::string("result is not shellable: ") + e.what());
  } catch (const ComplexError& e) {
    throw ConstructionError(std::string("result is not a ball: ") + e.what());
  }
  const HVector got = h_from_shelling(c.complex, report);
  if (!(got == h)) {
    throw ConstructionError("built h-vector (" + got.to_string() + ") differs from target (" + h.to_string() + ")");
  }
  const HVector from_f = f_to_h(c.complex.f_vector());
  if (!(from_f == h)) {
    throw ConstructionError("face counts give h-vector (" + from_f.to_string() + "), target (" + h.to_string() + ")");
  }
  c.sigma_sizes.clear();
  for (const auto& s : report.steps) c.sigma_sizes.push_back(static_cast<int>(s.sigma.size()));
}

HVector make_h(std::initializer_list<Integer> xs) { return HVector(std::vector<Integer>(xs)); }

}  // namespace

std::string method_tag(Method m) {
  switch (m) {
    case Method::PairedCase1: return "thm6.2-case1";
    case Method::PairedCase2: return "thm6.2-case2";
    case Method::SimplexPrefix: return "thm6.3";
    case Method::FiveBallSplice: return "prop6.4";
  }
  return "?";
}

std::string to_string(AutoStatus s) {
  switch (s) {
    case AutoStatus::Constructed: return "constructed";
    case AutoStatus::Infeasible: return "infeasible";
    case AutoStatus::Unknown: return "unknown";
  }
  return "?";
}

std::vector<int> c_vector(const HVector& h) {
  if (h.empty() || h[0] != 1) throw PreconditionError("c-vector needs h_0 = 1");
  for (const auto& x : h.entries()) {
    if (x < 0) throw PreconditionError("c-vector needs non-negative entries");
  }
  if (h.sum() > kMaxFacets) throw PreconditionError("too many facets");
  const long a = h.sum().get_si();
  std::vector<int> c(static_cast<std::size_t>(a), 0);
  long k = 1;
  Integer running = 0;
  for (int j = 0; j <= h.d(); ++j) {
    running += h[j];
    for (; k < a && running >= k + 1; ++k) c[static_cast<std::size_t>(k)] = j;
  }
  return c;
}

Applicability paired_case1_applies(const HVector& h) {
  std::string why;
  auto p = make_plan(h, &why);
  if (!p) return no(why);
  if (p->closing) return no("dh_" + std::to_string(p->n) + " = 0");
  return yes("dh_j > 0 for j <= floor((d-1)/2)");
}

Applicability paired_case2_applies(const HVector& h) {
  std::string why;
  auto p = make_plan(h, &why);
  if (!p) return no(why);
  if (!p->closing) return no("all dh_j > 0");
  return yes("smallest zero dh_" + std::to_string(p->n));
}

Applicability basic_applies(const HVector& h) {
  std::string why;
  auto p = make_plan(h, &why);
  if (!p) return no(why);
  return yes(p->closing ? "case 2" : "case 1");
}

namespace {

int nonzero_prefix(const HVector& h, std::string* why) {
  auto fail = [&](std::string s) {
    if (why) *why = std::move(s);
    return -1;
  };
  const int d = h.d();
  if (d < 2) return fail("vector too short");
  if (h[0] != 1) return fail("h_0 != 1");
  int k = 0;
  for (int j = 1; j <= d; ++j) {
    if (h[j] < 0) return fail("h_" + std::to_string(j) + " < 0");
    if (h[j] > 0) {
      if (k != j - 1) return fail("h_" + std::to_string(k + 1) + " = 0 before a later non-zero entry");
      k = j;
    }
  }
  if (k < 1) return fail("h_1 = 0");
  if (k > d - 1) return fail("h_d != 0");
  return k;
}

HVector reduce_prefix(const HVector& h, int k) {
  HVector r = h;
  for (int j = 1; j <= k; ++j) r[j] -= 1;
  return r;
}

}  // namespace

Applicability nonzero_applies(const HVector& h) {
  std::string why;
  const int k = nonzero_prefix(h, &why);
  if (k < 0) return no(why);
  const HVector r = reduce_prefix(h, k);
  if (!make_plan(r, &why)) return no("reduced vector (" + r.to_string() + "): " + why);
  return yes("h_j > 0 exactly for j <= " + std::to_string(k));
}

Applicability dim5_applies(const HVector& h) {
  if (h.d() != 6) return no("needs a vector of length 7");
  if (h[0] != 1) return no("h_0 != 1");
  if (h[5] != 0 || h[6] != 0) return no("h_5 and h_6 must be 0");
  for (int i = 1; i <= 4; ++i) {
    if (h[i] < 0) return no("h_" + std::to_string(i) + " < 0");
  }
  if (h[1] == 0 || h[2] == 0) return no("h_1 and h_2 must be non-zero");
  if (1 + h[1] + h[2] - h[4] != 0) return no("dh_2 != 0");
  if (is_even(h.sum())) return no("sum is even");
  if (h.sum() > kMaxFacets) return no("too many facets");
  return yes("dh_2 = 0, odd sum, h_5 = 0");
}

Construction construct_basic(const HVector& h) {
  const Plan plan = require_plan(h);
  const int d = h.d();
  Construction out;
  out.method = plan.closing ? Method::PairedCase2 : Method::PairedCase1;
  if (plan.closing && plan.n == (d - 1) / 2) {
    out.notes.push_back("closing facet with n = floor((d-1)/2) = " + std::to_string(plan.n));
  }
  Engine e(out.complex, out.order, d);
  e.start_fresh();
  e.run(plan);
  finalize(out, h);
  return out;
}

Construction construct_nonzero(const HVector& h) {
  std::string why;
  const int k = nonzero_prefix(h, &why);
  if (k < 0) throw PreconditionError("simplex prefix does not apply to (" + h.to_string() + "): " + why);
  const HVector reduced = reduce_prefix(h, k);
  const Plan plan = require_plan(reduced);
  const int d = h.d();
  Construction out;
  out.method = Method::SimplexPrefix;
  if (plan.closing) out.notes.push_back("reduced vector (" + reduced.to_string() + ") uses a closing facet");

  // Faces of the simplicial prefix keyed by label set; label l is bit l - 1.
  std::map<std::uint32_t, FaceId> by_labels{{0, kEmptyFace}};
  auto label_mask = [](const std::vector<int>& labels, SlotSet s) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (s >> j & 1U) m |= std::uint32_t{1} << (labels[j] - 1);
    }
    return m;
  };
  const SlotSet full = low(d);
  for (int i = 0; i <= k; ++i) {
    std::vector<int> labels;
    for (int l = 1; l <= d + 1; ++l) {
      if (l != i + 1) labels.push_back(l);
    }
    GlueSpec g(d);
    for (SlotSet s = 1; s < full; ++s) {
      auto it = by_labels.find(label_mask(labels, s));
      if (it != by_labels.end()) g.identify(s, it->second);
    }
    Attachment a = out.complex.attach_facet(g);
    out.order.push_back(a.facet);
    for (SlotSet s = 0; s <= full; ++s) by_labels.emplace(label_mask(labels, s), a.slot_faces[s]);
  }

  std::vector<int> stand_labels;
  for (int j = 1; j <= d; ++j) stand_labels.push_back(j <= k + 1 ? j : j + 1);
  std::vector<FaceId> stand(std::size_t{1} << d, kNoFace);
  for (SlotSet s = 0; s < full; ++s) {
    auto it = by_labels.find(label_mask(stand_labels, s));
    if (it != by_labels.end()) stand[s] = it->second;
  }
  Engine e(out.complex, out.order, d);
  e.start_from(std::move(stand), {});
  e.run(plan);
  finalize(out, h);
  return out;
}

Construction construct_dim5(const HVector& h) {
  if (auto a = dim5_applies(h); !a) {
    throw PreconditionError("five-ball splice does not apply to (" + h.to_string() + "): " + a.reason);
  }
  const int d = 6;
  const Integer h3 = h[3];
  Construction out;
  out.method = Method::FiveBallSplice;

  Engine first(out.complex, out.order, d);
  first.start_fresh();
  first.run(require_plan(make_h({1, 0, 0, h3 - 1, 0, 0, 0})));
  const int last = first.count();

  struct Labeled {
    std::vector<int> labels;
    std::vector<FaceId> table;
  };
  // Source -1 is the first facet, -2 the last facet built so far, k >= 0 the k-th new facet.
  struct Ident {
    int source;
    std::vector<int> labels;
  };
  struct Step {
    std::vector<int> labels;
    std::vector<Ident> idents;
  };
  const std::vector<Step> steps = {
      {{1, 2, 3, 4, 5, 7}, {{-1, {1, 2, 3, 4, 5}}}},
      {{1, 2, 3, 4, 6, 7}, {{-1, {1, 2, 3, 4, 6}}, {0, {1, 2, 3, 4, 7}}}},
      {{1, 2, 3, 5, 6, 7}, {{-1, {1, 2, 3, 5, 6}}, {0, {1, 2, 3, 5, 7}}, {1, {1, 2, 3, 6, 7}}}},
      {{1, 2, 4, 5, 6, 7},
       {{-2, {4, 5, 6}}, {-2, {1, 2, 4, 5, 6}}, {0, {1, 2, 4, 5, 7}}, {1, {1, 2, 4, 6, 7}}, {2, {1, 2, 5, 6, 7}}}},
      {{1, 3, 4, 5, 6, 7},
       {{-2, {4, 5, 6}}, {-2, {1, 3, 4, 5, 6}}, {0, {1, 3, 4, 5, 7}}, {1, {1, 3, 4, 6, 7}}, {2, {1, 3, 5, 6, 7}}}},
      {{2, 3, 4, 5, 6, 7},
       {{-2, {4, 5, 6}}, {-2, {2, 3, 4, 5, 6}}, {0, {2, 3, 4, 5, 7}}, {1, {2, 3, 4, 6, 7}}, {2, {2, 3, 5, 6, 7}}}},
  };

  const Labeled head{{1, 2, 3, 4, 5, 6}, first.table(1)};
  const Labeled tail{{1, 2, 3, 4, 5, 6}, first.table(last)};
  std::vector<Labeled> made;
  std::map<int, VertexId> vertex_of;
  for (int l = 1; l <= 6; ++l) {
    vertex_of[l] = out.complex.vertices(head.table[SlotSet{1} << (l - 1)])[0];
  }
  auto slots_of = [](const std::vector<int>& labels, const std::vector<int>& subset) {
    SlotSet s = 0;
    for (int l : subset) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw ConstructionError("label " + std::to_string(l) + " not on facet");
      s |= SlotSet{1} << (it - labels.begin());
    }
    return s;
  };

  for (const Step& step : steps) {
    GlueSpec g(d);
    for (std::size_t j = 0; j < step.labels.size(); ++j) {
      auto it = vertex_of.find(step.labels[j]);
      if (it != vertex_of.end()) g.identify(SlotSet{1} << j, out.complex.vertex_face(it->second));
    }
    for (const Ident& id : step.idents) {
      const Labeled& src = id.source == -1 ? head : id.source == -2 ? tail : made.at(static_cast<std::size_t>(id.source));
      const FaceId f = src.table.at(slots_of(src.labels, id.labels));
      const SlotSet s = slots_of(step.labels, id.labels);
      if (std::popcount(s) == d - 1) {
        int n = 0;
        for (FaceId c : out.complex.cofaces(f)) n += out.complex.rank(c) == d;
        if (n != 1) throw ConstructionError("splice glues along face " + std::to_string(f) + " lying in " +
                                            std::to_string(n) + " facets");
      }
      g.identify(s, f);
    }
    Attachment a;
    try {
      a = out.complex.attach_facet(g);
    } catch (const GlueError& e) {
      throw ConstructionError(std::string("splice facet: ") + e.what());
    }
    for (std::size_t j = 0; j < step.labels.size(); ++j) vertex_of.emplace(step.labels[j], a.slot_vertex[j]);
    out.order.push_back(a.facet);
    made.push_back({step.labels, std::move(a.slot_faces)});
  }

  const ShellingReport mid = verify_shelling(out.complex, out.order);
  const HVector checkpoint = h_from_shelling(out.complex, mid);
  out.checkpoints.push_back(checkpoint);
  const HVector expected = make_h({1, 1, 1, h3, 3, 0, 0});
  if (!(checkpoint == expected)) {
    throw ConstructionError("splice checkpoint (" + checkpoint.to_string() + ") != (" + expected.to_string() + ")");
  }
  const int sizes[] = {1, 2, 3, 4, 4, 4};
  for (int j = 0; j < 6; ++j) {
    const auto& s = mid.steps[mid.steps.size() - 6 + static_cast<std::size_t>(j)];
    if (static_cast<int>(s.sigma.size()) != sizes[j]) {
      throw ConstructionError("splice facet " + std::to_string(j + 1) + " has |sigma| = " +
                              std::to_string(s.sigma.size()));
    }
  }

  const Labeled& joint = made.back();
  const SlotSet full = low(d);
  std::vector<FaceId> allowed = {joint.table[full & ~SlotSet{1}], joint.table[full & ~SlotSet{2}]};
  Engine rest(out.complex, out.order, d);
  rest.start_from(joint.table, allowed);
  rest.run(require_plan(make_h({1, h[1] - 1, h[2] - 1, 0, h[4] - 3, 0, 0})));
  finalize(out, h);
  return out;
}

AutoResult construct_auto(const HVector& h) {
  AutoResult r;
  const int dim = h.d() - 1;
  const bool exact = has_decider(dim);
  if (exact) {
    Decision dec = decide(dim, h);
    r.conditions = std::move(dec.report);
    if (dec.verdict == Verdict::Infeasible) {
      r.status = AutoStatus::Infeasible;
      return r;
    }
  } else {
    r.conditions = check_necessary(h);
    if (!r.conditions.passed()) {
      r.status = AutoStatus::Infeasible;
      return r;
    }
  }
  struct Candidate {
    Method method;
    std::function<Applicability(const HVector&)> applies;
    std::function<Construction(const HVector&)> build;
  };
  const Candidate candidates[] = {
      {Method::PairedCase1, paired_case1_applies, construct_basic},
      {Method::PairedCase2, paired_case2_applies, construct_basic},
      {Method::SimplexPrefix, nonzero_applies, construct_nonzero},
      {Method::FiveBallSplice, dim5_applies, construct_dim5},
  };
  for (const auto& c : candidates) {
    Applicability a = c.applies(h);
    if (a) {
      r.construction = c.build(h);
      r.status = AutoStatus::Constructed;
      return r;
    }
    r.notes.push_back(method_tag(c.method) + ": " + a.reason);
  }
  if (exact) {
    throw ConstructionError("(" + h.to_string() + ") is feasible but no construction applies");
  }
  r.status = AutoStatus::Unknown;
  return r;
}

}  // namespace sposet
