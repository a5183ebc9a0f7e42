// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support.hpp"

#include "sposet/conditions.hpp"
#include "sposet/construct.hpp"
#include "sposet/facering.hpp"
#include "sposet/properties.hpp"
#include "sposet/shelling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sposet;
using Clock = std::chrono::steady_clock;

// Time limits in seconds.
constexpr double kExhaustiveLimit = 600.0;
constexpr double kAnchorLimit = 1.0;
constexpr double kPerComplexHilbertLimit = 60.0;
constexpr double kFuzzLimit = 600.0;
constexpr double kConeLimit = 60.0;

constexpr long kExhaustiveMaxFacets = 10;
constexpr int kHilbertMaxD = 5;
constexpr std::size_t kHilbertMaxFacets = 8;
constexpr int kHilbertSeeds = 3;
constexpr int kFuzzSeeds = 500;
constexpr int kFuzzMaxFacets = 25;
constexpr int kConeSamples = 50;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_problem;
  void fail(const std::string& why) {
    if (ok) first_problem = why;
    ok = false;
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o, double secs, double limit) {
  const bool in_time = limit <= 0 || secs < limit;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s [%s; %.2fs", pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(), secs);
  if (limit > 0) std::printf(", limit %.0fs", limit);
  std::printf("]");
  if (!o.ok) std::printf(" first problem: %s", o.first_problem.c_str());
  if (!in_time) std::printf(" over time limit");
  std::printf("\n");
  std::fflush(stdout);
}

// Shared between criteria 1, 4 and 5.
std::vector<Construction> small_balls;
std::vector<SimplicialPoset> spheres;

void exhaustive() {
  const auto t0 = Clock::now();
  Outcome o;
  long vectors = 0;
  long feasible = 0;
  for (int dim = 3; dim <= 6; ++dim) {
    for (const HVector& h : enumerate_candidates(dim, kExhaustiveMaxFacets)) {
      ++vectors;
      const bool dec = decide(dim, h).verdict == Verdict::Feasible;
      if (dec != check_necessary(h).passed()) o.fail("decider and necessary conditions disagree on " + h.to_string());
      if (!dec) continue;
      ++feasible;
      AutoResult r;
      try {
        r = construct_auto(h);
      } catch (const std::exception& e) {
        o.fail(h.to_string() + ": " + e.what());
        continue;
      }
      if (r.status != AutoStatus::Constructed) {
        o.fail(h.to_string() + " not constructed");
        continue;
      }
      const Construction& c = *r.construction;
      try {
        if (!c.complex.validate().empty()) o.fail(h.to_string() + " invalid complex");
        const ShellingReport rep = verify_shelling(c.complex, c.order);
        if (certify_ball(c.complex, c.order) != Certificate::Ball) o.fail(h.to_string() + " not a ball");
        if (!(h_from_shelling(c.complex, rep) == h)) o.fail(h.to_string() + " shelling h differs");
        BoundaryComplex bd = boundary_complex(c.complex);
        if (!(f_to_h(bd.complex.f_vector()) == boundary_h(h))) o.fail(h.to_string() + " boundary h differs");
        const int d = h.d();
        if (d <= kHilbertMaxD && c.order.size() <= kHilbertMaxFacets) small_balls.push_back(c);
        spheres.push_back(std::move(bd.complex));
      } catch (const std::exception& e) {
        o.fail(h.to_string() + ": " + e.what());
      }
    }
  }
  std::ostringstream s;
  s << vectors << " vectors, " << feasible << " feasible, all built and checked";
  o.detail = s.str();
  report(1, "exhaustive characterization in dims 3-6, sum <= 10", o, seconds_since(t0), kExhaustiveLimit);
}

void anchors() {
  const auto t0 = Clock::now();
  Outcome o;
  const HVector a = test::hv({1, 2, 0, 0, 1, 0});
  if (c_vector(a) != std::vector<int>{0, 1, 1, 4}) o.fail("c-values of (1,2,0,0,1,0)");
  if (a.sum() != 4) o.fail("facet count of (1,2,0,0,1,0)");
  const HVector open = test::hv({1, 1, 1, 5, 1, 1, 1, 2, 1, 0});
  if (!(boundary_h(open) == test::hv({1, 1, 0, 4, 4, 4, 0, 1, 1}))) o.fail("boundary of the open vector");
  if (!check_necessary(open).passed()) o.fail("open vector fails a necessary condition");
  if (construct_auto(open).status != AutoStatus::Unknown) o.fail("open vector is not reported unknown");
  o.detail = "c = (0,1,1,4), a = 4; boundary (1,1,0,4,4,4,0,1,1); open vector passes and stays unknown";
  report(2, "anchor values", o, seconds_since(t0), kAnchorLimit);
}

void checkpoint() {
  const auto t0 = Clock::now();
  Outcome o;
  int checked = 0;
  for (const HVector& h : {test::hv({1, 1, 1, 1, 3, 0, 0}), test::hv({1, 2, 1, 1, 4, 0, 0}),
                           test::hv({1, 1, 2, 3, 4, 0, 0}), test::hv({1, 2, 2, 3, 5, 0, 0}),
                           test::hv({1, 1, 1, 5, 3, 0, 0})}) {
    try {
      const Construction c = construct_dim5(h);
      const HVector want = test::hv({1, 1, 1, h[3].get_si(), 3, 0, 0});
      if (c.checkpoints.size() != 1 || !(c.checkpoints[0] == want)) {
        o.fail(h.to_string() + " checkpoint mismatch");
      }
      const std::size_t h3 = h[3].get_ui();
      // Recompute the intermediate h-vector from the first h_3 + 6 facets.
      std::vector<Integer> counts(7, 0);
      for (std::size_t k = 0; k < h3 + 6; ++k) counts[static_cast<std::size_t>(c.sigma_sizes[k])] += 1;
      if (!(HVector(counts) == want)) o.fail(h.to_string() + " recomputed prefix h differs");
      ++checked;
    } catch (const std::exception& e) {
      o.fail(h.to_string() + ": " + e.what());
    }
  }
  o.detail = std::to_string(checked) + " inputs, prefix h = (1,1,1,h_3,3,0,0)";
  if (checked < 3) o.fail("fewer than 3 inputs checked");
  report(3, "five-ball splice checkpoint", o, seconds_since(t0), 0);
}

void hilbert() {
  const auto t0 = Clock::now();
  Outcome o;
  std::vector<const SimplicialPoset*> cases;
  for (const auto& c : small_balls) cases.push_back(&c.complex);
  std::vector<RandomBall> fuzzed;
  for (int dim = 1; dim <= 4; ++dim) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      fuzzed.push_back(random_shellable_ball(dim, 1 + static_cast<int>(seed + dim) % 8, seed));
    }
  }
  for (const auto& b : fuzzed) cases.push_back(&b.complex);
  std::vector<SimplicialPoset> fuzzed_spheres;
  for (const auto& b : fuzzed) {
    BoundaryComplex bd = boundary_complex(b.complex);
    if (bd.complex.dim() >= 0) fuzzed_spheres.push_back(std::move(bd.complex));
  }
  for (const auto& s : spheres) {
    if (s.dim() + 1 <= kHilbertMaxD && s.facets().size() <= kHilbertMaxFacets) cases.push_back(&s);
  }
  for (const auto& s : fuzzed_spheres) {
    if (s.dim() + 1 <= kHilbertMaxD && s.facets().size() <= kHilbertMaxFacets) cases.push_back(&s);
  }
  double worst = 0;
  long computed = 0;
  for (const SimplicialPoset* p : cases) {
    const auto c0 = Clock::now();
    const HVector h = f_to_h(p->f_vector());
    for (int k = 0; k < kHilbertSeeds; ++k) {
      const std::uint64_t seed = 1 + static_cast<std::uint64_t>(k);
      try {
        const HVector q(quotient_hilbert(*p, random_lsop(*p, seed)));
        if (!(q == h)) o.fail("quotient " + q.to_string() + " != h " + h.to_string());
      } catch (const std::exception& e) {
        o.fail(std::string("quotient failed: ") + e.what());
      }
    }
    ++computed;
    worst = std::max(worst, seconds_since(c0));
  }
  if (worst >= kPerComplexHilbertLimit) o.fail("a complex took " + std::to_string(worst) + "s");
  std::ostringstream s;
  s << computed << " complexes x " << kHilbertSeeds << " seeds, slowest " << worst << "s of " << kPerComplexHilbertLimit
    << "s allowed";
  o.detail = s.str();
  report(4, "quotient Hilbert function equals h (d <= 5, <= 8 facets)", o, seconds_since(t0), 0);
}

void sphere_parity() {
  const auto t0 = Clock::now();
  Outcome o;
  long with_zero = 0;
  std::vector<SimplicialPoset> extra;
  for (int n = 2; n <= 7; ++n) extra.push_back(test::double_simplex(n));
  auto check = [&](const SimplicialPoset& s) {
    const HVector h = f_to_h(s.f_vector());
    bool zero = false;
    for (int i = 1; i < h.d(); ++i) zero = zero || h[static_cast<std::size_t>(i)] == 0;
    if (!zero) return;
    ++with_zero;
    for (const auto& [vs, n] : facets_per_vertex_set(s)) {
      if (n % 2 != 0) {
        o.fail("odd facet count on a vertex set of a sphere with h = " + h.to_string());
        return;
      }
    }
    if (!check_sphere_parity(s).empty()) o.fail("property suite flags sphere with h = " + h.to_string());
  };
  for (const auto& s : spheres) check(s);
  for (const auto& s : extra) {
    if (certify_ball(s, s.facets()) != Certificate::ClosedPseudomanifold) o.fail("two-facet sphere not closed");
    check(s);
  }
  std::ostringstream d;
  d << spheres.size() + extra.size() << " spheres, " << with_zero << " with an interior zero, all even";
  o.detail = d.str();
  report(5, "sphere parity", o, seconds_since(t0), 0);
}

void fuzz() {
  const auto t0 = Clock::now();
  Outcome o;
  long balls = 0;
  long hypotheses = 0;
  for (int dim = 2; dim <= 6; ++dim) {
    for (int seed = 1; seed <= kFuzzSeeds; ++seed) {
      const int facets = 1 + (seed * 7 + dim) % kFuzzMaxFacets;
      try {
        const RandomBall b = random_shellable_ball(dim, facets, static_cast<std::uint64_t>(seed));
        ++balls;
        const HVector h = f_to_h(b.complex.f_vector());
        if (!(h_from_shelling(b.complex, b.order) == h)) o.fail("shelling h differs");
        if (h[static_cast<std::size_t>(h.d())] != 0) o.fail("h_d != 0");
        const HVector dh = boundary_h(h);
        for (int k = 1; k + 1 < h.d(); ++k) {
          if (dh[static_cast<std::size_t>(k)] == 0) {
            ++hypotheses;
            break;
          }
        }
        for (const auto& v : check_ball_properties(b.complex, b.order)) {
          o.fail("dim " + std::to_string(dim) + " seed " + std::to_string(seed) + " " + v.property + ": " + v.detail);
        }
      } catch (const std::exception& e) {
        o.fail("dim " + std::to_string(dim) + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
  }
  std::ostringstream s;
  s << balls << " balls, ridge parity hypothesis met " << hypotheses << " times";
  o.detail = s.str();
  report(6, "fuzzed balls satisfy the property suite", o, seconds_since(t0), kFuzzLimit);
}

void cones() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int k = 1; k <= kConeSamples; ++k) {
    const int dim = 1 + k % 5;
    const RandomBall b = random_shellable_ball(dim, 1 + (k * 3) % 12, static_cast<std::uint64_t>(1000 + k));
    // A fuzzed ball, its boundary sphere, or a sphere from SP, alternating.
    SimplicialPoset p = b.complex;
    if (k % 3 == 1) p = boundary_complex(b.complex).complex;
    if (k % 3 == 2) p = cone_over_boundary(b.complex);
    const HVector h = f_to_h(p.f_vector());
    std::vector<Integer> e = h.entries();
    e.emplace_back(0);
    const SimplicialPoset c = cone(p);
    if (!c.validate().empty()) o.fail("cone invalid");
    if (!(f_to_h(c.f_vector()) == HVector(e))) o.fail("cone h " + f_to_h(c.f_vector()).to_string());
  }
  for (int k = 1; k <= kConeSamples; ++k) {
    const int dim = 1 + k % 5;
    const RandomBall b = random_shellable_ball(dim, 1 + (k * 5) % 14, static_cast<std::uint64_t>(2000 + k));
    const HVector h = f_to_h(b.complex.f_vector());
    const HVector bh = f_to_h(boundary_complex(b.complex).complex.f_vector());
    const SimplicialPoset sp = cone_over_boundary(b.complex);
    if (!sp.validate().empty()) o.fail("SP invalid");
    const HVector got = f_to_h(sp.f_vector());
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Integer want = h[i] + (i == 0 ? Integer(0) : bh[i - 1]);
      if (got[i] != want) o.fail("SP h " + got.to_string() + " at index " + std::to_string(i));
    }
  }
  o.detail = std::to_string(kConeSamples) + " cones, " + std::to_string(kConeSamples) + " cones over boundary";
  report(7, "cone identities", o, seconds_since(t0), kConeLimit);
}

}  // namespace

int main() {
  exhaustive();
  anchors();
  checkpoint();
  hilbert();
  sphere_parity();
  fuzz();
  cones();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
