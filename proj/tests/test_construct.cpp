#include "support.hpp"

#include "sposet/conditions.hpp"
#include "sposet/construct.hpp"
#include "sposet/shelling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace sposet {
namespace {

using test::hv;

// c_k from the counting definition: the smallest j whose prefix sum exceeds k.
std::vector<int> c_by_prefix(const std::vector<long>& h) {
  std::vector<int> out;
  long total = 0;
  for (long x : h) total += x;
  for (long k = 0; k < total; ++k) {
    long run = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
      run += h[j];
      if (k + 1 <= run) {
        out.push_back(static_cast<int>(j));
        break;
      }
    }
  }
  return out;
}

void expect_ball(const Construction& c, const HVector& h) {
  EXPECT_TRUE(c.complex.validate().empty());
  EXPECT_EQ(certify_ball(c.complex, c.order), Certificate::Ball);
  EXPECT_EQ(h_from_shelling(c.complex, c.order), h);
  EXPECT_EQ(f_to_h(c.complex.f_vector()), h);
  EXPECT_EQ(c.sigma_sizes.size(), c.order.size());
  EXPECT_EQ(f_to_h(boundary_complex(c.complex).complex.f_vector()), boundary_h(h));
}

TEST(CVector, Examples) {
  EXPECT_EQ(c_vector(hv({1, 2, 0, 0, 1, 0})), (std::vector<int>{0, 1, 1, 4}));
  EXPECT_EQ(c_vector(hv({1, 0, 0, 0})), (std::vector<int>{0}));
  EXPECT_EQ(c_vector(hv({1, 1, 1, 0})), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(c_vector(hv({0, 1, 1})), PreconditionError);
}

TEST(CVector, MatchesPrefixDefinition) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = static_cast<int>(test::uniform(rng, 1, 9));
    std::vector<long> h{1};
    for (int i = 1; i <= d; ++i) h.push_back(test::uniform(rng, 0, 5));
    const std::vector<int> c = c_vector(HVector(std::vector<Integer>(h.begin(), h.end())));
    EXPECT_EQ(c, c_by_prefix(h));
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    for (int j = 0; j <= d; ++j) EXPECT_EQ(std::count(c.begin(), c.end(), j), h[static_cast<std::size_t>(j)]);
  }
}

TEST(Basic, CaseOneExample) {
  const HVector h = hv({1, 2, 0, 0, 1, 0});
  ASSERT_TRUE(paired_case1_applies(h));
  const Construction c = construct_basic(h);
  EXPECT_EQ(c.method, Method::PairedCase1);
  EXPECT_EQ(c.order.size(), 4U);
  auto sizes = c.sigma_sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{0, 1, 1, 4}));
  expect_ball(c, h);
}

TEST(Basic, SingleSimplex) {
  const Construction c = construct_basic(hv({1, 0, 0, 0, 0}));
  EXPECT_EQ(c.order.size(), 1U);
  EXPECT_EQ(c.complex.f_vector(), test::fv({1, 4, 6, 4, 1}));
}

TEST(Basic, CaseTwoExample) {
  const HVector h = hv({1, 1, 0, 0, 2, 0});
  EXPECT_FALSE(paired_case1_applies(h));
  ASSERT_TRUE(paired_case2_applies(h));
  const Construction c = construct_basic(h);
  EXPECT_EQ(c.method, Method::PairedCase2);
  EXPECT_EQ(c.order.size(), 4U);
  expect_ball(c, h);
}

TEST(Basic, CaseTwoAtBound) {
  // dh = (1,2,0,...) with d = 6 puts the first zero at floor((d-1)/2).
  const HVector h = hv({1, 1, 2, 2, 4, 0, 0});
  ASSERT_EQ(boundary_h(h)[1], 2);
  ASSERT_EQ(boundary_h(h)[2], 0);
  ASSERT_TRUE(paired_case2_applies(h));
  const Construction c = construct_basic(h);
  EXPECT_FALSE(c.notes.empty());
  expect_ball(c, h);
}

TEST(Basic, CaseOneSigmaSizesAreCValues) {
  for (const HVector& h : enumerate_feasible(4, 7)) {
    if (!paired_case1_applies(h)) continue;
    const Construction c = construct_basic(h);
    auto sizes = c.sigma_sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, c_vector(h)) << h.to_string();
  }
}

TEST(Basic, PreconditionsNamed) {
  try {
    construct_basic(hv({1, 0, 3, 1, 0}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_FALSE(std::string(e.what()).empty());
  }
  EXPECT_THROW(construct_basic(hv({1, 0, 2, 2, 0})), PreconditionError);
}

TEST(Nonzero, Examples) {
  const HVector a = hv({1, 2, 1, 2, 0});
  ASSERT_TRUE(nonzero_applies(a));
  const Construction ca = construct_nonzero(a);
  EXPECT_EQ(ca.method, Method::SimplexPrefix);
  EXPECT_EQ(ca.order.size(), 6U);
  expect_ball(ca, a);

  const HVector b = hv({1, 1, 1, 0});
  const Construction cb = construct_nonzero(b);
  EXPECT_EQ(cb.sigma_sizes, (std::vector<int>{0, 1, 2}));
  expect_ball(cb, b);

  const HVector c = hv({1, 1, 1, 1, 0});
  const Construction cc = construct_nonzero(c);
  EXPECT_EQ(cc.order.size(), 4U);
  EXPECT_EQ(cc.complex.num_vertices(), 5U);
  expect_ball(cc, c);
}

TEST(Nonzero, PrefixVertexSets) {
  // The prefix facets are the d-subsets of d + 1 vertices, each missing a different vertex.
  const Construction c = construct_nonzero(hv({1, 1, 1, 1, 0}));
  std::set<std::vector<VertexId>> sets;
  for (FaceId f : c.order) sets.insert(c.complex.vertices(f));
  EXPECT_EQ(sets.size(), 4U);
}

TEST(Nonzero, Rejected) { EXPECT_THROW(construct_nonzero(hv({1, 0, 1, 0})), PreconditionError); }

TEST(FiveBall, Examples) {
  for (const HVector& h : {hv({1, 1, 1, 1, 3, 0, 0}), hv({1, 1, 2, 3, 4, 0, 0}), hv({1, 2, 1, 1, 4, 0, 0})}) {
    ASSERT_TRUE(dim5_applies(h)) << h.to_string();
    const Construction c = construct_dim5(h);
    EXPECT_EQ(c.method, Method::FiveBallSplice);
    EXPECT_EQ(c.order.size(), static_cast<std::size_t>(h.sum().get_si()));
    ASSERT_EQ(c.checkpoints.size(), 1U);
    const long h3 = h[3].get_si();
    EXPECT_EQ(c.checkpoints[0], hv({1, 1, 1, h3, 3, 0, 0}));
    const std::vector<int> splice(c.sigma_sizes.begin() + h3, c.sigma_sizes.begin() + h3 + 6);
    EXPECT_EQ(splice, (std::vector<int>{1, 2, 3, 4, 4, 4}));
    expect_ball(c, h);
  }
}

TEST(FiveBall, Rejected) {
  EXPECT_THROW(construct_dim5(hv({1, 1, 1, 1, 2, 0, 0})), PreconditionError);
  EXPECT_THROW(construct_dim5(hv({1, 1, 1, 2, 3, 0, 0})), PreconditionError);
}

TEST(Auto, Examples) {
  const AutoResult inf = construct_auto(hv({1, 0, 3, 1, 0}));
  EXPECT_EQ(inf.status, AutoStatus::Infeasible);
  ASSERT_NE(inf.conditions.first_failure(), nullptr);
  EXPECT_EQ(inf.conditions.first_failure()->name, "dim3-clause3");

  const AutoResult one = construct_auto(hv({1, 2, 0, 0, 1, 0}));
  ASSERT_EQ(one.status, AutoStatus::Constructed);
  EXPECT_EQ(method_tag(one.construction->method), "thm6.2-case1");

  const AutoResult open = construct_auto(hv({1, 1, 1, 5, 1, 1, 1, 2, 1, 0}));
  EXPECT_EQ(open.status, AutoStatus::Unknown);
  EXPECT_FALSE(open.construction.has_value());
  EXPECT_TRUE(open.conditions.passed());
}

TEST(Auto, MethodTags) {
  EXPECT_EQ(method_tag(Method::PairedCase2), "thm6.2-case2");
  EXPECT_EQ(method_tag(Method::SimplexPrefix), "thm6.3");
  EXPECT_EQ(method_tag(Method::FiveBallSplice), "prop6.4");
  EXPECT_EQ(method_tag(construct_auto(hv({1, 1, 0, 0, 2, 0})).construction->method), "thm6.2-case2");
}

TEST(Auto, HigherDimensionUsesNecessaryConditions) {
  const AutoResult bad = construct_auto(hv({1, 0, 0, 0, 0, 0, 0, 2, 0}));
  EXPECT_FALSE(check_necessary(hv({1, 0, 0, 0, 0, 0, 0, 2, 0})).passed());
  EXPECT_EQ(bad.status, AutoStatus::Infeasible);
  const AutoResult good = construct_auto(hv({1, 3, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(good.status, AutoStatus::Constructed);
  expect_ball(*good.construction, hv({1, 3, 0, 0, 0, 0, 0, 1, 0}));
}

TEST(ConstructProperty, EveryDeciderFeasibleVectorBuilds) {
  for (int dim = 3; dim <= 6; ++dim) {
    for (const HVector& h : enumerate_feasible(dim, 6)) {
      const AutoResult r = construct_auto(h);
      ASSERT_EQ(r.status, AutoStatus::Constructed) << h.to_string();
      expect_ball(*r.construction, h);
    }
  }
}

}  // namespace
}  // namespace sposet
