#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "lorentz/dressian.hpp"
#include "oracles.hpp"

using namespace lorentz;

namespace {

std::size_t idx(const MConvexSet& J, std::initializer_list<int> elems) {
  return *J.index_of(indicator(J.n(), elems));
}

std::vector<Rational> split_12_34(const MConvexSet& J) {
  std::vector<Rational> nu(J.size(), 0);
  nu[idx(J, {0, 1})] = 1;
  nu[idx(J, {2, 3})] = 1;
  return nu;
}

std::set<std::string> cells(const Subdivision& s) {
  std::set<std::string> out;
  for (const auto& c : s.cells) out.insert(c.to_string());
  return out;
}

}  // namespace

TEST(MConvexFunction, Examples) {
  const auto J = uniform_matroid(2, 4);
  EXPECT_TRUE(is_m_convex_function(std::vector<Rational>(J.size(), 0), J).ok);
  EXPECT_TRUE(is_m_convex_function(split_12_34(J), J).ok);
  std::vector<Rational> bad(J.size(), 0);
  bad[idx(J, {0, 1})] = -1;
  const auto c = is_m_convex_function(bad, J);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_THROW(is_m_convex_function(std::vector<Rational>(3, 0), J), InputError);
}

TEST(MConvexFunction, ToPolynomial) {
  const auto J = uniform_matroid(2, 4);
  EXPECT_TRUE(dressian_to_polynomial({J, std::vector<Rational>(J.size(), 0)}, 1.0) ==
              generating_polynomial(J).to_float());
  const auto f = dressian_to_polynomial({J, split_12_34(J)}, 1.0);
  EXPECT_NEAR(f.coeff(J[idx(J, {0, 1})]), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(f.coeff(J[idx(J, {0, 2})]), 1.0, 1e-15);
  for (double t : {1.0, 5.0, 20.0}) {
    EXPECT_TRUE(is_lorentzian(dressian_to_polynomial({J, split_12_34(J)}, t)).lorentzian) << t;
  }
}

TEST(MConvexFunction, NonMConvexFailsForLargeScale) {
  const auto J = uniform_matroid(2, 4);
  std::vector<Rational> bad(J.size(), 0);
  bad[idx(J, {0, 1})] = -1;
  bool failed = false;
  for (double t : {1.0, 5.0, 20.0, 50.0}) failed = failed || !is_lorentzian(dressian_to_polynomial({J, bad}, t)).lorentzian;
  EXPECT_TRUE(failed);
}

TEST(Subdivision, Examples) {
  const auto J = uniform_matroid(2, 4);
  EXPECT_EQ(induced_subdivision(J, std::vector<Rational>(J.size(), 0)).cells.size(), 1u);
  const auto s = induced_subdivision(J, split_12_34(J));
  ASSERT_EQ(s.cells.size(), 2u);
  EXPECT_EQ(s.cells[0].count(), 5u);
  EXPECT_EQ(s.cells[1].count(), 5u);
  PointMask square;
  for (auto e : {idx(J, {0, 2}), idx(J, {0, 3}), idx(J, {1, 2}), idx(J, {1, 3})}) square.set(e);
  EXPECT_EQ(s.cells[0] & s.cells[1], square);

  const auto K = uniform_matroid(2, 5);
  std::vector<Rational> nu(K.size(), 0);
  nu[idx(K, {0, 1})] = 1;
  const auto t = induced_subdivision(K, nu);
  ASSERT_EQ(t.cells.size(), 2u);
  for (const auto& c : t.cells) EXPECT_TRUE(oracle::m_convex(K.subset(c).points()));
  EXPECT_THROW(induced_subdivision(J, std::vector<Rational>{-1, 0, 0, 0, 0, 0}), PreconditionError);
}

TEST(Subdivision, ScalingAndLinearInvariance) {
  gen::Rng rng(41);
  const auto J = uniform_matroid(2, 5);
  const auto rays = enumerate_rays(J).rays;
  for (int k = 0; k < 50; ++k) {
    const auto nu = gen::m_convex_function(rng, J, rays);
    auto mu = nu;
    Rational a(gen::uniform_int(rng, 1, 5), gen::uniform_int(rng, 1, 3));
    a.canonicalize();
    for (std::size_t p = 0; p < J.size(); ++p) {
      mu[p] *= a;
      for (int i = 0; i < J.n(); ++i) mu[p] += (i - 2) * J[p][i];
    }
    EXPECT_EQ(cells(induced_subdivision(J, nu)), cells(induced_subdivision(J, mu)));
  }
}

TEST(Rays, Examples) {
  auto e = enumerate_rays(uniform_matroid(2, 4));
  EXPECT_TRUE(e.complete);
  EXPECT_EQ(e.rays.size(), 3u);
  EXPECT_EQ(e.reduced_dim, 2);
  e = enumerate_rays(fano_matroid());
  EXPECT_TRUE(e.complete);
  EXPECT_TRUE(e.rays.empty());
  e = enumerate_rays(elliptic_matroid(7));
  EXPECT_TRUE(e.complete);
  EXPECT_EQ(e.rays.size(), 3u);
  EXPECT_TRUE(is_rigid(fano_matroid()));
  EXPECT_TRUE(is_rigid(elliptic_matroid(5)));
  EXPECT_FALSE(is_rigid(uniform_matroid(2, 4)));
}

TEST(Rays, U25MatchesSplitOracle) {
  const auto J = uniform_matroid(2, 5);
  const auto e = enumerate_rays(J);
  const auto splits = oracle::split_functions(J);
  ASSERT_EQ(e.rays.size(), 10u);
  ASSERT_EQ(splits.size(), 10u);
  for (const auto& s : splits) EXPECT_TRUE(oracle::m_convex_function(J.points(), s));
  for (const auto& r : e.rays) {
    int matches = 0;
    for (const auto& s : splits) matches += oracle::equivalent_rays(J, r.values, s);
    EXPECT_EQ(matches, 1);
  }
}

TEST(Rays, RepresentativesLieInV) {
  for (const auto& J : {uniform_matroid(2, 5), elliptic_matroid(7), from_nonbases(5, 2, {{3, 4}})}) {
    const auto v = v_space(J);
    for (const auto& r : enumerate_rays(J).rays) {
      EXPECT_TRUE(v.contains(r.values));
      EXPECT_TRUE(oracle::m_convex_function(J.points(), r.values));
      EXPECT_EQ(*std::min_element(r.values.begin(), r.values.end()), 0);
    }
  }
}

TEST(Rays, Caps) {
  RayOptions opt;
  opt.max_dim = 1;
  EXPECT_THROW(enumerate_rays(uniform_matroid(2, 4), opt), ResourceError);
  opt = {};
  opt.cone_budget = 1;
  EXPECT_THROW(enumerate_rays(uniform_matroid(2, 5), opt), ResourceError);
}

TEST(Rays, FanDimension) {
  const auto J = uniform_matroid(2, 4);
  EXPECT_TRUE(is_fan_one_dimensional(J, enumerate_rays(J).rays));
  const auto K = uniform_matroid(2, 5);
  EXPECT_FALSE(is_fan_one_dimensional(K, enumerate_rays(K).rays));
  EXPECT_FALSE(enumerate_rays(K).one_dimensional());
  EXPECT_TRUE(enumerate_rays(elliptic_matroid(7)).one_dimensional());
}

TEST(Rays, FixtureVerification) {
  const auto J = uniform_matroid(2, 4);
  auto rays = enumerate_rays(J).rays;
  const auto checked = verify_fixture_rays(J, rays);
  EXPECT_FALSE(checked.complete);
  EXPECT_EQ(checked.rays.size(), 3u);
  auto dup = rays;
  dup.push_back(rays[0]);
  for (auto& x : dup.back().values) x *= 2;
  EXPECT_THROW(verify_fixture_rays(J, dup), PreconditionError);
  std::vector<MConvexFunction> bad = {{J, {-1, 0, 0, 0, 0, 0}}};
  EXPECT_THROW(verify_fixture_rays(J, bad), PreconditionError);
  std::vector<MConvexFunction> linear = {{J, {1, 1, 1, 1, 1, 1}}};
  EXPECT_THROW(verify_fixture_rays(J, linear), PreconditionError);
}
