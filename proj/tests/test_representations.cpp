#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "lorentz/grassmann.hpp"
#include "lorentz/representations.hpp"

using namespace lorentz;

namespace {

// Rank 3 on six elements with elements 2 and 3 parallel.
MConvexSet parallel_u35() {
  std::vector<std::vector<int>> nb;
  for (int k = 0; k < 6; ++k) {
    if (k == 2 || k == 3) continue;
    std::vector<int> t = {2, 3, k};
    std::sort(t.begin(), t.end());
    nb.push_back(t);
  }
  return from_nonbases(6, 3, nb);
}

std::size_t idx(const MConvexSet& J, std::initializer_list<int> elems) {
  return *J.index_of(indicator(J.n(), elems));
}

bool contains(const std::vector<Binomial>& bins, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  auto norm = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  auto p = norm(a, b), q = norm(c, d);
  if (q < p) std::swap(p, q);
  return std::find(bins.begin(), bins.end(), Binomial{p, q}) != bins.end();
}

std::vector<MConvexSet> fixtures() {
  return {uniform_matroid(2, 4), uniform_matroid(2, 5), uniform_matroid(3, 6), elliptic_matroid(5),
          elliptic_matroid(7), fano_matroid(), full_simplex(3, 2), parallel_u35(),
          from_nonbases(4, 2, {{2, 3}})};
}

}  // namespace

TEST(PlueckerRelations, ThreeTermCounts) {
  const auto r = three_term_relations(uniform_matroid(2, 4));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].supported_count(), 3);
  EXPECT_EQ(three_term_relations(uniform_matroid(2, 5)).size(), 5u);
  EXPECT_EQ(three_term_relations(full_simplex(2, 2)).size(), 1u);
}

TEST(PlueckerRelations, FullRelations) {
  for (const auto& J : fixtures()) {
    const auto a = full_relations(J, 2), b = three_term_relations(J);
    ASSERT_EQ(a.size(), b.size()) << J.label();
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(detail::relation_key(a[k]), detail::relation_key(b[k]));
  }
  EXPECT_FALSE(full_relations(full_simplex(2, 3), 3).empty());
  const auto J = parallel_u35();
  bool found = false;
  for (const auto& r : full_relations(J, 3)) {
    auto pairs = r.supported_pairs();
    if (pairs.size() != 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> want = {
        {idx(J, {0, 1, 2}), idx(J, {3, 4, 5})}, {idx(J, {0, 1, 3}), idx(J, {2, 4, 5})}};
    for (auto* v : {&pairs, &want}) {
      for (auto& p : *v) {
        if (p.second < p.first) std::swap(p.first, p.second);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    std::sort(want.begin(), want.end());
    found = found || pairs == want;
  }
  EXPECT_TRUE(found);
}

TEST(Representations, WeakExamples) {
  const auto J = uniform_matroid(2, 4);
  std::vector<Rational> ones(J.size(), 1);
  EXPECT_TRUE(is_weak_rep(ones, J, QParameter::finite(Rational(1))));
  EXPECT_TRUE(is_weak_rep(ones, J, QParameter::tropical()));
  auto rho = ones;
  rho[idx(J, {0, 1})] = 5;
  rho[idx(J, {2, 3})] = 5;
  EXPECT_FALSE(is_weak_rep(rho, J, QParameter::finite(Rational(1))));
  EXPECT_TRUE(is_weak_rep(rho, J, QParameter::degenerate()));
  EXPECT_EQ(is_strong_rep(rho, J, QParameter::finite(Rational(1))), false);
  EXPECT_THROW(is_weak_rep(std::vector<Rational>(5, 1), J, QParameter::tropical()), InputError);
  rho[0] = 0;
  EXPECT_THROW(is_weak_rep(rho, J, QParameter::tropical()), InputError);
}

TEST(Representations, StrongExamples) {
  for (const auto& J : {fano_matroid(), elliptic_matroid(7), uniform_matroid(3, 6)}) {
    EXPECT_TRUE(is_strong_rep(std::vector<Rational>(J.size(), 1), J, QParameter::tropical())) << J.label();
  }
  gen::Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    FieldMatrix<Rational> a(2, std::vector<Rational>(4));
    for (auto& row : a) {
      for (auto& x : row) x = gen::small_rational(rng, 6, 3);
    }
    ExactPolynomial f;
    try {
      f = grassmann_map(a);
    } catch (const PreconditionError&) {
      continue;
    }
    if (f.size() != 6) continue;
    const auto J = uniform_matroid(2, 4);
    std::vector<Rational> rho;
    for (const auto& p : J.points()) rho.push_back(f.coeff(p));
    EXPECT_TRUE(is_strong_rep(rho, J, QParameter::finite(Rational(2))));
  }
}

TEST(Representations, StrongMonotoneInQ) {
  gen::Rng rng(22);
  const auto J = uniform_matroid(2, 5);
  const std::vector<QParameter> qs = {QParameter::tropical(), QParameter::finite(0.5), QParameter::finite(1.0),
                                      QParameter::finite(2.0), QParameter::degenerate()};
  for (int k = 0; k < 300; ++k) {
    std::vector<double> rho;
    for (std::size_t a = 0; a < J.size(); ++a) rho.push_back(gen::uniform_real(rng, 0.2, 4));
    bool prev = false;
    for (const auto& q : qs) {
      const bool now = is_strong_rep(rho, J, q);
      EXPECT_FALSE(prev && !now);
      prev = now;
    }
  }
}

TEST(DegenerateRelations, Examples) {
  EXPECT_TRUE(degenerate_relations(uniform_matroid(2, 4), false).empty());
  const auto M = from_nonbases(4, 2, {{2, 3}});
  EXPECT_TRUE(contains(degenerate_relations(M, false), idx(M, {0, 2}), idx(M, {1, 3}), idx(M, {0, 3}),
                       idx(M, {1, 2})));
  const auto P = parallel_u35();
  EXPECT_TRUE(contains(degenerate_relations(P, true), idx(P, {0, 1, 2}), idx(P, {3, 4, 5}), idx(P, {0, 1, 3}),
                       idx(P, {2, 4, 5})));
}

TEST(Spaces, Dimensions) {
  EXPECT_EQ(v_space(uniform_matroid(2, 4)).dim(), 6u);
  EXPECT_EQ(v_space(from_nonbases(4, 2, {{2, 3}})).dim(), 4u);
  EXPECT_EQ(v_space(betsy_ross_matroid()).dim(), 12u);
  EXPECT_EQ(w_space(betsy_ross_matroid()).dim(), 11u);
  EXPECT_EQ(w_space(uniform_matroid(2, 4)).dim(), 4u);
  EXPECT_EQ(w_space(full_simplex(1, 3)).dim(), 1u);
  EXPECT_EQ(w_space(MConvexSet(4, 2, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}})).dim(), 3u);
  EXPECT_EQ(tutte_rank(uniform_matroid(2, 4)), 5);
  EXPECT_EQ(reduced_dim(uniform_matroid(2, 4)), 2);
  EXPECT_EQ(reduced_dim(betsy_ross_matroid()), 1);
  EXPECT_EQ(reduced_dim(fano_matroid()), 0);
}

TEST(Spaces, KernelAgreementAndLineality) {
  for (const auto& J : fixtures()) {
    const auto v = v_space(J), vf = v_space_full(J), w = w_space(J);
    EXPECT_TRUE(v.contains(vf) && vf.contains(v)) << J.label();
    EXPECT_TRUE(v.contains(w)) << J.label();
    EXPECT_TRUE(w.contains(RationalVector(J.size(), 1))) << J.label();
  }
}

TEST(Restriction, Injectivity) {
  const auto J = uniform_matroid(2, 4);
  const auto v = v_space(J), w = w_space(J);
  for (std::size_t a = 0; a < J.size(); ++a) {
    PointMask m;
    m.set(a);
    EXPECT_FALSE(restriction_injective(J, J.subset(m), v, w));
  }
  EXPECT_TRUE(restriction_injective(J, J, v, w));
  const auto B = betsy_ross_matroid();
  EXPECT_TRUE(restriction_injective(B, B, v_space(B), w_space(B)));
}
