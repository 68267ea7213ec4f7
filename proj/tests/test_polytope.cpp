#include <gtest/gtest.h>

#include "lorentz/polytope.hpp"
#include "oracles.hpp"

using namespace lorentz;

namespace {

std::set<std::vector<std::size_t>> as_index_sets(const FaceLattice& fl, std::size_t size) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : fl.faces) {
    std::vector<std::size_t> s;
    for (std::size_t a = 0; a < size; ++a) {
      if (f.mask.test(a)) s.push_back(a);
    }
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST(BasePolytope, Examples) {
  auto p = base_polytope(uniform_matroid(2, 4));
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(p.vertices().size(), 6u);
  p = base_polytope(full_simplex(4, 3));
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(p.vertices().size(), 4u);
  const auto B = betsy_ross_matroid();
  p = base_polytope(B);
  EXPECT_EQ(p.dim(), 10);
  EXPECT_EQ(p.vertices().size(), 140u);
}

TEST(BasePolytope, DimensionMatchesOracle) {
  for (const auto& J : {uniform_matroid(2, 4), elliptic_matroid(7), full_simplex(3, 3), fano_matroid(),
                        MConvexSet(4, 2, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}})}) {
    EXPECT_EQ(base_polytope(J).dim(), oracle::affine_dim(J.points())) << J.label();
  }
}

TEST(FaceLattice, FVectors) {
  EXPECT_EQ(face_lattice(base_polytope(uniform_matroid(2, 4))).f_vector(),
            (std::vector<std::size_t>{6, 12, 8, 1}));
  EXPECT_EQ(face_lattice(base_polytope(uniform_matroid(1, 4))).f_vector(), (std::vector<std::size_t>{4, 6, 4, 1}));
}

TEST(FaceLattice, BetsyRossFVector) {
  const auto B = betsy_ross_matroid();
  const auto fl = face_lattice(base_polytope(B));
  EXPECT_EQ(fl.f_vector(),
            (std::vector<std::size_t>{140, 1410, 5010, 9355, 10774, 8257, 4295, 1470, 305, 32, 1}));
  EXPECT_EQ(fl.euler_sum(), 1);
}

TEST(FaceLattice, MatchesArgmaxOracle) {
  for (const auto& J : {uniform_matroid(2, 4), uniform_matroid(2, 5), elliptic_matroid(5), full_simplex(3, 3),
                        full_simplex(4, 2), uniform_matroid(3, 6)}) {
    const auto fl = face_lattice(base_polytope(J));
    EXPECT_EQ(as_index_sets(fl, J.size()), oracle::faces_by_weights(J.points())) << J.label();
    EXPECT_EQ(fl.euler_sum(), 1) << J.label();
    for (const auto& f : fl.faces) {
      EXPECT_TRUE(oracle::m_convex(J.subset(f.mask).points()));
      EXPECT_EQ(f.dim, oracle::affine_dim(J.subset(f.mask).points()));
    }
  }
}

TEST(FaceLattice, BudgetIsEnforced) {
  EXPECT_THROW(face_lattice(base_polytope(uniform_matroid(2, 5)), 10), ResourceError);
}

TEST(Faces, IsFace) {
  const auto J = uniform_matroid(2, 4);
  PointMask v;
  v.set(2);
  EXPECT_TRUE(is_face(J.subset(v), J));
  EXPECT_EQ(face_to_subset(base_polytope(J), Face{v, 0}).size(), 1u);
  EXPECT_TRUE(is_face(J, J));
  MConvexSet square(4, 2, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  EXPECT_FALSE(is_face(square, J));
  MConvexSet edge(4, 2, {{1, 1, 0, 0}, {1, 0, 1, 0}});
  EXPECT_TRUE(is_face(edge, J));
}
