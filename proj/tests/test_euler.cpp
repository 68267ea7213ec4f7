#include <gtest/gtest.h>

#include "lorentz/euler.hpp"

using namespace lorentz;

TEST(InitialSubsets, U24) {
  const auto J = uniform_matroid(2, 4);
  const auto subs = initial_subsets(J, enumerate_rays(J).rays);
  EXPECT_EQ(subs.size(), 36u);
  std::set<std::string> seen;
  int faces = 0;
  for (const auto& s : subs) {
    EXPECT_TRUE(seen.insert(s.mask.to_string()).second);
    faces += s.is_face;
  }
  EXPECT_EQ(faces, 27);
}

TEST(InitialSubsets, RigidGivesFaces) {
  const auto J = elliptic_matroid(5);
  const auto subs = initial_subsets(J, {});
  EXPECT_EQ(subs.size(), face_lattice(base_polytope(J)).faces.size());
  for (const auto& s : subs) EXPECT_TRUE(s.is_face);
}

TEST(Tallies, U24) {
  const auto J = uniform_matroid(2, 4);
  const auto e = enumerate_rays(J);
  const auto rep = euler_characteristic(J, e);
  EXPECT_EQ(rep.tallies.g, (std::vector<long>{0, 0, 3, 6}));
  EXPECT_EQ(rep.tallies.f[0][0], 6);
  EXPECT_EQ(rep.tallies.f[1][0], 12);
  EXPECT_EQ(rep.tallies.f[2][0], 8);
  EXPECT_EQ(rep.tallies.f[3][3], 1);
  long total = 0;
  for (const auto& row : rep.tallies.f) {
    for (long x : row) total += x;
  }
  EXPECT_EQ(total, 27);
  EXPECT_EQ(rep.chi, 1);
  EXPECT_EQ(rep.ray_count, 3u);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.face_euler_sum, 1);
}

TEST(Tallies, FormulaArithmetic) {
  Tallies t;
  t.g = {0, 0, 3, 6};
  t.f = {{6, 0, 0, 0}, {12, 0, 0, 0}, {8, 0, 0, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(euler_from_tallies(t), 1);
}

TEST(Euler, T7) {
  const auto J = elliptic_matroid(7);
  const auto rep = euler_characteristic(J, enumerate_rays(J));
  EXPECT_EQ(rep.tallies.g, (std::vector<long>{0, 0, 72, 267, 294, 111, 12}));
  std::vector<long> first, last;
  for (const auto& row : rep.tallies.f) {
    first.push_back(row[0]);
    last.push_back(row.size() > 3 ? row[3] : 0);
  }
  EXPECT_EQ(first, (std::vector<long>{30, 150, 281, 222, 68, 6, 0}));
  EXPECT_EQ(last, (std::vector<long>{0, 0, 0, 24, 36, 13, 1}));
  EXPECT_EQ(rep.chi, 1);
}

TEST(Euler, Rigid) {
  EXPECT_EQ(rigid_euler(fano_matroid()), 1);
  EXPECT_EQ(rigid_euler(elliptic_matroid(5)), 1);
  EXPECT_THROW(rigid_euler(uniform_matroid(2, 4)), PreconditionError);
  for (const auto& J : {fano_matroid(), elliptic_matroid(5)}) {
    EXPECT_EQ(euler_characteristic(J, enumerate_rays(J)).chi, 1);
  }
}

TEST(Euler, RejectsHigherDimensionalFans) {
  const auto J = uniform_matroid(2, 5);
  EXPECT_THROW(euler_characteristic(J, enumerate_rays(J)), PreconditionError);
}

TEST(StableEuler, Formula) {
  EXPECT_EQ(two_orbit_chi({0, 0, 0}), 2);
  EXPECT_EQ(two_orbit_chi({4}), -2);
  EXPECT_EQ(two_orbit_chi({140, 1410, 5010, 8705, 8770, 5775, 2570, 715, 105, 5, 0}), 17);
}

TEST(StableEuler, Preconditions) {
  EXPECT_THROW(two_orbit_stable_euler(uniform_matroid(2, 4)), PreconditionError);
  EXPECT_THROW(two_orbit_stable_euler(fano_matroid()), PreconditionError);
}
