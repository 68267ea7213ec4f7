#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "lorentz/hyperfield.hpp"

using namespace lorentz;

namespace {
std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST(NullSet, Examples) {
  const auto one = QParameter::finite(Rational(1)), two = QParameter::finite(Rational(2));
  EXPECT_TRUE(is_null(q({3, 4, 5}), one));
  EXPECT_TRUE(is_null(q({9, 16, 25}), two));
  EXPECT_FALSE(is_null(q({1, 1, 3}), one));
  EXPECT_FALSE(is_null(q({2, 1, 1}), QParameter::tropical()));
  EXPECT_TRUE(is_null(q({5, 1, 1}), QParameter::degenerate()));
  for (const auto& p : {QParameter::tropical(), one, two, QParameter::finite(0.3), QParameter::degenerate()}) {
    EXPECT_TRUE(is_null(q({1, 1}), p)) << p.str();
    EXPECT_TRUE(is_null(q({}), p)) << p.str();
    EXPECT_FALSE(is_null(q({7}), p)) << p.str();
  }
}

TEST(NullSet, ZerosAreIgnored) {
  EXPECT_TRUE(is_null(q({0, 2, 2}), QParameter::tropical()));
  EXPECT_FALSE(is_null(q({0, 0, 2}), QParameter::degenerate()));
}

TEST(NullSet, FloatAndExactAgree) {
  gen::Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Rational> e;
    std::vector<double> f;
    for (int i = 0; i < 3; ++i) {
      e.emplace_back(gen::uniform_int(rng, 0, 9));
      f.push_back(e.back().get_d());
    }
    for (const auto& p : {QParameter::finite(Rational(1)), QParameter::finite(Rational(2)), QParameter::tropical(),
                          QParameter::degenerate()}) {
      EXPECT_EQ(is_null(e, p), is_null(f, p));
    }
  }
}

TEST(NullSet, ScaleInvariance) {
  gen::Rng rng(4);
  for (int k = 0; k < 2000; ++k) {
    std::vector<double> v, w;
    const double lambda = gen::uniform_real(rng, 0.1, 10);
    for (int i = 0; i < gen::uniform_int(rng, 2, 5); ++i) {
      v.push_back(gen::uniform_int(rng, 0, 8));
      w.push_back(lambda * v.back());
    }
    const auto p = QParameter::finite(gen::uniform_real(rng, 0.2, 4));
    EXPECT_EQ(is_null(v, p), is_null(w, p));
  }
}

TEST(NullSet, PowerLaw) {
  gen::Rng rng(5);
  for (int k = 0; k < 2000; ++k) {
    std::vector<double> v;
    for (int i = 0; i < 3; ++i) v.push_back(gen::uniform_real(rng, 0.5, 3));
    const double a = gen::uniform_real(rng, 0.3, 3), b = gen::uniform_real(rng, 0.3, 3);
    std::vector<double> w;
    for (double x : v) w.push_back(std::pow(x, b / a));
    const bool lhs = is_null(v, QParameter::finite(a)), rhs = is_null(w, QParameter::finite(b));
    // Skip cases on the polygon boundary.
    double mx = 0, sum = 0;
    for (double x : v) {
      mx = std::max(mx, std::pow(x, 1 / a));
      sum += std::pow(x, 1 / a);
    }
    if (std::abs(2 * mx - sum) < 1e-9 * sum) continue;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(NullSet, Monotone) {
  EXPECT_EQ(QParameter::parse("inf").str(), QParameter::degenerate().str());
  EXPECT_TRUE(QParameter::parse("0").is_tropical());
  EXPECT_THROW(QParameter::parse("-1"), InputError);
  EXPECT_THROW(QParameter::parse("abc"), InputError);
}
