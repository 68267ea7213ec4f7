#pragma once

// Homogeneous polynomials stored in the normalized convention
//   f = sum_alpha c_alpha x^alpha / alpha!
// with either exact rational or double coefficients.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

inline Integer factorial_of(const ExponentVector& a) {
  Integer f = 1;
  for (int x : a) {
    for (int k = 2; k <= x; ++k) f *= k;
  }
  return f;
}

template <class Scalar>
class HomogeneousPolynomial {
 public:
  using Terms = std::map<ExponentVector, Scalar>;

  HomogeneousPolynomial() = default;
  HomogeneousPolynomial(int n, int d) : n_(n), d_(d) {
    if (n <= 0 || d < 0) throw InputError("polynomial needs n >= 1 and d >= 0");
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Normalized coefficient c_alpha; zero coefficients are not stored.
  void set(const ExponentVector& alpha, const Scalar& c) {
    if (static_cast<int>(alpha.size()) != n_ || degree_of(alpha) != d_) {
      throw InputError("exponent " + format_exponent(alpha) + " does not fit H(" +
                       std::to_string(d_) + "," + std::to_string(n_) + ")");
    }
    for (int x : alpha) {
      if (x < 0) throw InputError("negative exponent");
    }
    if (c == 0) {
      terms_.erase(alpha);
    } else {
      terms_[alpha] = c;
    }
  }
  // Coefficient in the monomial basis, i.e. of x^alpha.
  void set_monomial(const ExponentVector& alpha, const Scalar& c) {
    if constexpr (std::is_same_v<Scalar, double>) {
      set(alpha, c * factorial_of(alpha).get_d());
    } else {
      set(alpha, c * Scalar(factorial_of(alpha)));
    }
  }

  Scalar coeff(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar monomial_coeff(const ExponentVector& alpha) const {
    if constexpr (std::is_same_v<Scalar, double>) {
      return coeff(alpha) / factorial_of(alpha).get_d();
    } else {
      return coeff(alpha) / Scalar(factorial_of(alpha));
    }
  }

  std::vector<ExponentVector> support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
  }

  bool nonnegative() const {
    for (const auto& [a, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  // Value at a point, monomial convention.
  double evaluate(const std::vector<double>& x) const {
    double total = 0;
    for (const auto& [a, c] : terms_) {
      double m = to_double(c) / factorial_of(a).get_d();
      for (int i = 0; i < n_; ++i) m *= std::pow(x[i], a[i]);
      total += m;
    }
    return total;
  }

  HomogeneousPolynomial<double> to_float() const {
    HomogeneousPolynomial<double> out(n_, d_);
    for (const auto& [a, c] : terms_) out.set(a, to_double(c));
    return out;
  }

  friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 1;
  int d_ = 0;
  Terms terms_;
};

using ExactPolynomial = HomogeneousPolynomial<Rational>;
using FloatPolynomial = HomogeneousPolynomial<double>;

inline ExactPolynomial generating_polynomial(const MConvexSet& J) {
  ExactPolynomial f(J.n(), J.d());
  for (const auto& p : J.points()) f.set(p, 1);
  return f;
}

// Largest relative deviation between two float polynomials over the union of
// supports.
inline double max_relative_difference(const FloatPolynomial& a, const FloatPolynomial& b) {
  double worst = 0;
  auto visit = [&](const ExponentVector& alpha) {
    double x = a.coeff(alpha), y = b.coeff(alpha);
    double scale = std::max({std::abs(x), std::abs(y), 1e-300});
    worst = std::max(worst, std::abs(x - y) / scale);
  };
  for (const auto& [alpha, c] : a.terms()) visit(alpha);
  for (const auto& [alpha, c] : b.terms()) visit(alpha);
  return worst;
}

}  // namespace lorentz
