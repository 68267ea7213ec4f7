#pragma once

// Squared-minor (Cauchy-Binet) polynomials of d x n matrices over Q, Q(i),
// Q(sqrt 5), R and C, and the Betsy Ross family.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// (a + b sqrt5) / 2 with rational a, b.
struct Golden {
  Rational a = 0;
  Rational b = 0;

  Golden() = default;
  Golden(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Golden(long k) : a(2 * k), b(0) {}
  static Golden integer(long k) { return Golden(k); }
  static Golden phi() { return Golden(1, 1); }
  static Golden inverse_phi() { return Golden(-1, 1); }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  Golden conjugate() const { return Golden(a, -b); }
  // Field norm x * conj(x), a rational number.
  Rational norm() const { return (a * a - 5 * b * b) / 4; }
  double to_double() const { return (a.get_d() + b.get_d() * std::sqrt(5.0)) / 2; }

  friend Golden operator+(const Golden& x, const Golden& y) { return Golden(x.a + y.a, x.b + y.b); }
  friend Golden operator-(const Golden& x, const Golden& y) { return Golden(x.a - y.a, x.b - y.b); }
  friend Golden operator*(const Golden& x, const Golden& y) {
    return Golden((x.a * y.a + 5 * x.b * y.b) / 2, (x.a * y.b + x.b * y.a) / 2);
  }
  friend Golden operator/(const Golden& x, const Golden& y) {
    if (y.is_zero()) throw InputError("division by zero in Q(sqrt5)");
    Golden num = x * y.conjugate();
    Rational n = y.norm();
    return Golden(num.a / n, num.b / n);
  }
  friend bool operator==(const Golden& x, const Golden& y) { return x.a == y.a && x.b == y.b; }
};

struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Rational abs_squared() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    Rational n = y.abs_squared();
    if (sgn(n) == 0) throw InputError("division by zero in Q(i)");
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
};

namespace detail {

inline bool field_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_zero(const Golden& x) { return x.is_zero(); }
inline bool field_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool field_zero(double x) { return x == 0; }
inline bool field_zero(const std::complex<double>& x) { return x == 0.0; }

// Pivot choice: exact fields take the first nonzero entry, floating fields
// the largest modulus.
template <class T>
double pivot_weight(const T& x) {
  if constexpr (std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>) {
    return std::abs(x);
  } else {
    return field_zero(x) ? 0.0 : 1.0;
  }
}

}  // namespace detail

template <class T>
T determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det = T(1);
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    constexpr bool kFloating = std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>;
    std::size_t best = c;
    double w = 0;
    for (std::size_t r = c; r < n; ++r) {
      double wr = detail::pivot_weight(m[r][c]);
      if (wr > w) {
        w = wr;
        best = r;
        if (!kFloating) break;
      }
    }
    if (w == 0) return T(0);
    if (best != c) {
      std::swap(m[best], m[c]);
      negate = !negate;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (detail::field_zero(m[r][c])) continue;
      T f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return negate ? T(0) - det : det;
}

template <class T>
using FieldMatrix = std::vector<std::vector<T>>;

template <class T>
std::vector<T> maximal_minors(const FieldMatrix<T>& a, std::vector<std::vector<int>>* subsets) {
  const int d = static_cast<int>(a.size());
  if (d == 0) throw InputError("matrix has no rows");
  const int n = static_cast<int>(a[0].size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw InputError("ragged matrix");
  }
  if (d > n) throw InputError("matrix has more rows than columns");
  *subsets = k_subsets(n, d);
  std::vector<T> out;
  out.reserve(subsets->size());
  for (const auto& s : *subsets) {
    FieldMatrix<T> sub(d, std::vector<T>(d));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) sub[r][c] = a[r][s[c]];
    }
    out.push_back(determinant(sub));
  }
  return out;
}

namespace detail {

inline void require_full_rank(bool any_nonzero) {
  if (!any_nonzero) throw PreconditionError("matrix is rank deficient: every maximal minor vanishes");
}

inline void require_finite(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite matrix entry");
}

}  // namespace detail

// Exact: rational entries, t = 2.
inline ExactPolynomial grassmann_map(const FieldMatrix<Rational>& a) {
  std::vector<std::vector<int>> subs;
  auto minors = maximal_minors(a, &subs);
  const int n = static_cast<int>(a[0].size());
  ExactPolynomial f(n, static_cast<int>(a.size()));
  bool any = false;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (sgn(minors[k]) == 0) continue;
    any = true;
    f.set(indicator(n, subs[k]), minors[k] * minors[k]);
  }
  detail::require_full_rank(any);
  return f;
}

// Exact: Gaussian rational entries, t = 2.
inline ExactPolynomial grassmann_map(const FieldMatrix<GaussianRational>& a) {
  std::vector<std::vector<int>> subs;
  auto minors = maximal_minors(a, &subs);
  const int n = static_cast<int>(a[0].size());
  ExactPolynomial f(n, static_cast<int>(a.size()));
  bool any = false;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (minors[k].is_zero()) continue;
    any = true;
    f.set(indicator(n, subs[k]), minors[k].abs_squared());
  }
  detail::require_full_rank(any);
  return f;
}

// Q(sqrt5) entries: minors are exact, |minor|^t is taken in doubles.
inline FloatPolynomial grassmann_map(const FieldMatrix<Golden>& a, double t) {
  if (!std::isfinite(t)) throw InputError("exponent must be finite");
  std::vector<std::vector<int>> subs;
  auto minors = maximal_minors(a, &subs);
  const int n = static_cast<int>(a[0].size());
  FloatPolynomial f(n, static_cast<int>(a.size()));
  bool any = false;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (minors[k].is_zero()) continue;
    any = true;
    f.set(indicator(n, subs[k]), std::pow(std::abs(minors[k].to_double()), t));
  }
  detail::require_full_rank(any);
  return f;
}

// Floating entries; minors below 1e-12 times the largest one count as zero.
template <class T>
FloatPolynomial grassmann_map_float(const FieldMatrix<T>& a, double t) {
  if (!(t > 0)) throw InputError("exponent t must be positive");
  for (const auto& row : a) {
    for (const auto& x : row) {
      if constexpr (std::is_same_v<T, double>) {
        detail::require_finite(x);
      } else {
        detail::require_finite(x.real());
        detail::require_finite(x.imag());
      }
    }
  }
  std::vector<std::vector<int>> subs;
  auto minors = maximal_minors(a, &subs);
  double largest = 0;
  for (const auto& m : minors) largest = std::max(largest, static_cast<double>(std::abs(m)));
  const int n = static_cast<int>(a[0].size());
  FloatPolynomial f(n, static_cast<int>(a.size()));
  detail::require_full_rank(largest > 0);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    double m = std::abs(minors[k]);
    if (m <= 1e-12 * largest) continue;
    f.set(indicator(n, subs[k]), std::pow(m, t));
  }
  return f;
}

inline FloatPolynomial grassmann_map(const FieldMatrix<double>& a, double t) {
  return grassmann_map_float(a, t);
}
inline FloatPolynomial grassmann_map(const FieldMatrix<std::complex<double>>& a, double t) {
  return grassmann_map_float(a, t);
}

// 3 x 11 matrix over Q(sqrt5) whose nonzero maximal minors are the bases of
// the Betsy Ross matroid.
inline FieldMatrix<Golden> betsy_ross_matrix() {
  const Golden z{}, one = Golden::integer(1), p = Golden::phi(), p1 = Golden::phi() + one,
               ip = Golden::inverse_phi();
  return {
      {z, z, one, one, one, one, one, one, one, one, one},
      {one, z, one, p1, p, p1, z, p, p, p1, z},
      {z, one, one, p, ip, z, p, p, one, one, z},
  };
}

// Coefficients |p_B(A)|^t on the 140 bases.
inline FloatPolynomial betsy_polynomial(double t) {
  if (!std::isfinite(t)) throw InputError("t must be finite");
  std::vector<std::vector<int>> subs;
  auto minors = maximal_minors(betsy_ross_matrix(), &subs);
  FloatPolynomial f(11, 3);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (minors[k].is_zero()) continue;
    f.set(indicator(11, subs[k]), std::pow(std::abs(minors[k].to_double()), t));
  }
  return f;
}

}  // namespace lorentz
