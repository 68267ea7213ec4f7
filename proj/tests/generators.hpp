#pragma once

// Seeded random generators for property tests.

#include <complex>
#include <random>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/dressian.hpp"
#include "lorentz/grassmann.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline lorentz::Rational small_rational(Rng& rng, int num, int den) {
  lorentz::Rational r(uniform_int(rng, -num, num), uniform_int(rng, 1, den));
  r.canonicalize();
  return r;
}

inline lorentz::FieldMatrix<double> real_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> nd(0, 1);
  lorentz::FieldMatrix<double> a(rows, std::vector<double>(cols));
  for (auto& r : a) {
    for (auto& x : r) x = nd(rng);
  }
  return a;
}

inline lorentz::FieldMatrix<std::complex<double>> complex_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> nd(0, 1);
  lorentz::FieldMatrix<std::complex<double>> a(rows, std::vector<std::complex<double>>(cols));
  for (auto& r : a) {
    for (auto& x : r) x = {nd(rng), nd(rng)};
  }
  return a;
}

// Real 2 x n matrix whose 2 x 2 minors are all at least `ratio` times the
// largest one in absolute value.
inline lorentz::FieldMatrix<double> well_conditioned_real(Rng& rng, int cols, double ratio) {
  while (true) {
    auto a = real_matrix(rng, 2, cols);
    double lo = 1e300, hi = 0;
    for (int i = 0; i < cols; ++i) {
      for (int j = i + 1; j < cols; ++j) {
        double m = std::abs(a[0][i] * a[1][j] - a[0][j] * a[1][i]);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
    }
    if (lo >= ratio * hi) return a;
  }
}

// Real matrix with column `dup` a multiple of column `src`, so the support
// has parallel elements and degenerate relations.
inline lorentz::FieldMatrix<double> matrix_with_parallel(Rng& rng, int rows, int cols, int src, int dup) {
  auto a = real_matrix(rng, rows, cols);
  const double s = uniform_real(rng, 0.5, 2.0) * (uniform_int(rng, 0, 1) ? 1 : -1);
  for (int r = 0; r < rows; ++r) a[r][dup] = s * a[r][src];
  return a;
}

// nu = c * ray + linear, c >= 0 an integer; M-convex whenever ray is.
inline std::vector<lorentz::Rational> m_convex_function(Rng& rng, const lorentz::MConvexSet& J,
                                                        const std::vector<lorentz::MConvexFunction>& rays) {
  std::vector<lorentz::Rational> w(J.n());
  for (auto& x : w) x = small_rational(rng, 3, 2);
  std::vector<lorentz::Rational> nu(J.size(), 0);
  for (std::size_t a = 0; a < J.size(); ++a) {
    for (int i = 0; i < J.n(); ++i) nu[a] += w[i] * J[a][i];
  }
  if (!rays.empty()) {
    const auto& r = rays[uniform_int(rng, 0, static_cast<int>(rays.size()) - 1)];
    const int c = uniform_int(rng, 0, 3);
    for (std::size_t a = 0; a < J.size(); ++a) nu[a] += c * r.values[a];
  }
  return nu;
}

// Separable convex function sum_i phi_i(alpha_i) with phi_i convex on
// {0, ..., d}; M-convex on any full discrete simplex.
inline std::vector<lorentz::Rational> separable_convex(Rng& rng, const lorentz::MConvexSet& J) {
  std::vector<std::vector<lorentz::Rational>> phi(J.n());
  for (auto& p : phi) {
    lorentz::Rational v = 0, slope = uniform_int(rng, -3, 3);
    for (int k = 0; k <= J.d(); ++k) {
      p.push_back(v);
      v += slope;
      slope += uniform_int(rng, 0, 2);
    }
  }
  std::vector<lorentz::Rational> nu(J.size(), 0);
  for (std::size_t a = 0; a < J.size(); ++a) {
    for (int i = 0; i < J.n(); ++i) nu[a] += phi[i][J[a][i]];
  }
  return nu;
}

inline std::vector<lorentz::Rational> arbitrary_function(Rng& rng, const lorentz::MConvexSet& J) {
  std::vector<lorentz::Rational> nu(J.size());
  for (auto& x : nu) x = uniform_int(rng, -2, 2);
  return nu;
}

// Lorentzian polynomials from the Grassmann map and from M-convex functions.
class LorentzianSource {
 public:
  explicit LorentzianSource(std::uint64_t seed) : rng_(seed) {
    u24_ = lorentz::uniform_matroid(2, 4);
    u25_ = lorentz::uniform_matroid(2, 5);
    simplex_ = lorentz::full_simplex(3, 3);
    u24_rays_ = lorentz::enumerate_rays(u24_).rays;
    u25_rays_ = lorentz::enumerate_rays(u25_).rays;
  }

  lorentz::FloatPolynomial next() {
    while (true) {
      lorentz::FloatPolynomial f = candidate();
      if (lorentz::is_lorentzian(f).lorentzian) return f;
    }
  }

  Rng& rng() { return rng_; }

 private:
  lorentz::FloatPolynomial candidate() {
    switch (uniform_int(rng_, 0, 6)) {
      case 0: return lorentz::grassmann_map(real_matrix(rng_, 2, 4), 2.0);
      case 1: return lorentz::grassmann_map(real_matrix(rng_, 3, 5), 2.0);
      case 2: return lorentz::grassmann_map(complex_matrix(rng_, 2, 5), 2.0);
      case 3: return lorentz::grassmann_map(matrix_with_parallel(rng_, 3, 6, 2, 3), 2.0);
      case 4: {
        lorentz::MConvexFunction nu{u24_, m_convex_function(rng_, u24_, u24_rays_)};
        return lorentz::dressian_to_polynomial(nu, uniform_real(rng_, 0.2, 3.0));
      }
      case 5: {
        lorentz::MConvexFunction nu{u25_, m_convex_function(rng_, u25_, u25_rays_)};
        return lorentz::dressian_to_polynomial(nu, uniform_real(rng_, 0.2, 3.0));
      }
      default: {
        lorentz::MConvexFunction nu{simplex_, separable_convex(rng_, simplex_)};
        return lorentz::dressian_to_polynomial(nu, uniform_real(rng_, 0.2, 3.0));
      }
    }
  }

  Rng rng_;
  lorentz::MConvexSet u24_, u25_, simplex_;
  std::vector<lorentz::MConvexFunction> u24_rays_, u25_rays_;
};

}  // namespace gen
