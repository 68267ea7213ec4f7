#pragma once

// Star-shaped ball model of the projectivized Lorentzian stratum. Points are
// log-coefficient vectors on J; the base point is log N_t(f_J) and
// coordinates live in V_J / R1 with respect to a fixed complement basis.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/representations.hpp"

namespace lorentz {

inline constexpr double kDefaultProbeBound = 1e3;
inline constexpr double kDefaultGaugeTolerance = 1e-10;
// Second Hessian eigenvalues below this fraction of the spectral norm are
// treated as rounding noise.
inline constexpr double kGaugeNoiseFloor = 1e-13;

struct GaugeOptions {
  double probe_bound = kDefaultProbeBound;
  double tolerance = kDefaultGaugeTolerance;  // absolute, on the scaling parameter
};

class GaugeModel {
 public:
  GaugeModel(MConvexSet J, double t = 1.0, GaugeOptions opt = {}) : J_(std::move(J)), t_(t), opt_(opt) {
    if (!(t >= 0)) throw InputError("base point parameter t must be nonnegative");
    base_.resize(J_.size());
    for (std::size_t a = 0; a < J_.size(); ++a) base_[a] = -t * std::log(factorial_of(J_[a]).get_d());
    const auto v = v_space(J_);
    const auto ones = RationalSubspace::span({RationalVector(J_.size(), 1)}, J_.size());
    const auto comp = complement_basis(v, ones);
    for (const auto& row : comp) {
      std::vector<double> r;
      for (const auto& x : row) r.push_back(x.get_d());
      complement_.push_back(std::move(r));
    }
  }

  const MConvexSet& support() const { return J_; }
  double t() const { return t_; }
  std::size_t dim() const { return complement_.size(); }
  const std::vector<double>& base_point() const { return base_; }
  const GaugeOptions& options() const { return opt_; }

  // Log coefficients of f on J; f must be supported exactly on J.
  std::vector<double> log_point(const FloatPolynomial& f) const {
    if (f.size() != J_.size()) throw PreconditionError("polynomial support differs from the model support");
    std::vector<double> x(J_.size());
    for (std::size_t a = 0; a < J_.size(); ++a) {
      double c = f.coeff(J_[a]);
      if (!(c > 0)) throw PreconditionError("polynomial support differs from the model support");
      x[a] = std::log(c);
    }
    return x;
  }

  // exp(x) up to a positive scalar; underflow is clamped so that the support
  // stays J.
  FloatPolynomial polynomial(const std::vector<double>& x) const {
    const double top = *std::max_element(x.begin(), x.end());
    FloatPolynomial f(J_.n(), J_.d());
    for (std::size_t a = 0; a < J_.size(); ++a) {
      f.set(J_[a], std::max(std::exp(x[a] - top), std::numeric_limits<double>::min()));
    }
    return f;
  }

  // Coordinates of x - x_* modulo R1. Components of x outside V_J are
  // ignored, so callers should pass points of (a neighbourhood of) V_J.
  std::vector<double> coordinates(const std::vector<double>& x) const {
    std::vector<double> y(J_.size());
    for (std::size_t a = 0; a < J_.size(); ++a) y[a] = x[a] - base_[a];
    return solve(y);
  }

  std::vector<double> lift(const std::vector<double>& z) const {
    std::vector<double> x = base_;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t a = 0; a < x.size(); ++a) x[a] += z[i] * complement_[i][a];
    }
    return x;
  }

  // Float tester; eigenvalues above the noise floor are confirmed exactly.
  bool member(const std::vector<double>& z) const {
    auto v = is_lorentzian(polynomial(lift(z)));
    if (!v.lorentzian) return false;
    return v.margin <= kGaugeNoiseFloor || member_exact(z);
  }
  // Exact inertia of the rounded coefficients; no eigenvalue tolerance.
  bool member_exact(const std::vector<double>& z) const {
    const FloatPolynomial f = polynomial(lift(z));
    ExactPolynomial q(f.n(), f.d());
    for (const auto& [a, c] : f.terms()) q.set(a, Rational(c));
    return is_lorentzian(q).lorentzian;
  }

 private:
  std::vector<double> solve(const std::vector<double>& y) const {
    // Least-squares in the complement basis plus the ones vector.
    const std::size_t k = complement_.size();
    Eigen::MatrixXd a(J_.size(), k + 1);
    Eigen::VectorXd b(J_.size());
    for (std::size_t r = 0; r < J_.size(); ++r) {
      for (std::size_t i = 0; i < k; ++i) a(r, i) = complement_[i][r];
      a(r, k) = 1;
      b(r) = y[r];
    }
    Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
    return std::vector<double>(sol.data(), sol.data() + k);
  }

  MConvexSet J_;
  double t_;
  GaugeOptions opt_;
  std::vector<double> base_;
  std::vector<std::vector<double>> complement_;
};

struct GaugeValue {
  double psi = 0;
  bool probe_limited = false;  // membership persisted up to the probe bound
};

inline double sup_norm(const std::vector<double>& z) {
  double m = 0;
  for (double x : z) m = std::max(m, std::abs(x));
  return m;
}

// psi(z) = inf { s > 0 : x_* + lift(z) / s in log L_J }. A geometric scan
// from s = 1 brackets the crossing and exact inertia refines it by bisection.
inline GaugeValue gauge_psi(const GaugeModel& model, const std::vector<double>& z) {
  GaugeValue out;
  if (sup_norm(z) == 0) return out;
  auto scaled = [&](double s) {
    std::vector<double> w(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) w[i] = z[i] / s;
    return w;
  };
  double lo = 0, hi = 1;
  if (model.member(scaled(1.0))) {
    // Probe until the scaled point reaches the probe bound in norm.
    const double floor = std::min(1.0, sup_norm(z) / model.options().probe_bound);
    while (true) {
      double next = std::max(hi * 0.9, floor);
      if (!model.member(scaled(next))) {
        lo = next;
        break;
      }
      hi = next;
      if (next == floor) {
        out.probe_limited = true;
        return out;
      }
    }
  } else {
    lo = 1;
    hi = 2;
    while (!model.member(scaled(hi))) {
      lo = hi;
      hi *= 2;
      if (hi > 1e12) throw PreconditionError("gauge did not reach the Lorentzian set");
    }
  }
  while (hi - lo > model.options().tolerance * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (model.member_exact(scaled(mid)) ? hi : lo) = mid;
  }
  out.psi = hi;
  return out;
}

inline GaugeValue gauge_psi(const FloatPolynomial& f, double t = 1.0, GaugeOptions opt = {}) {
  if (!is_lorentzian(f).lorentzian) throw PreconditionError("gauge needs a Lorentzian polynomial");
  GaugeModel model(MConvexSet(f.n(), f.d(), f.support()), t, opt);
  return gauge_psi(model, model.coordinates(model.log_point(f)));
}

struct BallPoint {
  std::vector<double> coords;
  double norm = 0;
  double psi = 0;  // gauge of the original point
  bool probe_limited = false;
};

// x -> x / (1 - psi(x) + |x|).
inline BallPoint ball_coordinates(const GaugeModel& model, const FloatPolynomial& f) {
  if (!is_lorentzian(f).lorentzian) throw PreconditionError("ball coordinates need a Lorentzian polynomial");
  auto z = model.coordinates(model.log_point(f));
  auto g = gauge_psi(model, z);
  const double denom = 1 - g.psi + sup_norm(z);
  BallPoint b;
  b.psi = g.psi;
  b.probe_limited = g.probe_limited;
  b.coords.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) b.coords[i] = z[i] / denom;
  b.norm = sup_norm(b.coords);
  return b;
}

inline BallPoint ball_coordinates(const FloatPolynomial& f, double t = 1.0, GaugeOptions opt = {}) {
  GaugeModel model(MConvexSet(f.n(), f.d(), f.support()), t, opt);
  return ball_coordinates(model, f);
}

// b -> b / (1 + psi(b) - |b|).
inline FloatPolynomial inverse_ball(const GaugeModel& model, const std::vector<double>& b) {
  const double nb = sup_norm(b);
  if (nb >= 1) throw PreconditionError("ball point lies outside the open unit ball");
  auto g = gauge_psi(model, b);
  const double denom = 1 + g.psi - nb;
  std::vector<double> z(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) z[i] = b[i] / denom;
  FloatPolynomial f = model.polynomial(model.lift(z));
  if (!is_lorentzian(f).lorentzian) throw PreconditionError("ball point is outside the image of the model");
  return f;
}

}  // namespace lorentz
