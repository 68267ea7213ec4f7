#pragma once

// Null sums in the triangular hyperfields T_q, 0 <= q <= infinity.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

class QParameter {
 public:
  enum class Kind { kTropical, kFinite, kDegenerate };

  static QParameter tropical() { return QParameter(Kind::kTropical, 0.0, Rational(0)); }
  static QParameter degenerate() { return QParameter(Kind::kDegenerate, INFINITY, std::nullopt); }
  static QParameter finite(double q) {
    if (!(q >= 0) || std::isinf(q)) throw InputError("q must be a finite nonnegative number");
    if (q == 0) return tropical();
    return QParameter(Kind::kFinite, q, std::nullopt);
  }
  static QParameter finite(const Rational& q) {
    if (q < 0) throw InputError("q must be nonnegative");
    if (q == 0) return tropical();
    return QParameter(Kind::kFinite, q.get_d(), q);
  }
  // "0", "inf"/"infinity", or a rational/decimal literal.
  static QParameter parse(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "INFINITY") return degenerate();
    if (s == "zero" || s == "ZERO") return tropical();
    return finite(parse_rational(s));
  }

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool is_tropical() const { return kind_ == Kind::kTropical; }
  bool is_degenerate() const { return kind_ == Kind::kDegenerate; }

  std::string str() const {
    if (kind_ == Kind::kTropical) return "0";
    if (kind_ == Kind::kDegenerate) return "inf";
    return exact_ ? exact_->get_str() : std::to_string(value_);
  }

 private:
  QParameter(Kind k, double v, std::optional<Rational> e) : kind_(k), value_(v), exact_(std::move(e)) {}
  Kind kind_;
  double value_;
  std::optional<Rational> exact_;
};

inline constexpr double kNullRelativeSlack = 1e-12;

namespace detail {

template <class T>
void require_nonnegative(std::span<const T> values) {
  for (const auto& v : values) {
    if (v < 0) throw InputError("null-sum test needs nonnegative values");
  }
}

template <class T>
bool max_attained_twice(std::span<const T> values, double rel_tol) {
  if (values.empty()) return true;
  T mx = *std::max_element(values.begin(), values.end());
  if (mx == 0) return true;
  int count = 0;
  for (const auto& v : values) {
    if constexpr (std::is_floating_point_v<T>) {
      if (mx - v <= rel_tol * mx) ++count;
    } else {
      if (v == mx) ++count;
    }
  }
  return count >= 2;
}

template <class T>
int nonzero_count(std::span<const T> values) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [](const T& v) { return v != 0; }));
}

// a_i^{1/q} <= sum_{j != i} a_j^{1/q} for all i, in doubles.
inline bool polygon_inequality(std::span<const double> values, double q) {
  std::vector<double> r;
  r.reserve(values.size());
  for (double v : values) r.push_back(std::pow(v, 1.0 / q));
  double total = 0;
  for (double v : r) total += v;
  double mx = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  return 2 * mx <= total * (1 + kNullRelativeSlack);
}

// sqrt(a) <= sqrt(b) + sqrt(c), decided exactly.
inline bool sqrt_triangle(const Rational& a, const Rational& b, const Rational& c) {
  Rational lhs = a - b - c;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * b * c;
}

}  // namespace detail

inline bool is_null(std::span<const double> values, const QParameter& q) {
  detail::require_nonnegative(values);
  const int nz = detail::nonzero_count(values);
  if (nz == 0) return true;
  if (nz == 1) return false;
  switch (q.kind()) {
    case QParameter::Kind::kTropical:
      return detail::max_attained_twice(values, kNullRelativeSlack);
    case QParameter::Kind::kDegenerate:
      return nz >= 3 || detail::max_attained_twice(values, kNullRelativeSlack);
    case QParameter::Kind::kFinite:
      return detail::polygon_inequality(values, q.value());
  }
  return false;
}

inline bool is_null(std::span<const Rational> values, const QParameter& q) {
  detail::require_nonnegative(values);
  const int nz = detail::nonzero_count(values);
  if (nz == 0) return true;
  if (nz == 1) return false;
  switch (q.kind()) {
    case QParameter::Kind::kTropical:
      return detail::max_attained_twice(values, 0.0);
    case QParameter::Kind::kDegenerate:
      return nz >= 3 || detail::max_attained_twice(values, 0.0);
    case QParameter::Kind::kFinite:
      break;
  }
  if (q.exact() && *q.exact() == 1) {
    Rational total = 0;
    for (const auto& v : values) total += v;
    Rational mx = *std::max_element(values.begin(), values.end());
    return 2 * mx <= total;
  }
  if (q.exact() && *q.exact() == 2) {
    std::vector<Rational> nzv;
    for (const auto& v : values) {
      if (v != 0) nzv.push_back(v);
    }
    if (nzv.size() == 2) return nzv[0] == nzv[1];
    if (nzv.size() == 3) {
      return detail::sqrt_triangle(nzv[0], nzv[1], nzv[2]) &&
             detail::sqrt_triangle(nzv[1], nzv[0], nzv[2]) &&
             detail::sqrt_triangle(nzv[2], nzv[0], nzv[1]);
    }
  }
  std::vector<double> d;
  d.reserve(values.size());
  for (const auto& v : values) d.push_back(v.get_d());
  return detail::polygon_inequality(d, q.value());
}

inline bool is_null(const std::vector<double>& values, const QParameter& q) {
  return is_null(std::span<const double>(values), q);
}
inline bool is_null(const std::vector<Rational>& values, const QParameter& q) {
  return is_null(std::span<const Rational>(values), q);
}

}  // namespace lorentz
