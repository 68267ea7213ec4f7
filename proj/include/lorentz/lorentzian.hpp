#pragma once

// Lorentzian membership, inertia of symmetric matrices, the coefficient
// transforms R_p and N_t, and the degree-2 simplification.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/representations.hpp"

namespace lorentz {

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.positives) + "," + std::to_string(in.negatives) + "," +
         std::to_string(in.zeros) + ")";
}

inline constexpr double kEigenRelativeTolerance = 1e-9;

template <class Scalar>
using SymmetricMatrix = std::vector<std::vector<Scalar>>;

template <class Scalar>
void require_symmetric(const SymmetricMatrix<Scalar>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw InputError("matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) throw InputError("matrix is not symmetric");
    }
  }
}

// Sylvester inertia by symmetric congruence. Zero diagonals are repaired with
// x_i -> x_i + x_j, which puts 2 a_ij on the diagonal.
inline Inertia hessian_inertia(SymmetricMatrix<Rational> m) {
  require_symmetric(m);
  const std::size_t n = m.size();
  Inertia out;
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n && !piv; ++i) {
      if (alive[i] && sgn(m[i][i]) != 0) piv = i;
    }
    if (!piv) {
      for (std::size_t i = 0; i < n && !piv; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && alive[j] && sgn(m[i][j]) != 0) {
            for (std::size_t k = 0; k < n; ++k) m[i][k] += m[j][k];
            for (std::size_t k = 0; k < n; ++k) m[k][i] += m[k][j];
            piv = i;
            break;
          }
        }
      }
    }
    if (!piv) {
      out.zeros += static_cast<int>(remaining);
      break;
    }
    const std::size_t p = *piv;
    const Rational d = m[p][p];
    (sgn(d) > 0 ? out.positives : out.negatives)++;
    alive[p] = false;
    --remaining;
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j] || sgn(m[j][p]) == 0) continue;
      Rational f = m[j][p] / d;
      for (std::size_t k = 0; k < n; ++k) {
        if (alive[k] && sgn(m[p][k]) != 0) m[j][k] -= f * m[p][k];
      }
    }
  }
  return out;
}

struct FloatInertia {
  Inertia inertia;
  double spectral_norm = 0;
  // Second largest eigenvalue divided by the spectral norm (0 for 1x1).
  double second_relative = -1;
  bool marginal = false;
};

inline FloatInertia hessian_inertia_float(const SymmetricMatrix<double>& m) {
  require_symmetric(m);
  const int n = static_cast<int>(m.size());
  FloatInertia out;
  if (n == 0) return out;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(m[i][j])) throw InputError("non-finite matrix entry");
      a(i, j) = m[i][j];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  double norm = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  out.spectral_norm = norm;
  const double tol = kEigenRelativeTolerance * norm;
  for (int i = 0; i < n; ++i) {
    if (ev(i) > tol) {
      ++out.inertia.positives;
    } else if (ev(i) < -tol) {
      ++out.inertia.negatives;
    } else {
      ++out.inertia.zeros;
      if (ev(i) != 0) out.marginal = true;
    }
  }
  if (norm == 0) {
    out.second_relative = 0;
  } else if (n >= 2) {
    out.second_relative = ev(n - 2) / norm;
  }
  return out;
}

inline Inertia hessian_inertia(const SymmetricMatrix<double>& m) {
  return hessian_inertia_float(m).inertia;
}

// Hessian of the alpha-th partial: entries c_{alpha + e_j + e_k}.
template <class Scalar>
SymmetricMatrix<Scalar> partial_hessian(const HomogeneousPolynomial<Scalar>& f,
                                        const ExponentVector& alpha) {
  const int n = f.n();
  SymmetricMatrix<Scalar> h(n, std::vector<Scalar>(n, Scalar(0)));
  ExponentVector e = alpha;
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      ++e[j];
      ++e[k];
      h[j][k] = h[k][j] = f.coeff(e);
      --e[j];
      --e[k];
    }
  }
  return h;
}

struct LorentzianVerdict {
  bool lorentzian = false;
  std::optional<ExchangeWitness> support_witness;
  std::optional<ExponentVector> failing_alpha;
  std::optional<Inertia> failing_inertia;
  // Float mode: largest second eigenvalue over all partial Hessians, relative
  // to the spectral norm; <= tolerance means Lorentzian.
  double margin = 0;
  bool marginal = false;
};

namespace detail {

template <class Scalar>
void require_lorentzian_input(const HomogeneousPolynomial<Scalar>& f) {
  if (f.is_zero()) throw InputError("the zero polynomial is not considered");
  if (!f.nonnegative()) throw InputError("polynomial has a negative coefficient");
}

// The partial derivatives whose Hessian is not identically zero.
template <class Scalar>
std::vector<ExponentVector> relevant_alphas(const HomogeneousPolynomial<Scalar>& f) {
  std::set<ExponentVector> out;
  for (const auto& [a, c] : f.terms()) {
    // alpha = a - e_j - e_k for every way to remove two units.
    for (int j = 0; j < f.n(); ++j) {
      if (a[j] == 0) continue;
      for (int k = j; k < f.n(); ++k) {
        if (a[k] - (k == j ? 1 : 0) <= 0) continue;
        ExponentVector b = a;
        --b[j];
        --b[k];
        out.insert(b);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

template <class Scalar>
LorentzianVerdict is_lorentzian(const HomogeneousPolynomial<Scalar>& f) {
  detail::require_lorentzian_input(f);
  LorentzianVerdict v;
  auto check = is_m_convex(f.support(), f.n(), f.d());
  if (!check.ok) {
    v.support_witness = check.witness;
    return v;
  }
  if (f.d() <= 1) {
    v.lorentzian = true;
    return v;
  }
  double worst = -1;
  for (const auto& alpha : detail::relevant_alphas(f)) {
    auto h = partial_hessian(f, alpha);
    if constexpr (std::is_same_v<Scalar, double>) {
      auto fi = hessian_inertia_float(h);
      worst = std::max(worst, fi.second_relative);
      v.marginal = v.marginal || fi.marginal;
      if (fi.inertia.positives > 1) {
        v.failing_alpha = alpha;
        v.failing_inertia = fi.inertia;
        v.margin = fi.second_relative;
        return v;
      }
    } else {
      auto in = hessian_inertia(h);
      if (in.positives > 1) {
        v.failing_alpha = alpha;
        v.failing_inertia = in;
        return v;
      }
    }
  }
  v.margin = worst;
  v.lorentzian = true;
  return v;
}

template <class Scalar>
bool is_strictly_lorentzian(const HomogeneousPolynomial<Scalar>& f) {
  detail::require_lorentzian_input(f);
  auto full = discrete_simplex(f.n(), f.d());
  if (f.size() != full.size()) return false;
  for (const auto& [a, c] : f.terms()) {
    if (!(c > 0)) return false;
  }
  if (f.d() <= 1) return true;
  const Inertia want{1, f.n() - 1, 0};
  for (const auto& alpha : discrete_simplex(f.n(), f.d() - 2)) {
    if (hessian_inertia(partial_hessian(f, alpha)) != want) return false;
  }
  return true;
}

// R_p: c_alpha -> c_alpha^p. R_0 gives the generating polynomial of the support.
inline FloatPolynomial power_map(const FloatPolynomial& f, double p) {
  if (!(p >= 0)) throw InputError("power map exponent must be nonnegative");
  FloatPolynomial out(f.n(), f.d());
  for (const auto& [a, c] : f.terms()) {
    if (c < 0) throw InputError("power map needs nonnegative coefficients");
    out.set(a, p == 0 ? 1.0 : std::pow(c, p));
  }
  return out;
}

inline ExactPolynomial power_map(const ExactPolynomial& f, unsigned p) {
  ExactPolynomial out(f.n(), f.d());
  for (const auto& [a, c] : f.terms()) {
    if (c < 0) throw InputError("power map needs nonnegative coefficients");
    Rational r = 1;
    for (unsigned k = 0; k < p; ++k) r *= c;
    out.set(a, r);
  }
  return out;
}

// N_t: c_alpha -> c_alpha / (alpha!)^t.
inline FloatPolynomial normalize(const FloatPolynomial& f, double t) {
  FloatPolynomial out(f.n(), f.d());
  for (const auto& [a, c] : f.terms()) {
    out.set(a, c / std::pow(factorial_of(a).get_d(), t));
  }
  return out;
}

inline ExactPolynomial normalize(const ExactPolynomial& f, int t) {
  ExactPolynomial out(f.n(), f.d());
  for (const auto& [a, c] : f.terms()) {
    Rational fa(factorial_of(a));
    Rational scale = 1;
    for (int k = 0; k < std::abs(t); ++k) scale *= fa;
    out.set(a, t >= 0 ? Rational(c / scale) : Rational(c * scale));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree 2.

struct Simplification {
  ExactPolynomial g;
  std::vector<Rational> lambdas;           // one per original variable
  std::vector<std::vector<int>> partition; // blocks of support coordinates
};

inline MConvexSet support_set(const ExactPolynomial& f) {
  try {
    return MConvexSet(f.n(), f.d(), f.support());
  } catch (const InputError& e) {
    throw PreconditionError(std::string("support is not M-convex: ") + e.what());
  }
}

// Substitutes y_p = sum_{i in block p} lambda_i x_i into g.
inline ExactPolynomial substitute(const Simplification& s, int n) {
  ExactPolynomial out(n, 2);
  std::vector<int> block_of(n, -1);
  for (std::size_t p = 0; p < s.partition.size(); ++p) {
    for (int i : s.partition[p]) block_of[i] = static_cast<int>(p);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (block_of[i] < 0 || block_of[j] < 0) continue;
      ExponentVector e(s.partition.size(), 0);
      ++e[block_of[i]];
      ++e[block_of[j]];
      Rational c = s.g.coeff(e) * s.lambdas[i] * s.lambdas[j];
      ExponentVector a(n, 0);
      ++a[i];
      ++a[j];
      out.set(a, c);
    }
  }
  return out;
}

inline Simplification simplify_degree2(const ExactPolynomial& f) {
  if (f.d() != 2) throw InputError("simplification is defined in degree 2");
  detail::require_lorentzian_input(f);
  const int n = f.n();
  MConvexSet J = support_set(f);
  for (const auto& b : degenerate_relations(J, false)) {
    Rational lhs = f.coeff(J[b.lhs.first]) * f.coeff(J[b.lhs.second]);
    Rational rhs = f.coeff(J[b.rhs.first]) * f.coeff(J[b.rhs.second]);
    if (lhs != rhs) {
      throw PreconditionError("binomial relation fails: c" + format_exponent(J[b.lhs.first]) + " c" +
                              format_exponent(J[b.lhs.second]) + " != c" +
                              format_exponent(J[b.rhs.first]) + " c" +
                              format_exponent(J[b.rhs.second]));
    }
  }
  auto has = [&](int i, int j) {
    ExponentVector a(n, 0);
    ++a[i];
    ++a[j];
    return J.contains(a);
  };
  auto c_of = [&](int i, int j) {
    ExponentVector a(n, 0);
    ++a[i];
    ++a[j];
    return f.coeff(a);
  };
  std::vector<int> used;
  for (int i = 0; i < n; ++i) {
    if (delta_bounds(J).upper[i] > 0) used.push_back(i);
  }
  detail::UnionFind uf(n);
  for (std::size_t a = 0; a < used.size(); ++a) {
    for (std::size_t b = a + 1; b < used.size(); ++b) {
      if (!has(used[a], used[b])) uf.unite(used[a], used[b]);
    }
  }
  Simplification s;
  std::map<int, std::size_t> root_to_block;
  std::vector<int> block_of(n, -1);
  for (int i : used) {
    int r = uf.find(i);
    auto [it, fresh] = root_to_block.emplace(r, s.partition.size());
    if (fresh) s.partition.emplace_back();
    s.partition[it->second].push_back(i);
    block_of[i] = static_cast<int>(it->second);
  }
  const std::size_t r = s.partition.size();
  s.lambdas.assign(n, Rational(1));
  for (std::size_t p = 0; p < r; ++p) {
    const auto& block = s.partition[p];
    if (block.size() == 1) continue;
    std::optional<std::size_t> other;
    for (std::size_t q = 0; q < r && !other; ++q) {
      if (q != p) other = q;
    }
    if (!other) throw InternalError("a multi-element block needs a second block");
    Rational total = 0;
    std::vector<Rational> rows;
    for (int i : block) {
      Rational row = 0;
      for (int j : s.partition[*other]) row += c_of(i, j);
      rows.push_back(row);
      total += row;
    }
    for (std::size_t t = 0; t < block.size(); ++t) s.lambdas[block[t]] = rows[t] / total;
  }
  s.g = ExactPolynomial(static_cast<int>(r), 2);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = p; q < r; ++q) {
      Rational sum = 0;
      if (p == q) {
        if (s.partition[p].size() == 1) sum = c_of(s.partition[p][0], s.partition[p][0]);
      } else {
        for (int i : s.partition[p]) {
          for (int j : s.partition[q]) sum += c_of(i, j);
        }
      }
      ExponentVector e(r, 0);
      ++e[p];
      ++e[q];
      s.g.set(e, sum);
    }
  }
  if (!(substitute(s, n) == f)) {
    throw PreconditionError("coefficient blocks are not rank one; no simplification exists");
  }
  return s;
}

enum class Deg2Position { kInterior, kBoundary, kUndeterminedBoundary };
enum class Deg2Image { kReal, kComplex, kOutside };

inline std::string to_string(Deg2Position p) {
  switch (p) {
    case Deg2Position::kInterior: return "interior";
    case Deg2Position::kBoundary: return "boundary";
    case Deg2Position::kUndeterminedBoundary: return "undetermined-boundary";
  }
  return "?";
}
inline std::string to_string(Deg2Image i) {
  switch (i) {
    case Deg2Image::kReal: return "real-image";
    case Deg2Image::kComplex: return "complex-image";
    case Deg2Image::kOutside: return "outside-image";
  }
  return "?";
}

struct Deg2Classification {
  Deg2Position position;
  Deg2Image image;
  int hessian_rank = 0;
  int variables = 0;
  bool uniform_type = false;  // simplified support is U_{2,r}
};

inline Deg2Classification classify_deg2(const ExactPolynomial& f) {
  if (f.d() != 2) throw InputError("classification is defined in degree 2");
  if (!is_lorentzian(f).lorentzian) throw PreconditionError("polynomial is not Lorentzian");
  Simplification s = simplify_degree2(f);
  const int r = s.g.n();
  auto h = partial_hessian(s.g, ExponentVector(r, 0));
  Inertia in = hessian_inertia(h);
  Deg2Classification c;
  c.variables = r;
  c.hessian_rank = in.positives + in.negatives;
  bool uniform = true;
  for (int p = 0; p < r; ++p) {
    for (int q = p; q < r; ++q) {
      bool present = sgn(h[p][q]) != 0;
      if (present != (p != q)) uniform = false;
    }
  }
  c.uniform_type = uniform;
  if (c.hessian_rank == r) {
    c.position = Deg2Position::kInterior;
  } else {
    c.position = uniform ? Deg2Position::kBoundary : Deg2Position::kUndeterminedBoundary;
  }
  c.image = c.hessian_rank <= 3 ? Deg2Image::kReal
                                : (c.hessian_rank == 4 ? Deg2Image::kComplex : Deg2Image::kOutside);
  return c;
}

}  // namespace lorentz
