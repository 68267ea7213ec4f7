#pragma once

// Exact strict feasibility of open polyhedral cones {z : g_i . z > 0}.
//
// By Gordan's alternative the cone is empty iff 0 lies in conv{g_i}. We solve
//   min sum(a)  s.t.  sum_i y_i (g_i, 1) + a = (0, ..., 0, 1),  y, a >= 0
// with a dense exact simplex (Bland's rule). A positive optimum certifies a
// nonempty cone and the dual multipliers give an interior point.

#include <optional>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

inline std::optional<RationalVector> open_cone_point(const RationalMatrix& g, std::size_t dim) {
  if (g.empty()) {
    RationalVector z(dim, 0);
    if (dim > 0) z[0] = 1;
    return z;
  }
  for (const auto& row : g) {
    if (row.size() != dim) throw InternalError("constraint length mismatch");
    if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return sgn(x) == 0; })) {
      return std::nullopt;
    }
  }
  const std::size_t rows = dim + 1;
  const std::size_t ny = g.size();
  const std::size_t cols = ny + rows;  // y variables then artificials
  // Tableau: rows x (cols + 1), last column is the right-hand side.
  RationalMatrix t(rows, RationalVector(cols + 1, 0));
  for (std::size_t i = 0; i < ny; ++i) {
    for (std::size_t r = 0; r < dim; ++r) t[r][i] = g[i][r];
    t[dim][i] = 1;
  }
  for (std::size_t r = 0; r < rows; ++r) t[r][ny + r] = 1;
  t[dim][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = ny + r;
  // Reduced costs of phase one: c_j - sum over rows of column entries, where
  // artificials have cost 1.
  RationalVector cost(cols + 1, 0);
  for (std::size_t j = 0; j <= cols; ++j) {
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += t[r][j];
    cost[j] = (j >= ny && j < cols ? Rational(1) : Rational(0)) - s;
  }
  // cost[cols] holds minus the objective value.
  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    const std::size_t e = *enter;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][e]) <= 0) continue;
      Rational ratio = t[r][cols] / t[r][e];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) throw InternalError("phase-one simplex is unbounded");
    const std::size_t l = *leave;
    Rational inv = 1 / t[l][e];
    for (auto& x : t[l]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == l || sgn(t[r][e]) == 0) continue;
      Rational f = t[r][e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(t[l][j]) != 0) t[r][j] -= f * t[l][j];
      }
    }
    if (sgn(cost[e]) != 0) {
      Rational f = cost[e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(t[l][j]) != 0) cost[j] -= f * t[l][j];
      }
    }
    basis[l] = e;
  }
  const Rational optimum = -cost[cols];
  if (sgn(optimum) == 0) return std::nullopt;
  // Dual multipliers: reduced cost of artificial r is 1 - pi_r.
  RationalVector z(dim);
  for (std::size_t r = 0; r < dim; ++r) z[r] = -(1 - cost[ny + r]);
  for (const auto& row : g) {
    Rational s = 0;
    for (std::size_t r = 0; r < dim; ++r) s += row[r] * z[r];
    if (sgn(s) <= 0) throw InternalError("open-cone certificate failed verification");
  }
  return z;
}

}  // namespace lorentz
