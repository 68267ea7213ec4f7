#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with the library beyond the container types.

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/rational.hpp"

namespace oracle {

using Point = std::vector<int>;

// Symmetric exchange, quantified from the side of the decreasing coordinate.
inline bool m_convex(const std::vector<Point>& pts) {
  std::set<Point> s(pts.begin(), pts.end());
  if (s.empty()) return false;
  const std::size_t n = pts[0].size();
  for (const auto& a : s) {
    for (const auto& b : s) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!(a[i] > b[i])) continue;
        bool ok = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (!(a[j] < b[j])) continue;
          Point a2 = a, b2 = b;
          a2[i] -= 1;
          a2[j] += 1;
          b2[i] += 1;
          b2[j] -= 1;
          if (s.count(a2) && s.count(b2)) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Exchange inequality for functions, over a map keyed by point.
inline bool m_convex_function(const std::vector<Point>& pts, const std::vector<lorentz::Rational>& nu) {
  std::map<Point, lorentz::Rational> f;
  for (std::size_t k = 0; k < pts.size(); ++k) f[pts[k]] = nu[k];
  const std::size_t n = pts[0].size();
  for (const auto& [a, fa] : f) {
    for (const auto& [b, fb] : f) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!(a[i] > b[i])) continue;
        bool ok = false;
        for (std::size_t j = 0; j < n && !ok; ++j) {
          if (!(a[j] < b[j])) continue;
          Point a2 = a, b2 = b;
          a2[i] -= 1;
          a2[j] += 1;
          b2[i] += 1;
          b2[j] -= 1;
          auto ia = f.find(a2), ib = f.find(b2);
          if (ia != f.end() && ib != f.end() && fa + fb >= ia->second + ib->second) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Split functions of U_{2,n}: value 1 on pairs inside one block of a split
// A | B with |A|, |B| >= 2, value 0 on crossing pairs.
inline std::vector<std::vector<lorentz::Rational>> split_functions(const lorentz::MConvexSet& J) {
  const int n = J.n();
  std::vector<std::vector<lorentz::Rational>> out;
  for (unsigned a = 1; a + 1 < (1u << n); ++a) {
    if (a & 1u) continue;  // element 0 always lies in B; each split once
    const int sa = __builtin_popcount(a);
    if (sa < 2 || n - sa < 2) continue;
    std::vector<lorentz::Rational> nu;
    for (const auto& p : J.points()) {
      int i = -1, j = -1;
      for (int k = 0; k < n; ++k) {
        if (p[k]) (i < 0 ? i : j) = k;
      }
      const bool same = ((a >> i) & 1u) == ((a >> j) & 1u);
      nu.emplace_back(same ? 1 : 0);
    }
    out.push_back(std::move(nu));
  }
  return out;
}

inline Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& cols) {
  Eigen::MatrixXd m(cols.empty() ? 0 : cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

inline int numeric_rank(const std::vector<std::vector<double>>& cols) {
  if (cols.empty()) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_matrix(cols));
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

inline std::vector<double> as_double(const std::vector<lorentz::Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

// Lineality columns x -> x_i for each coordinate, as vectors over the points.
inline std::vector<std::vector<double>> lineality(const lorentz::MConvexSet& J) {
  std::vector<std::vector<double>> cols;
  for (int i = 0; i < J.n(); ++i) {
    std::vector<double> c;
    for (const auto& p : J.points()) c.push_back(p[i]);
    cols.push_back(std::move(c));
  }
  return cols;
}

// nu ~ mu iff nu = c mu + w with c > 0 and w in the lineality space.
inline bool equivalent_rays(const lorentz::MConvexSet& J, const std::vector<lorentz::Rational>& nu,
                            const std::vector<lorentz::Rational>& mu) {
  auto w = lineality(J);
  const int base = numeric_rank(w);
  auto wn = w;
  wn.push_back(as_double(nu));
  auto wm = w;
  wm.push_back(as_double(mu));
  auto both = wn;
  both.push_back(as_double(mu));
  const int rn = numeric_rank(wn), rm = numeric_rank(wm), rb = numeric_rank(both);
  if (rn != base + 1 || rm != base + 1 || rb != base + 1) return false;
  auto cols = w;
  cols.insert(cols.begin(), as_double(mu));
  Eigen::MatrixXd a = to_matrix(cols);
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(as_double(nu).data(), nu.size());
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  return x(0) > 0;
}

// Affine dimension of a point set.
inline int affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<double>> cols;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<double> c;
    for (std::size_t i = 0; i < pts[k].size(); ++i) c.push_back(pts[k][i] - pts[0][i]);
    cols.push_back(std::move(c));
  }
  return numeric_rank(cols);
}

// Faces of conv(pts) for an M-convex set: argmax sets of weight vectors with
// entries in {0, ..., n-1}, which realize every ordered set partition.
inline std::set<std::vector<std::size_t>> faces_by_weights(const std::vector<Point>& pts) {
  const std::size_t n = pts[0].size();
  std::set<std::vector<std::size_t>> out;
  std::vector<int> w(n, 0);
  while (true) {
    long best = -1;
    std::vector<std::size_t> arg;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      long v = 0;
      for (std::size_t i = 0; i < n; ++i) v += static_cast<long>(w[i]) * pts[k][i];
      if (v > best) {
        best = v;
        arg.clear();
      }
      if (v == best) arg.push_back(k);
    }
    out.insert(arg);
    std::size_t i = 0;
    while (i < n && w[i] == static_cast<int>(n) - 1) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

// Sign counts (positive, negative, zero) from a float eigensolver.
inline std::array<int, 3> eigen_signs(const Eigen::MatrixXd& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::array<int, 3> out{0, 0, 0};
  for (int i = 0; i < m.rows(); ++i) {
    double e = es.eigenvalues()(i);
    ++out[e > tol ? 0 : (e < -tol ? 1 : 2)];
  }
  return out;
}

}  // namespace oracle
