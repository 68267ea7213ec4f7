#pragma once

// Exact linear algebra: rational reduced row echelon forms, subspaces of Q^m,
// quotient coordinates, and a fraction-free int64 elimination used on the
// hot paths (face dimensions and coset reductions).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Incrementally maintained reduced row echelon basis of a row space.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols = 0) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const RationalMatrix& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the basis in place; returns true when v becomes zero.
  bool reduce(RationalVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      Rational f = v[p];
      const auto& row = rows_[r];
      for (std::size_t c = p; c < cols_; ++c) {
        if (sgn(row[c]) != 0) v[c] -= f * row[c];
      }
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  // Adds v to the span; returns false if it was already contained.
  bool insert(RationalVector v) {
    if (v.size() != cols_) throw InputError("row length mismatch in elimination");
    if (reduce(v)) return false;
    int p = 0;
    while (sgn(v[p]) == 0) ++p;
    Rational inv = 1 / v[p];
    for (std::size_t c = p; c < cols_; ++c) {
      if (sgn(v[c]) != 0) v[c] *= inv;
    }
    for (auto& row : rows_) {
      if (sgn(row[p]) == 0) continue;
      Rational f = row[p];
      for (std::size_t c = p; c < cols_; ++c) {
        if (sgn(v[c]) != 0) row[c] -= f * v[c];
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  std::size_t cols_;
  RationalMatrix rows_;
  std::vector<int> pivots_;
};

inline std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e(cols);
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

// Basis of {x : m x = 0} in Q^cols, one vector per free column.
inline RationalMatrix kernel_basis(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e(cols);
  for (const auto& row : m) e.insert(row);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots()) is_pivot[p] = true;
  RationalMatrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots()[r]] = -e.rows()[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Linear subspace of Q^m stored by its reduced row echelon basis, which makes
// the representation canonical.
class RationalSubspace {
 public:
  RationalSubspace() = default;
  explicit RationalSubspace(std::size_t ambient) : ech_(ambient) {}

  static RationalSubspace span(const RationalMatrix& rows, std::size_t ambient) {
    RationalSubspace s(ambient);
    for (const auto& r : rows) s.ech_.insert(r);
    return s;
  }
  static RationalSubspace kernel(const RationalMatrix& equations, std::size_t ambient) {
    return span(kernel_basis(equations, ambient), ambient);
  }

  std::size_t ambient_dim() const { return ech_.cols(); }
  std::size_t dim() const { return ech_.rank(); }
  const RationalMatrix& basis() const { return ech_.rows(); }
  const std::vector<int>& pivots() const { return ech_.pivots(); }

  bool contains(const RationalVector& v) const {
    RationalVector w = v;
    return ech_.reduce(w);
  }
  // Canonical representative of v + this subspace (zero on pivot columns).
  RationalVector reduce(RationalVector v) const {
    ech_.reduce(v);
    return v;
  }
  bool contains(const RationalSubspace& other) const {
    return std::all_of(other.basis().begin(), other.basis().end(),
                       [&](const RationalVector& v) { return contains(v); });
  }
  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

  void add(const RationalVector& v) { ech_.insert(v); }

 private:
  RowEchelon ech_;
};

// Vectors from `big`'s basis, chosen greedily in basis order, that complete a
// basis of `small` to one of `big`. Requires small inside big.
inline RationalMatrix complement_basis(const RationalSubspace& big, const RationalSubspace& small) {
  if (!big.contains(small)) throw InternalError("complement requested for a non-nested pair");
  RowEchelon e(big.ambient_dim());
  for (const auto& r : small.basis()) e.insert(r);
  RationalMatrix out;
  for (const auto& r : big.basis()) {
    if (e.insert(r)) out.push_back(r);
  }
  return out;
}

// Coordinates of vectors in span(complement) + lineality with respect to the
// complement part, i.e. the map V -> V/W in a fixed basis.
class QuotientCoordinates {
 public:
  QuotientCoordinates() = default;
  QuotientCoordinates(RationalMatrix complement, const RationalSubspace& lineality)
      : complement_(std::move(complement)), ambient_(lineality.ambient_dim()) {
    rows_ = complement_;
    for (const auto& r : lineality.basis()) rows_.push_back(r);
    const std::size_t k = rows_.size();
    // Pick k independent columns, then invert the square submatrix.
    RowEchelon cols_e(k);
    for (std::size_t c = 0; c < ambient_ && cols_.size() < k; ++c) {
      RationalVector col(k);
      for (std::size_t r = 0; r < k; ++r) col[r] = rows_[r][c];
      if (cols_e.insert(col)) cols_.push_back(static_cast<int>(c));
    }
    if (cols_.size() != k) throw InternalError("quotient basis is not independent");
    RationalMatrix aug(k, RationalVector(2 * k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) aug[r][c] = rows_[r][cols_[c]];
      aug[r][k + r] = 1;
    }
    // Gauss-Jordan on the k x k block.
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (sgn(aug[p][c]) == 0) ++p;
      std::swap(aug[p], aug[c]);
      Rational inv = 1 / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c || sgn(aug[r][c]) == 0) continue;
        Rational f = aug[r][c];
        for (std::size_t j = 0; j < 2 * k; ++j) aug[r][j] -= f * aug[c][j];
      }
    }
    // aug right half = inverse of M with M[r][c] = rows_[r][cols_[c]].
    inverse_.assign(k, RationalVector(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) inverse_[r][c] = aug[r][k + c];
    }
  }

  std::size_t dim() const { return complement_.size(); }
  const RationalMatrix& complement() const { return complement_; }

  // Quotient coordinates of v; nullopt when v is outside span(complement)+W.
  std::optional<RationalVector> coordinates(const RationalVector& v) const {
    const std::size_t k = rows_.size();
    // coeffs * M = v[cols]  =>  coeffs = v[cols] * M^{-1}.
    RationalVector coeffs(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& x = v[cols_[c]];
      if (sgn(x) == 0) continue;
      for (std::size_t r = 0; r < k; ++r) coeffs[r] += x * inverse_[c][r];
    }
    for (std::size_t j = 0; j < ambient_; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < k; ++r) {
        if (sgn(coeffs[r]) != 0 && sgn(rows_[r][j]) != 0) s += coeffs[r] * rows_[r][j];
      }
      if (s != v[j]) return std::nullopt;
    }
    coeffs.resize(complement_.size());
    return coeffs;
  }

  RationalVector lift(const RationalVector& z) const {
    RationalVector v(ambient_, 0);
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (sgn(z[i]) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] += z[i] * complement_[i][j];
    }
    return v;
  }

 private:
  RationalMatrix complement_;
  RationalMatrix rows_;
  std::size_t ambient_ = 0;
  std::vector<int> cols_;
  RationalMatrix inverse_;
};

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan elimination over int64 with overflow detection.
// After elimination every pivot equals `scale` and the pivot columns form
// scale * identity, so scale * v - sum_t v[pivot_t] * row_t is the canonical
// representative of scale * v modulo the row space.

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

struct IntReduced {
  IntMatrix rows;
  std::vector<int> pivots;
  std::int64_t scale = 1;
  std::size_t rank() const { return pivots.size(); }
};

class IntOverflow : public std::overflow_error {
 public:
  IntOverflow() : std::overflow_error("int64 overflow in fraction-free elimination") {}
};

namespace detail {
inline std::int64_t narrow(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw IntOverflow();
  return static_cast<std::int64_t>(x);
}
}  // namespace detail

inline IntReduced fraction_free_reduce(IntMatrix m) {
  IntReduced out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::int64_t piv = m[r][c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t a = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        __int128 v = static_cast<__int128>(piv) * m[i][j] - static_cast<__int128>(a) * m[r][j];
        if (v % prev != 0) throw InternalError("fraction-free elimination lost integrality");
        m[i][j] = detail::narrow(v / prev);
      }
    }
    prev = piv;
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  out.scale = prev;
  if (out.scale < 0) {
    out.scale = -out.scale;
    for (auto& row : out.rows) {
      for (auto& x : row) x = -x;
    }
  }
  return out;
}

// Canonical primitive representative of (positive multiple of) v modulo the
// row space of `red`. Returns the zero vector when v lies in the row space.
inline IntVector reduce_modulo(const IntReduced& red, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = detail::narrow(static_cast<__int128>(red.scale) * v[j]);
  }
  for (std::size_t t = 0; t < red.pivots.size(); ++t) {
    const std::int64_t f = v[red.pivots[t]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      out[j] = detail::narrow(static_cast<__int128>(out[j]) - static_cast<__int128>(f) * red.rows[t][j]);
    }
  }
  std::int64_t g = 0;
  for (auto x : out) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

inline std::size_t int_rank(const IntMatrix& m) {
  try {
    return fraction_free_reduce(m).rank();
  } catch (const IntOverflow&) {
    RationalMatrix r;
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    return rank(r, m.empty() ? 0 : m[0].size());
  }
}

}  // namespace lorentz
