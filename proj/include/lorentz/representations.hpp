#pragma once

// Pluecker relations of an M-convex set, weak and strong T_q representations,
// degenerate binomial relations and the spaces V_J, W_J.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/hyperfield.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

struct PlueckerTerm {
  ExponentVector left;
  ExponentVector right;
  int sign = 1;
  std::optional<std::size_t> left_index;   // position in J, if supported
  std::optional<std::size_t> right_index;
  bool supported() const { return left_index && right_index; }
};

struct PlueckerRelation {
  ExponentVector alpha;
  int s = 2;
  std::vector<int> i_indices;  // i_0 <= ... <= i_s (0-based)
  std::vector<int> j_indices;  // j_2 <= ... <= j_s (0-based)
  std::vector<PlueckerTerm> terms;

  int supported_count() const {
    return static_cast<int>(std::count_if(terms.begin(), terms.end(),
                                          [](const PlueckerTerm& t) { return t.supported(); }));
  }
  std::vector<bool> supported_mask() const {
    std::vector<bool> m;
    for (const auto& t : terms) m.push_back(t.supported());
    return m;
  }
  // Index pairs (into J) of the supported terms.
  std::vector<std::pair<std::size_t, std::size_t>> supported_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& t : terms) {
      if (t.supported()) out.emplace_back(*t.left_index, *t.right_index);
    }
    return out;
  }
};

namespace detail {

inline PlueckerTerm make_term(const MConvexSet& J, ExponentVector left, ExponentVector right, int sign) {
  if (right < left) std::swap(left, right);
  PlueckerTerm t;
  t.left_index = J.index_of(left);
  t.right_index = J.index_of(right);
  t.left = std::move(left);
  t.right = std::move(right);
  t.sign = sign;
  return t;
}

// Multiset of term pairs, used to identify relations that only differ in the
// labelling of their indices.
inline std::vector<std::pair<ExponentVector, ExponentVector>> relation_key(const PlueckerRelation& r) {
  std::vector<std::pair<ExponentVector, ExponentVector>> key;
  for (const auto& t : r.terms) key.emplace_back(t.left, t.right);
  std::sort(key.begin(), key.end());
  return key;
}

template <class F>
void for_each_nondecreasing(int n, int len, F&& f) {
  std::vector<int> idx(len, 0);
  if (len == 0) {
    f(idx);
    return;
  }
  while (true) {
    f(idx);
    int p = len - 1;
    while (p >= 0 && idx[p] == n - 1) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < len; ++q) idx[q] = idx[p];
  }
}

}  // namespace detail

// 3-term relations for alpha in Delta^{d-2}, i <= j <= k <= l within the
// delta bounds; relations with no supported term are dropped.
inline std::vector<PlueckerRelation> three_term_relations(const MConvexSet& J) {
  std::vector<PlueckerRelation> out;
  const int n = J.n(), d = J.d();
  if (d < 2) return out;
  const auto bounds = delta_bounds(J);
  for (const auto& alpha : discrete_simplex(n, d - 2)) {
    if (!dominated_by(bounds.lower, alpha)) continue;
    detail::for_each_nondecreasing(n, 4, [&](const std::vector<int>& q) {
      ExponentVector top = alpha;
      for (int x : q) ++top[x];
      if (!dominated_by(top, bounds.upper)) return;
      const int i = q[0], j = q[1], k = q[2], l = q[3];
      auto with = [&](int a, int b) {
        ExponentVector v = alpha;
        ++v[a];
        ++v[b];
        return v;
      };
      PlueckerRelation r;
      r.alpha = alpha;
      r.s = 2;
      r.i_indices = {i, j, k};
      r.j_indices = {l};
      r.terms.push_back(detail::make_term(J, with(j, k), with(i, l), 1));
      r.terms.push_back(detail::make_term(J, with(i, k), with(j, l), -1));
      r.terms.push_back(detail::make_term(J, with(i, j), with(k, l), 1));
      if (r.supported_count() > 0) out.push_back(std::move(r));
    });
  }
  return out;
}

// (s+1)-term relations, deduplicated up to relabelling of the indices.
inline std::vector<PlueckerRelation> full_relations(const MConvexSet& J, int s) {
  const int n = J.n(), d = J.d();
  if (s < 2 || s > d) throw InputError("relation order s must satisfy 2 <= s <= d");
  const auto bounds = delta_bounds(J);
  std::vector<PlueckerRelation> out;
  std::set<std::vector<std::pair<ExponentVector, ExponentVector>>> seen;
  for (const auto& alpha : discrete_simplex(n, d - s)) {
    if (!dominated_by(bounds.lower, alpha)) continue;
    detail::for_each_nondecreasing(n, s + 1, [&](const std::vector<int>& is) {
      ExponentVector base = alpha;
      for (int x : is) ++base[x];
      if (!dominated_by(base, bounds.upper)) return;
      detail::for_each_nondecreasing(n, s - 1, [&](const std::vector<int>& js) {
        ExponentVector top = base;
        for (int x : js) ++top[x];
        if (!dominated_by(top, bounds.upper)) return;
        int eps = 0;
        for (int m = 2; m <= s; ++m) {
          if (is[m] < js.back()) ++eps;
        }
        PlueckerRelation r;
        r.alpha = alpha;
        r.s = s;
        r.i_indices = is;
        r.j_indices = js;
        for (int k = 0; k <= s; ++k) {
          ExponentVector left = alpha, right = alpha;
          for (int m = 0; m <= s; ++m) {
            if (m != k) ++left[is[m]];
          }
          ++right[is[k]];
          for (int x : js) ++right[x];
          r.terms.push_back(detail::make_term(J, left, right, ((k + eps) % 2 == 0) ? 1 : -1));
        }
        if (r.supported_count() == 0) return;
        if (!seen.insert(detail::relation_key(r)).second) return;
        out.push_back(std::move(r));
      });
    });
  }
  return out;
}

inline std::vector<PlueckerRelation> all_full_relations(const MConvexSet& J) {
  std::vector<PlueckerRelation> out;
  for (int s = 2; s <= J.d(); ++s) {
    auto rs = full_relations(J, s);
    out.insert(out.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representations: positive values aligned with the points of J.

template <class Scalar>
using Representation = std::vector<Scalar>;

namespace detail {

template <class Scalar>
void check_representation(const Representation<Scalar>& rho, const MConvexSet& J) {
  if (rho.size() != J.size()) {
    throw InputError("representation has " + std::to_string(rho.size()) + " values but J has " +
                     std::to_string(J.size()) + " points");
  }
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0)) {
      throw InputError("representation must be positive on J; value at " + format_exponent(J[i]) +
                       " is not");
    }
  }
}

template <class Scalar>
bool relations_null(const Representation<Scalar>& rho, const std::vector<PlueckerRelation>& rels,
                    const QParameter& q) {
  std::vector<Scalar> values;
  for (const auto& r : rels) {
    values.clear();
    for (const auto& [a, b] : r.supported_pairs()) values.push_back(rho[a] * rho[b]);
    if (!is_null(values, q)) return false;
  }
  return true;
}

}  // namespace detail

template <class Scalar>
bool is_weak_rep(const Representation<Scalar>& rho, const MConvexSet& J, const QParameter& q) {
  detail::check_representation(rho, J);
  return detail::relations_null(rho, three_term_relations(J), q);
}

template <class Scalar>
bool is_strong_rep(const Representation<Scalar>& rho, const MConvexSet& J, const QParameter& q) {
  detail::check_representation(rho, J);
  return detail::relations_null(rho, all_full_relations(J), q);
}

// ---------------------------------------------------------------------------
// Degenerate relations: exactly two supported terms, read as a binomial
// equality rho(a) rho(b) = rho(c) rho(d).

struct Binomial {
  std::pair<std::size_t, std::size_t> lhs;
  std::pair<std::size_t, std::size_t> rhs;

  friend bool operator<(const Binomial& x, const Binomial& y) {
    return std::tie(x.lhs, x.rhs) < std::tie(y.lhs, y.rhs);
  }
  friend bool operator==(const Binomial& x, const Binomial& y) {
    return x.lhs == y.lhs && x.rhs == y.rhs;
  }
};

inline std::vector<Binomial> degenerate_relations(const MConvexSet& J, bool use_full) {
  auto rels = use_full ? all_full_relations(J) : three_term_relations(J);
  std::set<Binomial> out;
  for (const auto& r : rels) {
    const int c = r.supported_count();
    if (c == 1) {
      throw InternalError("Pluecker relation at alpha=" + format_exponent(r.alpha) +
                          " has a single supported term; the support is not M-convex");
    }
    if (c != 2) continue;
    auto pairs = r.supported_pairs();
    auto norm = [](std::pair<std::size_t, std::size_t> p) {
      if (p.second < p.first) std::swap(p.first, p.second);
      return p;
    };
    auto a = norm(pairs[0]), b = norm(pairs[1]);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    out.insert(Binomial{a, b});
  }
  return {out.begin(), out.end()};
}

// Additive (log) form of a binomial as a row over R^J.
inline RationalVector binomial_row(const Binomial& b, std::size_t size) {
  RationalVector row(size, 0);
  row[b.lhs.first] += 1;
  row[b.lhs.second] += 1;
  row[b.rhs.first] -= 1;
  row[b.rhs.second] -= 1;
  return row;
}

inline RationalSubspace kernel_of_binomials(const std::vector<Binomial>& eqs, std::size_t size) {
  RowEchelon e(size);
  for (const auto& b : eqs) {
    e.insert(binomial_row(b, size));
    if (e.rank() == size) break;
  }
  return RationalSubspace::span(kernel_basis(e.rows(), size), size);
}

// V_J: kernel of the degenerate 3-term binomials (log coordinates).
inline RationalSubspace v_space(const MConvexSet& J) {
  return kernel_of_binomials(degenerate_relations(J, false), J.size());
}

// Same space from all degenerate relations of every order.
inline RationalSubspace v_space_full(const MConvexSet& J) {
  return kernel_of_binomials(degenerate_relations(J, true), J.size());
}

// W_J: row space of the n x |J| matrix (alpha_i)_{alpha in J}.
inline RationalSubspace w_space(const MConvexSet& J) {
  RationalMatrix rows(J.n(), RationalVector(J.size(), 0));
  for (std::size_t a = 0; a < J.size(); ++a) {
    for (int i = 0; i < J.n(); ++i) rows[i][a] = J[a][i];
  }
  return RationalSubspace::span(rows, J.size());
}

inline int tutte_rank(const RationalSubspace& v) { return static_cast<int>(v.dim()) - 1; }
inline int tutte_rank(const MConvexSet& J) { return tutte_rank(v_space(J)); }

inline int reduced_dim(const RationalSubspace& v, const RationalSubspace& w) {
  return static_cast<int>(v.dim()) - static_cast<int>(w.dim());
}
inline int reduced_dim(const MConvexSet& J) { return reduced_dim(v_space(J), w_space(J)); }

// Integer point matrix (rows = coordinates, columns = selected points).
inline IntMatrix point_matrix(const MConvexSet& J, const PointMask& mask) {
  IntMatrix m(J.n());
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (!mask.test(a)) continue;
    for (int i = 0; i < J.n(); ++i) m[i].push_back(J[a][i]);
  }
  return m;
}

// Precomputed data for restricting V_J / W_J to subsets of J.
class QuotientRestriction {
 public:
  QuotientRestriction(const MConvexSet& J, const RationalSubspace& v, const RationalSubspace& w)
      : J_(&J) {
    if (!v.contains(w)) throw InternalError("W_J is not contained in V_J");
    for (const auto& row : complement_basis(v, w)) {
      auto z = primitive_integer_vector(row);
      IntVector iv;
      for (const auto& x : z) {
        if (!x.fits_slong_p()) throw ResourceError("complement basis entry exceeds int64");
        iv.push_back(x.get_si());
      }
      complement_.push_back(std::move(iv));
    }
  }

  std::size_t reduced_dim() const { return complement_.size(); }
  const IntMatrix& complement() const { return complement_; }

  // Rank of the image of V_J/W_J in V_sub/W_sub for sub = points in mask.
  std::size_t image_rank(const PointMask& mask) const {
    IntMatrix a = point_matrix(*J_, mask);
    const std::size_t base = int_rank(a);
    for (const auto& c : complement_) {
      IntVector r;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (mask.test(i)) r.push_back(c[i]);
      }
      a.push_back(std::move(r));
    }
    return int_rank(a) - base;
  }

  bool injective(const PointMask& mask) const { return image_rank(mask) == complement_.size(); }

 private:
  const MConvexSet* J_;
  IntMatrix complement_;
};

inline bool restriction_injective(const MConvexSet& J, const MConvexSet& J_sub,
                                  const RationalSubspace& v, const RationalSubspace& w) {
  PointMask mask = J.mask_of(J_sub);
  return QuotientRestriction(J, v, w).injective(mask);
}

}  // namespace lorentz
