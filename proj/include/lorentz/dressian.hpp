#pragma once

// M-convex functions on M-convex sets, the regular subdivisions they induce,
// and enumeration of the rays of the reduced Dressian.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/lp.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/polytope.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/representations.hpp"

namespace lorentz {

// Values aligned with the canonical point order of the domain.
struct MConvexFunction {
  MConvexSet domain;
  std::vector<Rational> values;
};

namespace detail {

inline void require_aligned(const std::vector<Rational>& nu, const MConvexSet& J) {
  if (nu.size() != J.size()) {
    throw InputError("function has " + std::to_string(nu.size()) + " values but J has " +
                     std::to_string(J.size()) + " points");
  }
}

}  // namespace detail

struct FunctionExchangeWitness {
  std::size_t alpha = 0;  // indices into J
  std::size_t beta = 0;
  int i = 0;
};

struct MConvexFunctionCheck {
  bool ok = false;
  std::optional<FunctionExchangeWitness> witness;
};

// Exchange property: for all alpha, beta and i with alpha_i > beta_i there is
// j with alpha_j < beta_j such that both exchanged points lie in J and
//   nu(alpha) + nu(beta) >= nu(alpha - e_i + e_j) + nu(beta + e_i - e_j).
inline MConvexFunctionCheck exchange_check(const std::vector<Rational>& nu, const MConvexSet& J) {
  detail::require_aligned(nu, J);
  const int n = J.n();
  ExponentVector a2, b2;
  for (std::size_t x = 0; x < J.size(); ++x) {
    for (std::size_t y = 0; y < J.size(); ++y) {
      if (x == y) continue;
      const auto& a = J[x];
      const auto& b = J[y];
      const Rational lhs = nu[x] + nu[y];
      for (int i = 0; i < n; ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (a[j] >= b[j]) continue;
          a2 = a;
          --a2[i];
          ++a2[j];
          b2 = b;
          ++b2[i];
          --b2[j];
          auto ia = J.index_of(a2);
          if (!ia) continue;
          auto ib = J.index_of(b2);
          if (!ib) continue;
          if (lhs >= nu[*ia] + nu[*ib]) found = true;
        }
        if (!found) {
          MConvexFunctionCheck c;
          c.witness = FunctionExchangeWitness{x, y, i};
          return c;
        }
      }
    }
  }
  return MConvexFunctionCheck{true, std::nullopt};
}

// Local criterion: on every 3-term relation the minimum of the supported
// terms nu(a) + nu(b) is attained at least twice.
inline bool local_check(const std::vector<Rational>& nu, const std::vector<PlueckerRelation>& rels) {
  std::vector<Rational> sums;
  for (const auto& r : rels) {
    sums.clear();
    for (const auto& [a, b] : r.supported_pairs()) sums.push_back(nu[a] + nu[b]);
    if (sums.size() < 2) continue;
    std::sort(sums.begin(), sums.end());
    if (sums[0] != sums[1]) return false;
  }
  return true;
}

// Ground truth is the exchange property; the local criterion is evaluated
// alongside and any disagreement is raised as an internal error.
inline MConvexFunctionCheck is_m_convex_function(const std::vector<Rational>& nu, const MConvexSet& J,
                                                 const std::vector<PlueckerRelation>& rels) {
  auto c = exchange_check(nu, J);
  if (c.ok != local_check(nu, rels)) {
    throw InternalError(std::string("exchange and local M-convexity criteria disagree (exchange says ") +
                        (c.ok ? "true" : "false") + ")");
  }
  return c;
}

inline MConvexFunctionCheck is_m_convex_function(const std::vector<Rational>& nu, const MConvexSet& J) {
  return is_m_convex_function(nu, J, three_term_relations(J));
}

// c_alpha = exp(-t nu(alpha)).
inline FloatPolynomial dressian_to_polynomial(const MConvexFunction& nu, double t) {
  detail::require_aligned(nu.values, nu.domain);
  FloatPolynomial f(nu.domain.n(), nu.domain.d());
  for (std::size_t a = 0; a < nu.domain.size(); ++a) {
    f.set(nu.domain[a], std::exp(-t * nu.values[a].get_d()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Regular subdivisions.

struct Subdivision {
  std::vector<PointMask> cells;  // maximal cells as masks over J
};

namespace detail {

// Affine function x -> w . x + c on R^n.
struct Affine {
  RationalVector w;
  Rational c;
  Rational operator()(const ExponentVector& a) const {
    Rational s = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) s += w[i] * a[i];
    }
    return s;
  }
};

inline PointMask contact_set(const MConvexSet& J, const std::vector<Rational>& nu, const Affine& h) {
  PointMask m;
  for (std::size_t a = 0; a < J.size(); ++a) {
    Rational diff = nu[a] - h(J[a]);
    if (sgn(diff) < 0) throw InternalError("supporting function lies above the lifted points");
    if (sgn(diff) == 0) m.set(a);
  }
  return m;
}

// Replaces h by h - lambda g with the largest lambda keeping h below nu;
// returns false when no point has g < 0.
inline bool tilt(const MConvexSet& J, const std::vector<Rational>& nu, Affine& h, const Affine& g) {
  std::optional<Rational> best;
  for (std::size_t a = 0; a < J.size(); ++a) {
    Rational ga = g(J[a]);
    if (sgn(ga) >= 0) continue;
    Rational lam = (nu[a] - h(J[a])) / (-ga);
    if (!best || lam < *best) best = lam;
  }
  if (!best) return false;
  for (std::size_t i = 0; i < h.w.size(); ++i) h.w[i] -= *best * g.w[i];
  h.c -= *best * g.c;
  return true;
}

}  // namespace detail

// Maximal cells of the regular subdivision of conv(J) induced by lifting
// alpha to height nu(alpha), found by walking across interior facets.
inline Subdivision induced_subdivision(const MConvexSet& J, const std::vector<Rational>& nu,
                                       bool check_input = true) {
  detail::require_aligned(nu, J);
  if (check_input && !is_m_convex_function(nu, J).ok) {
    throw PreconditionError("lifting function is not M-convex");
  }
  const int n = J.n();
  const int full_dim = affine_dim(J, J.full_mask());
  const LatticePolytope bp = base_polytope(J);

  // Start from the minimum and tilt until the contact set is full dimensional.
  detail::Affine h{RationalVector(n, 0), *std::min_element(nu.begin(), nu.end())};
  PointMask cur = detail::contact_set(J, nu, h);
  while (affine_dim(J, cur) < full_dim) {
    RationalMatrix rows;
    for (std::size_t a = 0; a < J.size(); ++a) {
      if (!cur.test(a)) continue;
      RationalVector r(J[a].begin(), J[a].end());
      r.push_back(1);
      rows.push_back(std::move(r));
    }
    bool moved = false;
    for (const auto& k : kernel_basis(rows, n + 1)) {
      detail::Affine g{RationalVector(k.begin(), k.begin() + n), k[n]};
      bool nonzero = false;
      for (std::size_t a = 0; a < J.size() && !nonzero; ++a) nonzero = sgn(g(J[a])) != 0;
      if (!nonzero) continue;
      if (!detail::tilt(J, nu, h, g)) {
        for (auto& x : g.w) x = -x;
        g.c = -g.c;
        if (!detail::tilt(J, nu, h, g)) throw InternalError("tilt found no point off the face");
      }
      moved = true;
      break;
    }
    if (!moved) throw InternalError("could not enlarge a lower face");
    cur = detail::contact_set(J, nu, h);
  }

  Subdivision sd;
  std::unordered_set<PointMask> seen{cur};
  std::vector<std::pair<PointMask, detail::Affine>> queue{{cur, h}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const PointMask cell = queue[head].first;
    const detail::Affine hc = queue[head].second;
    sd.cells.push_back(cell);
    for (const auto& f : facet_sets(tight_sets(J, cell))) {
      bool boundary = false;
      for (const auto& bf : bp.facets()) {
        if ((f.mask & bf.mask) == f.mask) {
          boundary = true;
          break;
        }
      }
      if (boundary) continue;
      // g = r - x(S) vanishes on the facet and is positive on the rest of the cell.
      detail::Affine g{RationalVector(n, 0), Rational(f.rank)};
      for (int i = 0; i < n; ++i) {
        if (f.subset & (1u << i)) g.w[i] = -1;
      }
      detail::Affine hn = hc;
      if (!detail::tilt(J, nu, hn, g)) throw InternalError("interior facet has no neighbouring cell");
      PointMask next = detail::contact_set(J, nu, hn);
      if (affine_dim(J, next) != full_dim) throw InternalError("neighbouring cell is not full dimensional");
      if (seen.insert(next).second) queue.emplace_back(next, hn);
    }
  }
  std::sort(sd.cells.begin(), sd.cells.end(), [](const PointMask& a, const PointMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.test(i) != b.test(i)) return a.test(i);
    }
    return false;
  });
  return sd;
}

inline Subdivision induced_subdivision(const MConvexFunction& nu) {
  return induced_subdivision(nu.domain, nu.values);
}

// ---------------------------------------------------------------------------
// Reduced Dressian.

inline constexpr int kDefaultMaxDim = 6;
inline constexpr std::size_t kDefaultConeBudget = 1'000'000;

struct DressianCell {
  int dim = 0;
  RationalVector witness;  // a relative interior point, quotient coordinates
};

struct RayEnumeration {
  std::vector<MConvexFunction> rays;
  bool complete = false;
  int reduced_dim = 0;
  std::size_t cones_visited = 0;
  std::size_t relations = 0;
  std::vector<DressianCell> cells;  // relatively open cells of the Dressian
  bool one_dimensional() const {
    return std::all_of(cells.begin(), cells.end(), [](const DressianCell& c) { return c.dim <= 1; });
  }
};

// Integer values with gcd 1 after clearing denominators, shifted to minimum 0.
inline std::vector<Rational> canonical_ray_values(const std::vector<Rational>& values) {
  auto z = primitive_integer_vector(values);
  Integer mn = *std::min_element(z.begin(), z.end());
  std::vector<Rational> out;
  out.reserve(z.size());
  for (const auto& x : z) out.emplace_back(x - mn);
  return out;
}

namespace detail {

struct Relation3 {
  RationalVector d1;  // b - a in quotient coordinates
  RationalVector d2;  // c - a
};

inline bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

inline RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RationalVector negated(const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Primitive integer direction, used to deduplicate constraints.
inline RationalVector primitive(const RationalVector& v) {
  auto z = primitive_integer_vector(v);
  return RationalVector(z.begin(), z.end());
}

// Relatively open cone {x : E x = 0, s . x > 0 for s in strict}.
struct ConeNode {
  RowEchelon eqs;
  RationalMatrix strict;
  RationalVector witness;
  std::size_t next = 0;
};

// Interior point of the cone or nothing when it is empty.
inline std::optional<RationalVector> cone_point(const RowEchelon& eqs, const RationalMatrix& strict,
                                                std::size_t k) {
  RationalMatrix basis = kernel_basis(eqs.rows(), k);
  const std::size_t m = basis.size();
  RationalMatrix g;
  for (const auto& s : strict) {
    RationalVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = dot(s, basis[j]);
    g.push_back(std::move(row));
  }
  if (m == 0) {
    if (!strict.empty()) return std::nullopt;
    return RationalVector(k, 0);
  }
  auto z = open_cone_point(g, m);
  if (!z) return std::nullopt;
  RationalVector x(k, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) x[i] += (*z)[j] * basis[j][i];
  }
  return x;
}

}  // namespace detail

struct RayOptions {
  int max_dim = kDefaultMaxDim;
  std::size_t cone_budget = kDefaultConeBudget;
};

// Rays of the reduced Dressian (Dressian modulo W_J and positive scaling),
// by exhaustive case splitting over the fully supported 3-term relations.
inline RayEnumeration enumerate_rays(const MConvexSet& J, const RayOptions& opt = {}) {
  RayEnumeration out;
  const auto v = v_space(J);
  const auto w = w_space(J);
  const RationalMatrix comp = complement_basis(v, w);
  const std::size_t k = comp.size();
  out.reduced_dim = static_cast<int>(k);
  if (static_cast<int>(k) > opt.max_dim) {
    throw ResourceError("reduced dimension " + std::to_string(k) + " exceeds max_dim " +
                        std::to_string(opt.max_dim) + "; supply fixture rays instead");
  }
  if (k == 0) {
    out.complete = true;
    out.cells.push_back(DressianCell{0, {}});
    return out;
  }
  // Linear forms of each term nu(a) + nu(b) in quotient coordinates.
  auto form = [&](std::size_t a, std::size_t b) {
    RationalVector f(k);
    for (std::size_t i = 0; i < k; ++i) f[i] = comp[i][a] + comp[i][b];
    return f;
  };
  std::vector<detail::Relation3> rels;
  std::set<std::pair<RationalVector, RationalVector>> seen;
  for (const auto& r : three_term_relations(J)) {
    auto pairs = r.supported_pairs();
    if (pairs.size() != 3) continue;
    std::vector<RationalVector> fs{form(pairs[0].first, pairs[0].second),
                                   form(pairs[1].first, pairs[1].second),
                                   form(pairs[2].first, pairs[2].second)};
    std::sort(fs.begin(), fs.end());
    auto d1 = detail::minus(fs[1], fs[0]);
    auto d2 = detail::minus(fs[2], fs[0]);
    if (detail::is_zero_vector(d1) && detail::is_zero_vector(d2)) continue;
    if (seen.emplace(d1, d2).second) rels.push_back({d1, d2});
  }
  out.relations = rels.size();

  std::vector<detail::ConeNode> stack;
  {
    detail::ConeNode root{RowEchelon(k), {}, RationalVector(k, 0), 0};
    root.witness[0] = 1;
    stack.push_back(std::move(root));
  }
  std::vector<RationalVector> ray_dirs;
  while (!stack.empty()) {
    detail::ConeNode node = std::move(stack.back());
    stack.pop_back();
    if (++out.cones_visited > opt.cone_budget) {
      throw ResourceError("cone budget of " + std::to_string(opt.cone_budget) + " exhausted");
    }
    // Skip relations that hold identically on the current subspace.
    while (node.next < rels.size()) {
      RationalVector a = rels[node.next].d1, b = rels[node.next].d2;
      if (node.eqs.reduce(a) && node.eqs.reduce(b)) {
        ++node.next;
      } else {
        break;
      }
    }
    if (node.next == rels.size()) {
      const int dim = static_cast<int>(k - node.eqs.rank());
      out.cells.push_back(DressianCell{dim, node.witness});
      if (dim == 1) {
        ray_dirs.push_back(node.witness);
        if (node.strict.empty()) ray_dirs.push_back(detail::negated(node.witness));
      }
      continue;
    }
    const auto& rel = rels[node.next];
    // Terms a, b = a + d1, c = a + d2. Options: all equal, a=b<c, a=c<b, b=c<a.
    struct Option {
      std::vector<RationalVector> eqs;
      std::optional<RationalVector> strict;
    };
    const RationalVector d12 = detail::minus(rel.d1, rel.d2);
    const std::vector<Option> options{
        {{rel.d1, rel.d2}, std::nullopt},
        {{rel.d1}, rel.d2},
        {{rel.d2}, rel.d1},
        {{d12}, detail::negated(rel.d1)},
    };
    for (const auto& o : options) {
      detail::ConeNode child{node.eqs, node.strict, node.witness, node.next + 1};
      bool witness_ok = true;
      for (const auto& e : o.eqs) {
        child.eqs.insert(e);
        if (sgn(detail::dot(e, node.witness)) != 0) witness_ok = false;
      }
      if (o.strict) {
        auto s = detail::primitive(*o.strict);
        if (std::find(child.strict.begin(), child.strict.end(), s) == child.strict.end()) {
          child.strict.push_back(s);
        }
        if (sgn(detail::dot(s, node.witness)) <= 0) witness_ok = false;
      }
      // A strict constraint that vanishes on the subspace empties the cone.
      bool dead = false;
      for (const auto& s : child.strict) {
        RationalVector t = s;
        if (child.eqs.reduce(t)) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      if (!witness_ok) {
        auto p = detail::cone_point(child.eqs, child.strict, k);
        if (!p) continue;
        child.witness = std::move(*p);
      }
      stack.push_back(std::move(child));
    }
  }
  out.complete = true;

  const QuotientCoordinates qc(comp, w);
  std::set<std::vector<Rational>> seen_rays;
  for (const auto& z : ray_dirs) {
    auto values = canonical_ray_values(qc.lift(z));
    if (seen_rays.insert(values).second) out.rays.push_back(MConvexFunction{J, std::move(values)});
  }
  std::sort(out.rays.begin(), out.rays.end(),
            [](const MConvexFunction& a, const MConvexFunction& b) { return a.values < b.values; });
  const auto rels_all = three_term_relations(J);
  for (const auto& r : out.rays) {
    if (!is_m_convex_function(r.values, J, rels_all).ok) {
      throw InternalError("enumerated ray is not an M-convex function");
    }
  }
  return out;
}

// Canonical representative of nu modulo W_J and positive scaling: the
// reduction modulo W followed by a primitive integer rescaling.
inline std::vector<Rational> reduced_class(const std::vector<Rational>& nu, const RationalSubspace& w) {
  auto r = w.reduce(nu);
  auto z = primitive_integer_vector(r);
  return std::vector<Rational>(z.begin(), z.end());
}

// Fixture rays: each must be M-convex, in V_J, nonzero modulo W_J and
// pairwise non-equivalent.
inline RayEnumeration verify_fixture_rays(const MConvexSet& J, std::vector<MConvexFunction> rays) {
  const auto v = v_space(J);
  const auto w = w_space(J);
  const auto rels = three_term_relations(J);
  std::set<std::vector<Rational>> classes;
  for (auto& r : rays) {
    if (!(r.domain == J)) throw InputError("fixture ray is defined on a different point set");
    if (!is_m_convex_function(r.values, J, rels).ok) throw PreconditionError("fixture ray is not M-convex");
    if (!v.contains(r.values)) throw PreconditionError("fixture ray is not in V_J");
    auto c = reduced_class(r.values, w);
    if (detail::is_zero_vector(c)) throw PreconditionError("fixture ray lies in the lineality space W_J");
    if (!classes.insert(c).second) throw PreconditionError("fixture rays are not pairwise non-equivalent");
    r.values = canonical_ray_values(r.values);
  }
  RayEnumeration out;
  out.rays = std::move(rays);
  out.complete = false;
  out.reduced_dim = reduced_dim(v, w);
  return out;
}

inline bool is_rigid(const MConvexSet& J, const RayOptions& opt = {}) {
  auto e = enumerate_rays(J, opt);
  return e.complete && e.rays.empty();
}

// No two rays span a cone of M-convex functions: every pairwise sum of
// representatives fails the exchange property.
inline bool is_fan_one_dimensional(const MConvexSet& J, const std::vector<MConvexFunction>& rays) {
  const auto rels = three_term_relations(J);
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      std::vector<Rational> sum(J.size());
      for (std::size_t i = 0; i < J.size(); ++i) sum[i] = rays[a].values[i] + rays[b].values[i];
      if (is_m_convex_function(sum, J, rels).ok) return false;
    }
  }
  return true;
}

}  // namespace lorentz
