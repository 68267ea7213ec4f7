#pragma once

// Base polytopes of M-convex sets and their faces.
//
// For an M-convex set C the base polytope is
//   { x : x([n]) = d,  x(S) <= r_C(S) for all S },  r_C(S) = max_{a in C} a(S),
// and C is exactly its set of lattice points. Every face is therefore the set
// of points of C tight for some family of these inequalities, so faces are
// handled as bit masks over the points of the ambient set J.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/representations.hpp"

namespace lorentz {

inline constexpr int kMaxPolytopeCoordinates = 20;
inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

// Affine dimension of the convex hull of the masked points of J.
inline int affine_dim(const MConvexSet& J, const PointMask& mask) {
  if (mask.none()) return -1;
  // All points lie on x([n]) = d with d > 0, so linear rank = affine dim + 1.
  // For d = 0 the set is the single origin.
  if (J.d() == 0) return 0;
  return static_cast<int>(int_rank(point_matrix(J, mask))) - 1;
}

struct TightSet {
  std::uint32_t subset = 0;  // S as a bit set over coordinates
  int rank = 0;              // r_C(S)
  PointMask mask;            // points of C with a(S) = r_C(S)
};

// Tight sets of all inequalities x(S) <= r_C(S), C = points of J in `cell`.
// Only proper, nonempty tight sets are returned, deduplicated by mask.
inline std::vector<TightSet> tight_sets(const MConvexSet& J, const PointMask& cell) {
  const int n = J.n();
  if (n > kMaxPolytopeCoordinates) {
    throw ResourceError("base polytope routines support at most " +
                        std::to_string(kMaxPolytopeCoordinates) + " coordinates");
  }
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (cell.test(a)) idx.push_back(a);
  }
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::vector<int> sums(idx.size());
  std::vector<TightSet> out;
  std::unordered_set<PointMask> seen;
  for (std::uint32_t s = 1; s < full; ++s) {
    int best = INT32_MIN;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const auto& p = J[idx[t]];
      int v = 0;
      for (std::uint32_t b = s; b; b &= b - 1) v += p[__builtin_ctz(b)];
      sums[t] = v;
      best = std::max(best, v);
    }
    PointMask m;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (sums[t] == best) m.set(idx[t]);
    }
    if (m == cell) continue;
    if (seen.insert(m).second) out.push_back(TightSet{s, best, m});
  }
  return out;
}

// Inclusion-maximal proper tight sets, i.e. the facets.
inline std::vector<TightSet> facet_sets(const std::vector<TightSet>& tight) {
  std::vector<TightSet> out;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < tight.size() && maximal; ++j) {
      if (i == j) continue;
      const auto& a = tight[i].mask;
      const auto& b = tight[j].mask;
      if ((a & b) == a && a != b) maximal = false;
    }
    if (maximal) out.push_back(tight[i]);
  }
  return out;
}

class LatticePolytope {
 public:
  LatticePolytope(const MConvexSet& J, const PointMask& cell) : J_(&J), cell_(cell) {
    if (cell.none()) throw InputError("polytope of an empty point set");
    tight_ = tight_sets(J, cell);
    facets_ = facet_sets(tight_);
    dim_ = affine_dim(J, cell);
  }

  const MConvexSet& ambient() const { return *J_; }
  const PointMask& points() const { return cell_; }
  int dim() const { return dim_; }
  const std::vector<TightSet>& facets() const { return facets_; }
  const std::vector<TightSet>& tight() const { return tight_; }

  // Smallest face containing the masked points.
  PointMask face_closure(const PointMask& sub) const {
    PointMask out = cell_;
    for (const auto& t : tight_) {
      if ((t.mask & sub) == sub) out &= t.mask;
    }
    return out;
  }
  bool is_face(const PointMask& sub) const {
    if (sub.none() || (sub & cell_) != sub) return false;
    return face_closure(sub) == sub;
  }

  std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < J_->size(); ++a) {
      if (!cell_.test(a)) continue;
      PointMask p;
      p.set(a);
      if (face_closure(p) == p) out.push_back(a);
    }
    return out;
  }

 private:
  const MConvexSet* J_;
  PointMask cell_;
  std::vector<TightSet> tight_;
  std::vector<TightSet> facets_;
  int dim_ = 0;
};

inline LatticePolytope base_polytope(const MConvexSet& J) { return LatticePolytope(J, J.full_mask()); }

struct Face {
  PointMask mask;
  int dim = 0;
};

struct FaceLattice {
  std::vector<Face> faces;  // every nonempty face, the polytope included
  std::vector<std::size_t> f_vector() const {
    int top = 0;
    for (const auto& f : faces) top = std::max(top, f.dim);
    std::vector<std::size_t> out(top + 1, 0);
    for (const auto& f : faces) ++out[f.dim];
    return out;
  }
  // sum over all nonempty faces of (-1)^dim; equals 1 for a polytope.
  long euler_sum() const {
    long s = 0;
    for (const auto& f : faces) s += (f.dim % 2 == 0) ? 1 : -1;
    return s;
  }
};

// All nonempty faces as intersections of facets, by breadth-first closure.
inline std::vector<PointMask> face_masks(const LatticePolytope& p, std::size_t budget = kDefaultFaceBudget) {
  std::vector<PointMask> out{p.points()};
  std::unordered_set<PointMask> seen{p.points()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const PointMask cur = out[head];
    for (const auto& f : p.facets()) {
      PointMask g = cur & f.mask;
      if (g.none() || g == cur) continue;
      if (seen.insert(g).second) {
        out.push_back(g);
        if (out.size() > budget) {
          throw ResourceError("face budget of " + std::to_string(budget) + " exceeded after " +
                              std::to_string(out.size()) + " faces");
        }
      }
    }
  }
  return out;
}

inline FaceLattice face_lattice(const LatticePolytope& p, std::size_t budget = kDefaultFaceBudget) {
  FaceLattice fl;
  for (const auto& m : face_masks(p, budget)) fl.faces.push_back(Face{m, affine_dim(p.ambient(), m)});
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t i = 0; i < a.mask.size(); ++i) {
      if (a.mask.test(i) != b.mask.test(i)) return a.mask.test(i);
    }
    return false;
  });
  return fl;
}

inline MConvexSet face_to_subset(const LatticePolytope& p, const Face& face) {
  return p.ambient().subset(face.mask);
}

// Whether conv(J_sub) is a face of conv(J).
inline bool is_face(const MConvexSet& J_sub, const MConvexSet& J) {
  return base_polytope(J).is_face(J.mask_of(J_sub));
}

}  // namespace lorentz
