#pragma once

// Initial subsets, the (g_i) and (f_ij) tallies, and Euler characteristics of
// closed Lorentzian strata.

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lorentz/combinatorics.hpp"
#include "lorentz/dressian.hpp"
#include "lorentz/error.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/polytope.hpp"
#include "lorentz/representations.hpp"

namespace lorentz {

struct InitialSubset {
  PointMask mask;
  int dim = 0;
  bool is_face = false;
  int source = -1;  // -1: face of BP_J, otherwise index of the ray
};

struct EulerOptions {
  std::size_t face_budget = kDefaultFaceBudget;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

// Faces of BP_J together with the faces of every cell of the subdivision
// induced by each ray, deduplicated by point set.
inline std::vector<InitialSubset> initial_subsets(const MConvexSet& J, const std::vector<MConvexFunction>& rays,
                                                  const EulerOptions& opt = {}) {
  const LatticePolytope bp = base_polytope(J);
  std::vector<InitialSubset> out;
  std::unordered_map<PointMask, std::size_t> index;
  for (const auto& m : face_masks(bp, opt.face_budget)) {
    index.emplace(m, out.size());
    out.push_back(InitialSubset{m, 0, true, -1});
  }
  for (std::size_t r = 0; r < rays.size(); ++r) {
    for (const auto& cell : induced_subdivision(J, rays[r].values, false).cells) {
      LatticePolytope cp(J, cell);
      for (const auto& m : face_masks(cp, opt.face_budget)) {
        if (index.emplace(m, out.size()).second) {
          out.push_back(InitialSubset{m, 0, false, static_cast<int>(r)});
          if (out.size() > opt.face_budget) throw ResourceError("initial subset budget exceeded");
        }
      }
    }
  }
  detail::parallel_for(out.size(), opt.threads, [&](std::size_t i) {
    out[i].dim = affine_dim(J, out[i].mask);
    if (!out[i].is_face) out[i].is_face = bp.is_face(out[i].mask);
  });
  return out;
}

struct Tallies {
  std::vector<long> g;               // g[i]: non-face initial subsets of dimension i
  std::vector<std::vector<long>> f;  // f[i][j]: faces of dimension i with j ray images
};

namespace detail {

// Number of distinct nonzero classes of the ray restrictions in V_F / W_F.
inline int ray_image_count(const MConvexSet& J, const PointMask& mask, const std::vector<IntVector>& rays) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (mask.test(a)) idx.push_back(a);
  }
  auto restrict_to = [&](const IntVector& r) {
    IntVector out;
    out.reserve(idx.size());
    for (auto a : idx) out.push_back(r[a]);
    return out;
  };
  std::vector<IntVector> classes;
  try {
    const IntReduced red = fraction_free_reduce(point_matrix(J, mask));
    for (const auto& r : rays) classes.push_back(reduce_modulo(red, restrict_to(r)));
  } catch (const IntOverflow&) {
    classes.clear();
    RationalMatrix rows;
    for (const auto& row : point_matrix(J, mask)) rows.emplace_back(row.begin(), row.end());
    const auto w = RationalSubspace::span(rows, idx.size());
    for (const auto& r : rays) {
      auto rr = restrict_to(r);
      auto c = primitive_integer_vector(w.reduce(RationalVector(rr.begin(), rr.end())));
      IntVector iv;
      for (const auto& x : c) {
        if (!x.fits_slong_p()) throw ResourceError("ray class exceeds int64");
        iv.push_back(x.get_si());
      }
      classes.push_back(std::move(iv));
    }
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  int count = 0;
  for (const auto& c : classes) {
    if (std::any_of(c.begin(), c.end(), [](std::int64_t x) { return x != 0; })) ++count;
  }
  return count;
}

inline std::vector<IntVector> integer_rays(const std::vector<MConvexFunction>& rays) {
  std::vector<IntVector> out;
  for (const auto& r : rays) {
    IntVector v;
    for (const auto& x : primitive_integer_vector(r.values)) {
      if (!x.fits_slong_p()) throw ResourceError("ray value exceeds int64");
      v.push_back(x.get_si());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

inline Tallies tallies(const MConvexSet& J, const std::vector<InitialSubset>& subsets,
                       const std::vector<MConvexFunction>& rays, const EulerOptions& opt = {}) {
  const int top = affine_dim(J, J.full_mask());
  Tallies t;
  t.g.assign(top + 1, 0);
  t.f.assign(top + 1, std::vector<long>(rays.size() + 1, 0));
  const auto irays = detail::integer_rays(rays);
  std::vector<int> images(subsets.size(), -1);
  detail::parallel_for(subsets.size(), opt.threads, [&](std::size_t i) {
    if (subsets[i].is_face) images[i] = detail::ray_image_count(J, subsets[i].mask, irays);
  });
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    if (s.is_face) {
      ++t.f[s.dim][images[i]];
    } else {
      ++t.g[s.dim];
    }
  }
  return t;
}

inline long euler_from_tallies(const Tallies& t) {
  long chi = 0;
  for (std::size_t i = 0; i < t.g.size(); ++i) {
    long term = t.g[i];
    for (std::size_t j = 0; j < t.f[i].size(); ++j) term += t.f[i][j] * (1 - static_cast<long>(j));
    chi += (i % 2 == 0) ? term : -term;
  }
  return chi;
}

struct EulerReport {
  Tallies tallies;
  long chi = 0;
  std::size_t ray_count = 0;
  bool complete = false;
  std::size_t initial_subsets = 0;
  long face_euler_sum = 0;  // sum over faces of BP_J of (-1)^dim
  long runtime_ms = 0;
};

inline EulerReport euler_characteristic(const MConvexSet& J, const RayEnumeration& rays,
                                        const EulerOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_fan_one_dimensional(J, rays.rays)) {
    throw PreconditionError("the reduced Dressian is not one-dimensional: two rays span a cone");
  }
  EulerReport rep;
  const auto subsets = initial_subsets(J, rays.rays, opt);
  rep.tallies = tallies(J, subsets, rays.rays, opt);
  rep.chi = euler_from_tallies(rep.tallies);
  rep.ray_count = rays.rays.size();
  rep.complete = rays.complete;
  rep.initial_subsets = subsets.size();
  for (const auto& s : subsets) {
    if (s.is_face) rep.face_euler_sum += (s.dim % 2 == 0) ? 1 : -1;
  }
  if (rep.face_euler_sum != 1) {
    throw InternalError("faces of the base polytope have Euler sum " + std::to_string(rep.face_euler_sum));
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

// For rigid J the closed stratum is a ball; returns 1 after certifying
// rigidity and the Euler-Poincare sum of BP_J.
inline long rigid_euler(const MConvexSet& J, const RayOptions& ropt = {}, const EulerOptions& opt = {}) {
  auto e = enumerate_rays(J, ropt);
  if (!e.rays.empty()) {
    throw PreconditionError("J is not rigid: the reduced Dressian has " + std::to_string(e.rays.size()) + " rays");
  }
  auto fl = face_lattice(base_polytope(J), opt.face_budget);
  if (fl.euler_sum() != 1) throw InternalError("face lattice violates the Euler-Poincare relation");
  return 1;
}

struct StableEulerReport {
  long chi = 0;
  std::vector<long> non_injective;  // per face dimension
  std::vector<long> f_vector;
  std::string assumption;
};

// 2 - sum_i (-1)^i n_i for per-dimension counts n_i of non-injective faces.
inline long two_orbit_chi(const std::vector<long>& non_injective) {
  long sum = 0;
  for (std::size_t i = 0; i < non_injective.size(); ++i) sum += (i % 2 == 0) ? non_injective[i] : -non_injective[i];
  return 2 - sum;
}

// chi = 2 - sum over faces F with non-injective restriction of (-1)^dim F,
// valid under the hypothesis that the stable stratum consists of two
// rescaling orbits.
inline StableEulerReport two_orbit_stable_euler(const MConvexSet& M, const EulerOptions& opt = {}) {
  const auto v = v_space(M);
  const auto w = w_space(M);
  if (reduced_dim(v, w) != 1) throw PreconditionError("two-orbit formula needs reduced dimension 1");
  if (!is_rigid(M)) throw PreconditionError("two-orbit formula needs a rigid M-convex set");
  const QuotientRestriction res(M, v, w);
  const auto masks = face_masks(base_polytope(M), opt.face_budget);
  std::vector<int> dims(masks.size());
  std::vector<char> inj(masks.size());
  detail::parallel_for(masks.size(), opt.threads, [&](std::size_t i) {
    dims[i] = affine_dim(M, masks[i]);
    inj[i] = res.injective(masks[i]);
  });
  StableEulerReport rep;
  const int top = affine_dim(M, M.full_mask());
  rep.non_injective.assign(top + 1, 0);
  rep.f_vector.assign(top + 1, 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    ++rep.f_vector[dims[i]];
    if (!inj[i]) ++rep.non_injective[dims[i]];
  }
  rep.chi = two_orbit_chi(rep.non_injective);
  rep.assumption = "stable stratum assumed to consist of two rescaling orbits";
  return rep;
}

}  // namespace lorentz
