#pragma once

// M-convex subsets of the discrete simplex and a small library of named
// matroids and polymatroids.

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/error.hpp"

namespace lorentz {

// Exponent vector alpha in N^n.
using ExponentVector = std::vector<int>;

// Subsets of the canonical point list of an M-convex set. Desk-scale inputs
// have at most a couple of hundred points; one extra bit is reserved for
// auxiliary generators (the vertical direction in lifted hulls).
inline constexpr std::size_t kMaxPoints = 255;
using PointMask = std::bitset<kMaxPoints + 1>;

inline int degree_of(const ExponentVector& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool dominated_by(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::string format_exponent(const ExponentVector& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

// All exponent vectors of length n and degree d, lexicographically sorted.
inline std::vector<ExponentVector> discrete_simplex(int n, int d) {
  std::vector<ExponentVector> out;
  if (n <= 0 || d < 0) return out;
  ExponentVector cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// Witness of a failed exchange: alpha_i < beta_i but no admissible j exists.
struct ExchangeWitness {
  ExponentVector alpha;
  ExponentVector beta;
  int i = -1;
};

struct MConvexCheck {
  bool ok = false;
  std::optional<ExchangeWitness> witness;
  explicit operator bool() const { return ok; }
};

// Exhaustive symmetric exchange check. Throws InputError on length or degree
// mismatch.
inline MConvexCheck is_m_convex(const std::vector<ExponentVector>& points, int n, int d) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) {
      throw InputError("point " + format_exponent(p) + " has length " +
                       std::to_string(p.size()) + ", expected " + std::to_string(n));
    }
    if (degree_of(p) != d) {
      throw InputError("point " + format_exponent(p) + " has degree " +
                       std::to_string(degree_of(p)) + ", expected " + std::to_string(d));
    }
    for (int x : p) {
      if (x < 0) throw InputError("negative exponent in " + format_exponent(p));
    }
  }
  MConvexCheck res;
  if (points.empty()) return res;
  std::set<ExponentVector> lookup(points.begin(), points.end());
  ExponentVector a2, b2;
  for (const auto& a : lookup) {
    for (const auto& b : lookup) {
      for (int i = 0; i < n; ++i) {
        if (a[i] >= b[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (a[j] <= b[j]) continue;
          a2 = a;
          ++a2[i];
          --a2[j];
          b2 = b;
          --b2[i];
          ++b2[j];
          found = lookup.count(a2) && lookup.count(b2);
        }
        if (!found) {
          res.witness = ExchangeWitness{a, b, i};
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

struct DeltaBounds {
  ExponentVector lower;
  ExponentVector upper;
};

// Finite M-convex set J in the discrete simplex of degree d in n variables.
// Points are kept lexicographically sorted and duplicate free; indices into
// points() are the canonical coordinates of R^J used everywhere else.
class MConvexSet {
 public:
  MConvexSet() = default;

  // Validates lengths, degrees and the exchange property.
  MConvexSet(int n, int d, std::vector<ExponentVector> points, std::string label = {})
      : n_(n), d_(d), points_(std::move(points)), label_(std::move(label)) {
    canonicalize();
    if (points_.empty()) throw InputError("M-convex sets are nonempty");
    auto check = is_m_convex(points_, n_, d_);
    if (!check.ok) {
      const auto& w = *check.witness;
      throw InputError("point set is not M-convex: exchange fails for alpha=" +
                       format_exponent(w.alpha) + ", beta=" + format_exponent(w.beta) +
                       ", i=" + std::to_string(w.i));
    }
    if (points_.size() > kMaxPoints) {
      throw ResourceError("M-convex set has " + std::to_string(points_.size()) +
                          " points; at most " + std::to_string(kMaxPoints) + " are supported");
    }
  }

  // For subsets already known to be M-convex (faces, subdivision cells).
  static MConvexSet trusted(int n, int d, std::vector<ExponentVector> points,
                            std::string label = {}) {
    MConvexSet s;
    s.n_ = n;
    s.d_ = d;
    s.points_ = std::move(points);
    s.label_ = std::move(label);
    s.canonicalize();
    return s;
  }

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ExponentVector>& points() const { return points_; }
  const ExponentVector& operator[](std::size_t i) const { return points_[i]; }
  const std::string& label() const { return label_; }

  std::optional<std::size_t> index_of(const ExponentVector& a) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), a);
    if (it == points_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }
  bool contains(const ExponentVector& a) const { return index_of(a).has_value(); }

  PointMask full_mask() const {
    PointMask m;
    for (std::size_t i = 0; i < points_.size(); ++i) m.set(i);
    return m;
  }

  // Points selected by mask, as a trusted M-convex set.
  MConvexSet subset(const PointMask& mask, std::string label = {}) const {
    std::vector<ExponentVector> pts;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (mask.test(i)) pts.push_back(points_[i]);
    }
    return trusted(n_, d_, std::move(pts), std::move(label));
  }

  // Mask of the points of `sub` inside this set; throws if one is missing.
  PointMask mask_of(const MConvexSet& sub) const {
    PointMask m;
    for (const auto& p : sub.points()) {
      auto idx = index_of(p);
      if (!idx) throw InputError("point " + format_exponent(p) + " is not contained in J");
      m.set(*idx);
    }
    return m;
  }

  bool is_matroid() const {
    return std::all_of(points_.begin(), points_.end(), [](const ExponentVector& p) {
      return std::all_of(p.begin(), p.end(), [](int x) { return x == 0 || x == 1; });
    });
  }

  friend bool operator==(const MConvexSet& a, const MConvexSet& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.points_ == b.points_;
  }

 private:
  void canonicalize() {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  int n_ = 0;
  int d_ = 0;
  std::vector<ExponentVector> points_;
  std::string label_;
};

inline DeltaBounds delta_bounds(const MConvexSet& J) {
  DeltaBounds b{J[0], J[0]};
  for (const auto& p : J.points()) {
    for (int i = 0; i < J.n(); ++i) {
      b.lower[i] = std::min(b.lower[i], p[i]);
      b.upper[i] = std::max(b.upper[i], p[i]);
    }
  }
  return b;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline ExponentVector project(const ExponentVector& p, const std::vector<int>& coords) {
  ExponentVector out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(p[c]);
  return out;
}

}  // namespace detail

// Coordinate blocks of the decomposition of J into indecomposable factors.
// Coordinates i and j are linked when some point admits the exchange
// alpha - e_i + e_j inside J; the resulting blocks are then verified to split
// J as the product of its projections.
inline std::vector<std::vector<int>> component_blocks(const MConvexSet& J) {
  const int n = J.n();
  detail::UnionFind uf(n);
  ExponentVector q;
  for (const auto& p : J.points()) {
    for (int i = 0; i < n; ++i) {
      if (p[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || uf.find(i) == uf.find(j)) continue;
        q = p;
        --q[i];
        ++q[j];
        if (J.contains(q)) uf.unite(i, j);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  std::sort(blocks.begin(), blocks.end());

  std::size_t product = 1;
  for (const auto& block : blocks) {
    std::set<ExponentVector> proj;
    for (const auto& p : J.points()) proj.insert(detail::project(p, block));
    product *= proj.size();
    if (product > J.size()) break;
  }
  if (product != J.size()) {
    throw InternalError("exchange blocks do not split J as a product of projections");
  }
  return blocks;
}

inline int components(const MConvexSet& J) {
  return static_cast<int>(component_blocks(J).size());
}

// Cartesian product on disjoint coordinates: J1 x J2 in N^{n1+n2}.
inline MConvexSet product(const MConvexSet& a, const MConvexSet& b) {
  std::vector<ExponentVector> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) {
      ExponentVector r = p;
      r.insert(r.end(), q.begin(), q.end());
      pts.push_back(std::move(r));
    }
  }
  return MConvexSet(a.n() + b.n(), a.d() + b.d(), std::move(pts));
}

// ---------------------------------------------------------------------------
// Named constructions.

inline ExponentVector indicator(int n, const std::vector<int>& elems) {
  ExponentVector v(n, 0);
  for (int e : elems) v.at(e) = 1;
  return v;
}

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline MConvexSet uniform_matroid(int rank, int n) {
  if (rank < 0 || rank > n || n <= 0) {
    throw InputError("uniform matroid needs 0 <= r <= n and n >= 1");
  }
  std::vector<ExponentVector> pts;
  for (const auto& s : k_subsets(n, rank)) pts.push_back(indicator(n, s));
  return MConvexSet(n, rank, std::move(pts),
                    "U" + std::to_string(rank) + "," + std::to_string(n));
}

inline MConvexSet full_simplex(int n, int d) {
  if (n <= 0 || d < 0) throw InputError("simplex needs n >= 1 and d >= 0");
  return MConvexSet(n, d, discrete_simplex(n, d),
                    "Delta^" + std::to_string(d) + "_" + std::to_string(n));
}

// Matroid of the given rank whose non-bases are listed as 0-based element
// subsets of size `rank`.
inline MConvexSet from_nonbases(int n, int rank, const std::vector<std::vector<int>>& nonbases,
                                std::string label = {}) {
  std::set<std::vector<int>> excluded;
  for (auto nb : nonbases) {
    if (static_cast<int>(nb.size()) != rank) {
      throw InputError("non-basis of size " + std::to_string(nb.size()) + " for rank " +
                       std::to_string(rank));
    }
    std::sort(nb.begin(), nb.end());
    for (int e : nb) {
      if (e < 0 || e >= n) throw InputError("non-basis element out of range");
    }
    excluded.insert(nb);
  }
  std::vector<ExponentVector> pts;
  for (const auto& s : k_subsets(n, rank)) {
    if (!excluded.count(s)) pts.push_back(indicator(n, s));
  }
  return MConvexSet(n, rank, std::move(pts), std::move(label));
}

// Rank-3 matroid on Z/n whose non-bases are the triples summing to 0 mod n.
inline MConvexSet elliptic_matroid(int n) {
  if (n < 4) throw InputError("elliptic matroid needs n >= 4");
  std::vector<std::vector<int>> nb;
  for (const auto& s : k_subsets(n, 3)) {
    if ((s[0] + s[1] + s[2]) % n == 0) nb.push_back(s);
  }
  return from_nonbases(n, 3, nb, "T" + std::to_string(n));
}

inline MConvexSet fano_matroid() {
  const std::vector<std::vector<int>> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return from_nonbases(7, 3, lines, "F7");
}

// Non-bases of the Betsy Ross matroid B11: the vanishing 3x3 minors of its
// golden-ratio representation (see grassmann.hpp, betsy_ross_matrix()).
inline const std::vector<std::vector<int>>& betsy_ross_nonbases() {
  static const std::vector<std::vector<int>> nb = {
      {0, 2, 8}, {0, 2, 9}, {0, 3, 6}, {0, 3, 7},  {0, 5, 10}, {0, 6, 7}, {0, 8, 9},
      {1, 3, 5}, {1, 3, 9}, {1, 4, 7}, {1, 4, 8},  {1, 5, 9},  {1, 6, 10}, {1, 7, 8},
      {2, 4, 5}, {2, 4, 6}, {2, 5, 6}, {2, 7, 10}, {2, 8, 9},  {3, 5, 9},  {3, 6, 7},
      {3, 8, 10}, {4, 5, 6}, {4, 7, 8}, {4, 9, 10}};
  return nb;
}

inline MConvexSet betsy_ross_matroid() {
  return from_nonbases(11, 3, betsy_ross_nonbases(), "B11");
}

}  // namespace lorentz
