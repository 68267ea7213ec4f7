#pragma once

// JSON file formats for point sets, polynomials, matrices, representations,
// rays and reports.

#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lorentz/combinatorics.hpp"
#include "lorentz/dressian.hpp"
#include "lorentz/error.hpp"
#include "lorentz/euler.hpp"
#include "lorentz/grassmann.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/polytope.hpp"
#include "lorentz/rational.hpp"

namespace lorentz::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::vector<ExponentVector> point_list(const json& j) {
  if (!j.is_array()) throw InputError("'points' must be an array");
  std::vector<ExponentVector> out;
  for (const auto& p : j) out.push_back(int_list(p));
  return out;
}

}  // namespace detail

// A JSON number or string: exact for integers and rational strings, inexact
// for floating literals.
struct Scalar {
  bool exact = true;
  Rational value;
  double approx = 0;
};

inline Scalar parse_scalar(const json& j) {
  Scalar s;
  if (j.is_string()) {
    s.value = parse_rational(j.get<std::string>());
  } else if (j.is_number_integer()) {
    s.value = Rational(j.get<long>());
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError("non-finite number");
    s.exact = false;
    s.value = Rational(x);
  } else {
    throw InputError("expected a number or a rational string, got " + j.dump());
  }
  s.approx = s.exact ? s.value.get_d() : j.get<double>();
  return s;
}

inline json rational_json(const Rational& r) { return r.get_str(); }

inline json rational_list_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

// ---------------------------------------------------------------------------
// Point sets.

inline MConvexSet parse_matroid(const json& j) {
  if (j.is_object() && j.contains("points")) {
    const int n = detail::int_field(j, "n");
    const int d = detail::int_field(j, "d");
    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
    return MConvexSet(n, d, detail::point_list(j["points"]), label);
  }
  const json& kind_j = detail::field(j, "kind");
  if (!kind_j.is_string()) throw InputError("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  const json params = j.contains("params") ? j["params"] : json::object();
  if (kind == "uniform") {
    const int r = params.contains("rank") ? detail::int_field(params, "rank") : detail::int_field(params, "r");
    return uniform_matroid(r, detail::int_field(params, "n"));
  }
  if (kind == "elliptic") return elliptic_matroid(detail::int_field(params, "n"));
  if (kind == "betsy_ross") return betsy_ross_matroid();
  if (kind == "fano") return fano_matroid();
  if (kind == "simplex") return full_simplex(detail::int_field(params, "n"), detail::int_field(params, "d"));
  if (kind == "from_nonbases") {
    const int rank = params.contains("rank") ? detail::int_field(params, "rank") : 3;
    std::vector<std::vector<int>> nb;
    for (const auto& t : detail::field(params, "nonbases")) nb.push_back(detail::int_list(t));
    return from_nonbases(detail::int_field(params, "n"), rank, nb);
  }
  throw InputError("unknown point-set kind '" + kind + "'");
}

inline json matroid_to_json(const MConvexSet& J) {
  json pts = json::array();
  for (const auto& p : J.points()) pts.push_back(p);
  json out{{"n", J.n()}, {"d", J.d()}, {"points", pts}};
  if (!J.label().empty()) out["label"] = J.label();
  return out;
}

inline json mask_to_json(const PointMask& mask, std::size_t size) {
  json out = json::array();
  for (std::size_t a = 0; a < size; ++a) {
    if (mask.test(a)) out.push_back(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials.

struct PolynomialInput {
  std::optional<ExactPolynomial> exact;  // present when every coefficient is exact
  FloatPolynomial floating;
};

inline PolynomialInput parse_polynomial(const json& j) {
  const int n = detail::int_field(j, "n");
  const int d = detail::int_field(j, "d");
  std::string convention = "normalized";
  if (j.contains("convention")) {
    if (!j["convention"].is_string()) throw InputError("'convention' must be a string");
    convention = j["convention"].get<std::string>();
  }
  if (convention != "normalized" && convention != "monomial") {
    throw InputError("convention must be 'normalized' or 'monomial'");
  }
  const bool monomial = convention == "monomial";
  ExactPolynomial exact(n, d);
  FloatPolynomial floating(n, d);
  bool all_exact = true;
  const json& terms = detail::field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  std::set<ExponentVector> seen;
  for (const auto& t : terms) {
    ExponentVector alpha = detail::int_list(detail::field(t, "alpha"));
    if (!seen.insert(alpha).second) throw InputError("repeated exponent " + format_exponent(alpha));
    Scalar c = parse_scalar(detail::field(t, "coeff"));
    all_exact = all_exact && c.exact;
    if (monomial) {
      exact.set_monomial(alpha, c.value);
      floating.set_monomial(alpha, c.approx);
    } else {
      exact.set(alpha, c.value);
      floating.set(alpha, c.approx);
    }
  }
  PolynomialInput out;
  if (all_exact) out.exact = std::move(exact);
  out.floating = std::move(floating);
  return out;
}

template <class Scalar_>
json polynomial_to_json(const HomogeneousPolynomial<Scalar_>& f) {
  json terms = json::array();
  for (const auto& [a, c] : f.terms()) {
    if constexpr (std::is_same_v<Scalar_, double>) {
      terms.push_back({{"alpha", a}, {"coeff", c}});
    } else {
      terms.push_back({{"alpha", a}, {"coeff", rational_json(c)}});
    }
  }
  return {{"n", f.n()}, {"d", f.d()}, {"convention", "normalized"}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Matrices for the Grassmann map.

struct MatrixInput {
  enum class Field { kRational, kGaussian, kGolden, kReal, kComplex };
  Field field = Field::kRational;
  FieldMatrix<Rational> rational;
  FieldMatrix<GaussianRational> gaussian;
  FieldMatrix<Golden> golden;
  FieldMatrix<double> real;
  FieldMatrix<std::complex<double>> complex;
};

inline std::string to_string(MatrixInput::Field f) {
  switch (f) {
    case MatrixInput::Field::kRational: return "rational";
    case MatrixInput::Field::kGaussian: return "gaussian";
    case MatrixInput::Field::kGolden: return "golden";
    case MatrixInput::Field::kReal: return "real";
    case MatrixInput::Field::kComplex: return "complex";
  }
  return "unknown";
}

inline MatrixInput parse_matrix(const json& j) {
  const json& rows = j.is_object() ? detail::field(j, "rows") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
  bool golden = false, complex = false, inexact = false;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) throw InputError("matrix rows must be nonempty arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) throw InputError("matrix rows have different lengths");
    for (const auto& e : row) {
      if (e.is_object()) {
        if (e.contains("a") || e.contains("b")) golden = true;
        if (e.contains("re") || e.contains("im")) complex = true;
        for (const auto& [k, v] : e.items()) inexact = inexact || !parse_scalar(v).exact;
      } else {
        inexact = inexact || !parse_scalar(e).exact;
      }
    }
  }
  if (golden && complex) throw InputError("matrix mixes golden-ratio and complex entries");
  if (golden && inexact) throw InputError("golden-ratio entries must be exact");
  auto part = [](const json& e, const char* key) {
    return e.is_object() && e.contains(key) ? parse_scalar(e[key]) : Scalar{};
  };
  MatrixInput m;
  if (golden) {
    m.field = MatrixInput::Field::kGolden;
  } else if (complex) {
    m.field = inexact ? MatrixInput::Field::kComplex : MatrixInput::Field::kGaussian;
  } else {
    m.field = inexact ? MatrixInput::Field::kReal : MatrixInput::Field::kRational;
  }
  for (const auto& row : rows) {
    std::vector<Rational> rq;
    std::vector<GaussianRational> rg;
    std::vector<Golden> rgo;
    std::vector<double> rr;
    std::vector<std::complex<double>> rc;
    for (const auto& e : row) {
      if (e.is_object()) {
        for (const auto& [k, v] : e.items()) {
          if (k != "a" && k != "b" && k != "re" && k != "im") throw InputError("unknown matrix entry key '" + k + "'");
        }
      }
      if (golden) {
        Scalar a = e.is_object() ? part(e, "a") : parse_scalar(e);
        Scalar b = part(e, "b");
        // Plain entries are ordinary rationals, i.e. a = 2x.
        rgo.push_back(e.is_object() ? Golden(a.value, b.value) : Golden(2 * a.value, 0));
      } else if (complex) {
        Scalar re = e.is_object() ? part(e, "re") : parse_scalar(e);
        Scalar im = part(e, "im");
        rg.emplace_back(re.value, im.value);
        rc.emplace_back(re.approx, im.approx);
      } else {
        Scalar x = parse_scalar(e);
        rq.push_back(x.value);
        rr.push_back(x.approx);
      }
    }
    m.rational.push_back(std::move(rq));
    m.gaussian.push_back(std::move(rg));
    m.golden.push_back(std::move(rgo));
    m.real.push_back(std::move(rr));
    m.complex.push_back(std::move(rc));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Representations.

struct RepresentationInput {
  MConvexSet support;
  std::optional<std::vector<Rational>> exact;  // aligned with support
  std::vector<double> floating;
};

inline RepresentationInput parse_representation(const json& j) {
  auto pts = detail::point_list(detail::field(j, "points"));
  const json& vals = detail::field(j, "values");
  if (!vals.is_array() || vals.size() != pts.size()) {
    throw InputError("'values' must have one entry per point");
  }
  if (pts.empty()) throw InputError("representation needs at least one point");
  const int n = static_cast<int>(pts[0].size());
  const int d = degree_of(pts[0]);
  RepresentationInput out;
  out.support = MConvexSet(n, d, pts);
  if (out.support.size() != pts.size()) throw InputError("repeated point in representation");
  std::vector<Rational> exact(pts.size());
  out.floating.assign(pts.size(), 0);
  bool all_exact = true;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Scalar s = parse_scalar(vals[k]);
    if (s.value < 0) throw InputError("representation values must be nonnegative");
    const std::size_t a = *out.support.index_of(pts[k]);
    exact[a] = s.value;
    out.floating[a] = s.approx;
    all_exact = all_exact && s.exact;
  }
  if (all_exact) out.exact = std::move(exact);
  return out;
}

// ---------------------------------------------------------------------------
// Rays and M-convex functions.

inline std::vector<Rational> parse_values(const json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) {
    throw InputError("expected " + std::to_string(size) + " values aligned with the points of J");
  }
  std::vector<Rational> out;
  for (const auto& x : j) {
    Scalar s = parse_scalar(x);
    if (!s.exact) throw InputError("function values must be exact integers or rational strings");
    out.push_back(s.value);
  }
  return out;
}

inline std::vector<MConvexFunction> parse_rays(const json& j, const MConvexSet& J) {
  const json& list = j.is_object() ? detail::field(j, "rays") : j;
  if (!list.is_array()) throw InputError("rays must be a list");
  std::vector<MConvexFunction> out;
  for (const auto& r : list) out.push_back(MConvexFunction{J, parse_values(detail::field(r, "values"), J.size())});
  return out;
}

inline MConvexFunction parse_function(const json& j, const MConvexSet& J) {
  return MConvexFunction{J, parse_values(j.is_object() ? detail::field(j, "values") : j, J.size())};
}

inline json rays_to_json(const RayEnumeration& e) {
  json rays = json::array();
  for (const auto& r : e.rays) rays.push_back({{"values", rational_list_json(r.values)}});
  return {{"rays", rays},
          {"count", e.rays.size()},
          {"complete", e.complete},
          {"reduced_dim", e.reduced_dim},
          {"cones_visited", e.cones_visited},
          {"relations", e.relations},
          {"one_dimensional", e.one_dimensional()}};
}

inline json subdivision_to_json(const Subdivision& s, const MConvexSet& J) {
  json cells = json::array();
  for (const auto& c : s.cells) cells.push_back(mask_to_json(c, J.size()));
  return {{"cells", cells}, {"count", s.cells.size()}};
}

// ---------------------------------------------------------------------------
// Reports.

inline json exchange_witness_json(const ExchangeWitness& w) {
  return {{"alpha", w.alpha}, {"beta", w.beta}, {"i", w.i}};
}

inline json verdict_to_json(const LorentzianVerdict& v) {
  json out{{"lorentzian", v.lorentzian}};
  if (v.support_witness) out["support_witness"] = exchange_witness_json(*v.support_witness);
  if (v.failing_alpha) out["failing_alpha"] = *v.failing_alpha;
  if (v.failing_inertia) {
    out["failing_inertia"] = {v.failing_inertia->positives, v.failing_inertia->negatives,
                              v.failing_inertia->zeros};
  }
  out["margin"] = v.margin;
  out["marginal"] = v.marginal;
  return out;
}

inline json euler_report_to_json(const EulerReport& r) {
  return {{"g", r.tallies.g},
          {"f", r.tallies.f},
          {"chi", r.chi},
          {"rays", r.ray_count},
          {"complete", r.complete},
          {"initial_subsets", r.initial_subsets},
          {"runtime_ms", r.runtime_ms}};
}

inline json stable_euler_to_json(const StableEulerReport& r) {
  return {{"chi", r.chi},
          {"non_injective", r.non_injective},
          {"f_vector", r.f_vector},
          {"assumption", r.assumption}};
}

}  // namespace lorentz::io
