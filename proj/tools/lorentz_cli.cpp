// Command-line front end. Every command prints one JSON report to standard
// output (or --out) and a one-line summary to standard error.
//
// Exit codes: 0 success, 1 property false under --assert, 2 input error,
// 3 resource cap, 4 internal error.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorentz/combinatorics.hpp"
#include "lorentz/dressian.hpp"
#include "lorentz/error.hpp"
#include "lorentz/euler.hpp"
#include "lorentz/gauge.hpp"
#include "lorentz/grassmann.hpp"
#include "lorentz/hyperfield.hpp"
#include "lorentz/io.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/polytope.hpp"
#include "lorentz/representations.hpp"

namespace {

using lorentz::io::json;
namespace io = lorentz::io;

enum ExitCode { kOk = 0, kFalse = 1, kInput = 2, kResource = 3, kInternal = 4 };

struct RunConfig {
  std::string matroid;
  std::string poly;
  std::string rep;
  std::string rays;
  std::string nu;
  std::string matrix;
  std::string values;
  std::string q = "1";
  std::string mode = "exact";
  std::string out;
  double tol = lorentz::kDefaultGaugeTolerance;
  double t = 0;
  bool t_given = false;
  double probe = lorentz::kDefaultProbeBound;
  int max_dim = lorentz::kDefaultMaxDim;
  std::size_t cone_budget = lorentz::kDefaultConeBudget;
  std::size_t face_budget = lorentz::kDefaultFaceBudget;
  unsigned threads = 0;
  bool assert_property = false;
  bool strong = false;
  bool list = false;
  bool bisect = false;
};

struct Outcome {
  json result;
  std::optional<bool> property;
  bool complete = true;
  std::string summary;
};

bool float_mode(const RunConfig& c) { return c.mode == "float"; }

lorentz::MConvexSet load_matroid(const RunConfig& c) { return io::parse_matroid(io::read_json_file(c.matroid)); }

lorentz::RayOptions ray_options(const RunConfig& c) { return {c.max_dim, c.cone_budget}; }

lorentz::EulerOptions euler_options(const RunConfig& c) { return {c.face_budget, c.threads}; }

std::string bool_word(bool b) { return b ? "true" : "false"; }

Outcome check_mconvex(const RunConfig& c) {
  const json j = io::read_json_file(c.matroid);
  Outcome o;
  if (j.is_object() && j.contains("points")) {
    std::vector<lorentz::ExponentVector> pts;
    for (const auto& p : j["points"]) pts.push_back(p.get<lorentz::ExponentVector>());
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    auto check = lorentz::is_m_convex(pts, n, d);
    o.result = {{"m_convex", check.ok}, {"size", pts.size()}};
    if (check.witness) o.result["witness"] = io::exchange_witness_json(*check.witness);
    if (check.ok) {
      lorentz::MConvexSet J(n, d, pts);
      o.result["matroid"] = J.is_matroid();
      o.result["components"] = lorentz::components(J);
    }
    o.property = check.ok;
  } else {
    auto J = io::parse_matroid(j);
    o.result = {{"m_convex", true}, {"size", J.size()}, {"matroid", J.is_matroid()},
                {"components", lorentz::components(J)}};
    o.property = true;
  }
  o.summary = "m_convex=" + bool_word(*o.property);
  return o;
}

std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw lorentz::InputError("--values needs a comma-separated list");
  return out;
}

Outcome check_null(const RunConfig& c) {
  const auto q = lorentz::QParameter::parse(c.q);
  const auto items = split_values(c.values);
  bool null = false;
  json vals = json::array();
  if (float_mode(c)) {
    std::vector<double> v;
    for (const auto& s : items) v.push_back(lorentz::parse_rational(s).get_d());
    null = lorentz::is_null(v, q);
    vals = v;
  } else {
    std::vector<lorentz::Rational> v;
    for (const auto& s : items) v.push_back(lorentz::parse_rational(s));
    null = lorentz::is_null(v, q);
    vals = io::rational_list_json(v);
  }
  Outcome o;
  o.result = {{"null", null}, {"q", q.str()}, {"values", vals}, {"mode", c.mode}};
  o.property = null;
  o.summary = "null=" + bool_word(null) + " in T_" + q.str();
  return o;
}

Outcome check_rep(const RunConfig& c) {
  const auto q = lorentz::QParameter::parse(c.q);
  const auto rep = io::parse_representation(io::read_json_file(c.rep));
  bool weak = false, strong = false;
  if (rep.exact && !float_mode(c)) {
    weak = lorentz::is_weak_rep(*rep.exact, rep.support, q);
    strong = weak && lorentz::is_strong_rep(*rep.exact, rep.support, q);
  } else {
    weak = lorentz::is_weak_rep(rep.floating, rep.support, q);
    strong = weak && lorentz::is_strong_rep(rep.floating, rep.support, q);
  }
  Outcome o;
  o.result = {{"weak", weak}, {"strong", strong}, {"q", q.str()},
              {"mode", rep.exact && !float_mode(c) ? "exact" : "float"}};
  o.property = c.strong ? strong : weak;
  o.summary = "weak=" + bool_word(weak) + " strong=" + bool_word(strong) + " over T_" + q.str();
  return o;
}

Outcome check_lorentzian(const RunConfig& c) {
  const auto in = io::parse_polynomial(io::read_json_file(c.poly));
  const bool exact = in.exact && !float_mode(c);
  const auto v = exact ? lorentz::is_lorentzian(*in.exact) : lorentz::is_lorentzian(in.floating);
  Outcome o;
  o.result = io::verdict_to_json(v);
  o.result["mode"] = exact ? "exact" : "float";
  o.property = v.lorentzian;
  o.summary = "lorentzian=" + bool_word(v.lorentzian) + (v.support_witness ? " (support is not M-convex)" : "");
  return o;
}

Outcome tutte(const RunConfig& c) {
  const auto J = load_matroid(c);
  const auto v = lorentz::v_space(J);
  const auto w = lorentz::w_space(J);
  Outcome o;
  o.result = {{"tutte_rank", lorentz::tutte_rank(v)},
              {"reduced_dim", lorentz::reduced_dim(v, w)},
              {"dim_v", v.dim()},
              {"dim_w", w.dim()},
              {"points", J.size()}};
  o.summary = "tutte_rank=" + std::to_string(lorentz::tutte_rank(v)) +
              " reduced_dim=" + std::to_string(lorentz::reduced_dim(v, w));
  return o;
}

lorentz::RayEnumeration load_or_enumerate_rays(const RunConfig& c, const lorentz::MConvexSet& J) {
  if (!c.rays.empty()) return lorentz::verify_fixture_rays(J, io::parse_rays(io::read_json_file(c.rays), J));
  return lorentz::enumerate_rays(J, ray_options(c));
}

Outcome dressian_rays(const RunConfig& c) {
  const auto J = load_matroid(c);
  const auto e = load_or_enumerate_rays(c, J);
  Outcome o;
  o.result = io::rays_to_json(e);
  o.complete = e.complete;
  o.property = e.complete;
  o.summary = std::to_string(e.rays.size()) + " rays, reduced_dim=" + std::to_string(e.reduced_dim) +
              (e.complete ? "" : " (fixture, not enumerated)");
  return o;
}

Outcome subdivide(const RunConfig& c) {
  const auto J = load_matroid(c);
  const auto nu = io::parse_function(io::read_json_file(c.nu), J);
  const auto s = lorentz::induced_subdivision(J, nu.values);
  Outcome o;
  o.result = io::subdivision_to_json(s, J);
  o.summary = std::to_string(s.cells.size()) + " maximal cells";
  return o;
}

Outcome faces(const RunConfig& c) {
  const auto J = load_matroid(c);
  const auto bp = lorentz::base_polytope(J);
  const auto fl = lorentz::face_lattice(bp, c.face_budget);
  Outcome o;
  o.result = {{"dim", bp.dim()},
              {"f_vector", fl.f_vector()},
              {"euler_sum", fl.euler_sum()},
              {"facets", bp.facets().size()},
              {"vertices", bp.vertices().size()}};
  if (c.list) {
    json list = json::array();
    for (const auto& f : fl.faces) list.push_back({{"dim", f.dim}, {"points", io::mask_to_json(f.mask, J.size())}});
    o.result["faces"] = list;
  }
  if (fl.euler_sum() != 1) throw lorentz::InternalError("face lattice violates the Euler-Poincare relation");
  o.summary = "dim=" + std::to_string(bp.dim()) + " faces=" + std::to_string(fl.faces.size());
  return o;
}

Outcome euler(const RunConfig& c) {
  const auto J = load_matroid(c);
  const auto e = load_or_enumerate_rays(c, J);
  const auto r = lorentz::euler_characteristic(J, e, euler_options(c));
  Outcome o;
  o.result = io::euler_report_to_json(r);
  o.complete = r.complete;
  o.summary = "chi=" + std::to_string(r.chi) + " rays=" + std::to_string(r.ray_count) +
              " initial_subsets=" + std::to_string(r.initial_subsets);
  return o;
}

Outcome stable_euler(const RunConfig& c) {
  const auto M = load_matroid(c);
  const auto r = lorentz::two_orbit_stable_euler(M, euler_options(c));
  Outcome o;
  o.result = io::stable_euler_to_json(r);
  o.summary = "stable chi=" + std::to_string(r.chi) + " (" + r.assumption + ")";
  return o;
}

Outcome grassmann(const RunConfig& c) {
  const auto m = io::parse_matrix(io::read_json_file(c.matrix));
  using F = io::MatrixInput::Field;
  const double t = c.t_given ? c.t : 2.0;
  const bool exact_field = m.field == F::kRational || m.field == F::kGaussian;
  Outcome o;
  if (exact_field && t == 2.0 && !float_mode(c)) {
    const auto f = m.field == F::kRational ? lorentz::grassmann_map(m.rational) : lorentz::grassmann_map(m.gaussian);
    const auto v = lorentz::is_lorentzian(f);
    o.result = {{"polynomial", io::polynomial_to_json(f)}, {"verdict", io::verdict_to_json(v)}, {"mode", "exact"}};
    if (f.d() == 2 && v.lorentzian) {
      const auto cl = lorentz::classify_deg2(f);
      o.result["classification"] = {{"position", lorentz::to_string(cl.position)},
                                    {"image", lorentz::to_string(cl.image)},
                                    {"hessian_rank", cl.hessian_rank},
                                    {"variables", cl.variables}};
    }
    o.property = v.lorentzian;
  } else {
    lorentz::FloatPolynomial f;
    switch (m.field) {
      case F::kGolden: f = lorentz::grassmann_map(m.golden, t); break;
      case F::kRational:
      case F::kReal: f = lorentz::grassmann_map(m.real, t); break;
      case F::kGaussian:
      case F::kComplex: f = lorentz::grassmann_map(m.complex, t); break;
    }
    const auto v = lorentz::is_lorentzian(f);
    o.result = {{"polynomial", io::polynomial_to_json(f)}, {"verdict", io::verdict_to_json(v)}, {"mode", "float"}};
    o.property = v.lorentzian;
  }
  o.result["field"] = io::to_string(m.field);
  o.result["t"] = t;
  o.summary = "field=" + io::to_string(m.field) + " lorentzian=" + bool_word(*o.property);
  return o;
}

// Largest t in [inside, outside] (or smallest, if outside < inside) at which
// the Betsy Ross polynomial is Lorentzian.
double betsy_boundary(double inside, double outside, double tol) {
  while (std::abs(outside - inside) > tol) {
    double mid = 0.5 * (inside + outside);
    (lorentz::is_lorentzian(lorentz::betsy_polynomial(mid)).lorentzian ? inside : outside) = mid;
  }
  return inside;
}

Outcome betsy(const RunConfig& c) {
  Outcome o;
  if (c.bisect) {
    const double tol = std::max(c.tol, 1e-12);
    const double upper = betsy_boundary(0.0, 4.0, tol);
    const double lower = betsy_boundary(0.0, -4.0, tol);
    o.result = {{"upper", upper}, {"lower", lower}, {"tolerance", tol}};
    o.summary = "Lorentzian interval approx [" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
    return o;
  }
  const double t = c.t_given ? c.t : 1.0;
  const auto f = lorentz::betsy_polynomial(t);
  const auto v = lorentz::is_lorentzian(f);
  o.result = {{"t", t}, {"polynomial", io::polynomial_to_json(f)}, {"verdict", io::verdict_to_json(v)}};
  o.property = v.lorentzian;
  o.summary = "t=" + std::to_string(t) + " lorentzian=" + bool_word(v.lorentzian);
  return o;
}

Outcome ball_coords(const RunConfig& c) {
  const auto in = io::parse_polynomial(io::read_json_file(c.poly));
  const double t = c.t_given ? c.t : 1.0;
  lorentz::GaugeOptions opt;
  opt.probe_bound = c.probe;
  opt.tolerance = c.tol;
  lorentz::GaugeModel model(lorentz::MConvexSet(in.floating.n(), in.floating.d(), in.floating.support()), t, opt);
  const auto b = lorentz::ball_coordinates(model, in.floating);
  Outcome o;
  o.result = {{"coordinates", b.coords},
              {"norm", b.norm},
              {"psi", b.psi},
              {"probe_limited", b.probe_limited},
              {"t", t},
              {"dim", model.dim()}};
  o.summary = "psi=" + std::to_string(b.psi) + (b.probe_limited ? " (probe-limited)" : "") +
              " norm=" + std::to_string(b.norm);
  return o;
}

Outcome simplify(const RunConfig& c) {
  const auto in = io::parse_polynomial(io::read_json_file(c.poly));
  if (!in.exact) throw lorentz::InputError("simplify needs exact coefficients");
  const auto s = lorentz::simplify_degree2(*in.exact);
  Outcome o;
  o.result = {{"g", io::polynomial_to_json(s.g)}, {"lambdas", io::rational_list_json(s.lambdas)},
              {"partition", s.partition}};
  if (lorentz::is_lorentzian(*in.exact).lorentzian) {
    const auto cl = lorentz::classify_deg2(*in.exact);
    o.result["classification"] = {{"position", lorentz::to_string(cl.position)},
                                  {"image", lorentz::to_string(cl.image)},
                                  {"hessian_rank", cl.hessian_rank},
                                  {"variables", cl.variables},
                                  {"uniform_type", cl.uniform_type}};
  }
  o.summary = "simplified to " + std::to_string(s.g.n()) + " variables";
  return o;
}

void emit(const RunConfig& c, const std::string& command, const Outcome& o) {
  json report{{"tool", {{"name", "lorentz"}, {"version", io::kToolVersion}}},
              {"command", command},
              {"complete", o.complete},
              {"result", o.result}};
  if (o.property) report["property"] = *o.property;
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw lorentz::InputError("cannot write '" + c.out + "'");
    f << text;
  }
  std::cerr << command << ": " << o.summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentzian polynomials, M-convex sets and their representations"};
  app.set_version_flag("--version", std::string("lorentz ") + io::kToolVersion);
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write the JSON report to this file");
    sub->add_flag("--assert", c.assert_property, "Exit 1 when the checked property is false");
    sub->add_option("--mode", c.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", c.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "Worker threads (0: all cores)");
    return sub;
  };
  auto matroid_opt = [&](CLI::App* sub) { sub->add_option("--matroid", c.matroid, "Point-set JSON")->required(); };
  auto caps = [&](CLI::App* sub) {
    sub->add_option("--max-dim", c.max_dim, "Largest reduced dimension handled by the ray enumerator")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cone-budget", c.cone_budget, "Cone budget of the ray enumerator")->check(CLI::PositiveNumber);
    sub->add_option("--face-budget", c.face_budget, "Face budget")->check(CLI::PositiveNumber);
  };
  auto t_opt = [&](CLI::App* sub, const char* help) {
    sub->add_option_function<double>("--t", [&](double v) {
      c.t = v;
      c.t_given = true;
    }, help);
  };

  std::map<std::string, std::function<Outcome(const RunConfig&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<Outcome(const RunConfig&)> fn) {
    handlers[name] = std::move(fn);
    return common(app.add_subcommand(name, help));
  };

  matroid_opt(add("check-mconvex", "Exchange-property check of a point set", check_mconvex));
  {
    auto* s = add("check-null", "Null-sum test in T_q", check_null);
    s->add_option("--values", c.values, "Comma-separated nonnegative values")->required();
    s->add_option("--q", c.q, "q: 0, a positive rational, or inf");
  }
  {
    auto* s = add("check-rep", "Weak and strong T_q representation test", check_rep);
    s->add_option("--rep", c.rep, "Representation JSON")->required();
    s->add_option("--q", c.q, "q: 0, a positive rational, or inf");
    s->add_flag("--strong", c.strong, "Assert the strong property instead of the weak one");
  }
  add("check-lorentzian", "Lorentzian membership", check_lorentzian)
      ->add_option("--poly", c.poly, "Polynomial JSON")
      ->required();
  matroid_opt(add("tutte-rank", "Tutte rank and reduced Dressian dimension", tutte));
  {
    auto* s = add("dressian-rays", "Rays of the reduced Dressian", dressian_rays);
    matroid_opt(s);
    caps(s);
    s->add_option("--rays", c.rays, "Verify fixture rays instead of enumerating");
  }
  {
    auto* s = add("subdivide", "Regular subdivision induced by an M-convex function", subdivide);
    matroid_opt(s);
    s->add_option("--nu", c.nu, "Function JSON: {\"values\": [...]}")->required();
  }
  {
    auto* s = add("faces", "Face lattice of the base polytope", faces);
    matroid_opt(s);
    caps(s);
    s->add_flag("--list", c.list, "Include every face as an index set");
  }
  {
    auto* s = add("euler", "Euler characteristic of the closed Lorentzian stratum", euler);
    matroid_opt(s);
    caps(s);
    s->add_option("--rays", c.rays, "Fixture rays, used instead of the enumerator");
  }
  {
    auto* s = add("stable-euler", "Two-orbit stable Euler characteristic", stable_euler);
    matroid_opt(s);
    caps(s);
  }
  {
    auto* s = add("grassmann", "Polynomial of maximal minors of a matrix", grassmann);
    s->add_option("--matrix", c.matrix, "Matrix JSON")->required();
    t_opt(s, "Exponent applied to |minor| (default 2)");
  }
  {
    auto* s = add("betsy", "Betsy Ross family", betsy);
    t_opt(s, "Parameter of the family (default 1)");
    s->add_flag("--bisect", c.bisect, "Locate both ends of the Lorentzian interval");
  }
  {
    auto* s = add("ball-coords", "Ball coordinates of a Lorentzian polynomial", ball_coords);
    s->add_option("--poly", c.poly, "Polynomial JSON")->required();
    t_opt(s, "Base point parameter (default 1)");
    s->add_option("--probe", c.probe, "Probe bound of the gauge")->check(CLI::PositiveNumber);
  }
  add("simplify", "Degree-2 simplification and classification", simplify)
      ->add_option("--poly", c.poly, "Polynomial JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Outcome o = handlers.at(command)(c);
    emit(c, command, o);
    if (c.assert_property && o.property && !*o.property) return kFalse;
    return kOk;
  } catch (const lorentz::InputError& e) {
    std::cerr << command << ": input error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << command << ": input error: " << e.what() << "\n";
    return kInput;
  } catch (const lorentz::ResourceError& e) {
    std::cerr << command << ": resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << command << ": internal error: " << e.what() << "\n";
    return kInternal;
  }
}
