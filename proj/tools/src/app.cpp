#include "hodograph/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodograph/cli/suites.hpp"
#include "hodograph/error.hpp"
#include "hodograph/mapper.hpp"
#include "hodograph/maxwell.hpp"
#include "hodograph/momentum.hpp"
#include "hodograph/potentials.hpp"
#include "hodograph/verifier.hpp"

namespace hodograph::cli {
namespace {

using json = nlohmann::ordered_json;
using std::numbers::pi;

constexpr double kDeg = pi / 180.0;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// output helpers

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  line += '\n';
  return line;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

json report_json(const VerificationReport& r) {
  return json{{"name", r.name},       {"max_abs", r.max_abs}, {"rms", r.rms},
              {"tol", r.tol},         {"pass", r.pass},       {"max_rel", r.max_rel()},
              {"grid", r.grid_spec},  {"skipped_points", r.skipped_points},
              {"total_points", r.total_points}};
}

// ---------------------------------------------------------------------------
// shared option groups

void add_model_options(CLI::App* sub, ModelParams& p) {
  sub->add_option("--n", p.n, "exponent n of the speed distribution")->capture_default_str();
  sub->add_option("--ell", p.ell, "exponent ell of the speed distribution")->capture_default_str();
  sub->add_option("--sigma-v", p.sigma_v, "characteristic speed")->capture_default_str();
  sub->add_option("--alpha", p.alpha, "constant alpha (nonzero)")->capture_default_str();
  sub->add_option("--beta", p.beta, "constant beta (nonzero)")->capture_default_str();
  sub->add_option("--c0", p.c0, "amplitude of the Hill substitution")->capture_default_str();
}

json model_echo(const ModelParams& p) {
  return json{{"n", p.n}, {"ell", p.ell}, {"sigma_v", p.sigma_v}, {"alpha", p.alpha}, {"beta", p.beta}, {"c0", p.c0}};
}

const std::map<std::string, RadialKind>& radial_kinds() {
  static const std::map<std::string, RadialKind> m = {
      {"kummer-plus", RadialKind::KummerPlus},   {"kummer-minus", RadialKind::KummerMinus},
      {"tricomi-plus", RadialKind::TricomiPlus}, {"tricomi-minus", RadialKind::TricomiMinus},
      {"omega", RadialKind::HyperbolicOmega},    {"constant", RadialKind::Constant}};
  return m;
}

std::vector<std::string> radial_kind_names() {
  std::vector<std::string> v;
  for (const auto& [k, _] : radial_kinds()) v.push_back(k);
  return v;
}

// Applies `key = value` entries of a config file as option defaults, so flags
// given on the command line still win.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config '" + path + "'");
  std::map<std::string, std::string> entries;
  try {
    entries = parse_config(f);
  } catch (const std::runtime_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  for (const auto& [key, value] : entries) {
    CLI::Option* opt = key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError(path + ": unknown key '" + key + "' for " + sub->get_name());
    try {
      opt->default_val(value);
    } catch (const CLI::Error& e) {
      throw UsageError(path + ": " + key + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
  ModelParams p;
  std::vector<double> rho = {0.5, 1.0, 2.0};
};

int cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  o.p.validate();
  std::string text = csv_row({"rho", "delta", "g", "region"});
  for (double r : o.rho) {
    const double rho = r * o.p.rho_T();
    text += csv_row({format_real(r), format_real(discriminant(o.p, rho)), format_real(coeff_g(o.p, rho)),
                     std::string(to_string(classify(o.p, rho)))});
  }
  out << text;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// characteristics

struct CharacteristicsOptions {
  ModelParams p;
  double rho_min = 0.05, rho_max = 3.0;
  int count = 60;
  double theta0 = 0.0;
  std::string output;
};

int cmd_characteristics(const CharacteristicsOptions& o, std::ostream& out) {
  o.p.validate();
  if (o.count < 2 || !(o.rho_min > 0.0) || !(o.rho_max > o.rho_min)) throw UsageError("need 0 < rho-min < rho-max and count >= 2");
  const double rt = o.p.rho_T(), t0 = o.theta0 * kDeg;
  std::string text = csv_row({"rho", "region", "theta_plus", "theta_minus", "slope", "saturated"});
  for (int i = 0; i < o.count; ++i) {
    const double r = o.rho_min + (o.rho_max - o.rho_min) * i / (o.count - 1);
    const double rho = r * rt;
    const RegionTag reg = classify(o.p, rho);
    // characteristics through (rho_T, theta0): chi+ = theta0 and chi- = -theta0
    double radial = 0.0;
    bool saturated = false;
    if (reg == RegionTag::Hyperbolic) {
      radial = characteristic_chi(o.p, CharacteristicKind::HyperbolicPlus, rho, 0.0).value;
    } else if (reg == RegionTag::Elliptic) {
      const auto v = characteristic_chi(o.p, CharacteristicKind::EllipticPlus, rho, 0.0);
      radial = v.value;
      saturated = v.saturated;
    }
    text += csv_row({format_real(r), std::string(to_string(reg)), format_real((t0 - radial) / kDeg),
                     format_real((t0 + radial) / kDeg), format_real(slope_rho_theta(o.p, rho) / rt),
                     saturated ? "1" : "0"});
  }
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(o.output + ".csv", text);
  json side{{"config", {{"model", model_echo(o.p)},
                        {"rho_min", o.rho_min},
                        {"rho_max", o.rho_max},
                        {"count", o.count},
                        {"theta0", o.theta0}}},
            {"units", {{"rho", "rho_T"}, {"theta", "deg"}, {"slope", "rho_T"}}}};
  write_file(o.output + ".json", side.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// laguerre-enum

struct LaguerreOptions {
  double n = 2.0;
  std::vector<double> lambda = {2.0, 3.0, 4.0};
  double ell_max = std::numeric_limits<double>::infinity();
  double ell_fixed = std::numeric_limits<double>::quiet_NaN();
  int k_max = 20;
};

int cmd_laguerre(const LaguerreOptions& o, std::ostream& out) {
  if (!(o.n > 0.0)) throw UsageError("n must be positive");
  const auto rows = std::isnan(o.ell_fixed) ? laguerre_enumerate(o.n, o.lambda, o.ell_max)
                                            : laguerre_enumerate_fixed_ell(o.n, o.ell_fixed, o.k_max);
  std::string text = csv_row({"lambda", "lambda_sq", "k", "n", "ell", "alpha_bar"});
  for (const auto& c : rows)
    text += csv_row({format_real(c.lambda), format_real(c.lambda * c.lambda), std::to_string(c.k), format_real(c.n),
                     format_real(c.ell), format_real(c.alpha_bar)});
  out << text;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve-momentum

struct SolveOptions {
  ModelParams p;
  double lambda = 2.0;
  std::string radial = "kummer-plus";
  double c1 = 0.0, c2 = 1.0;
  double rho_min = 0.2, rho_max = 2.0, theta_min = -60.0, theta_max = 60.0;
  std::size_t n_rho = 41, n_theta = 41;
  std::string output;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  o.p.validate();
  const RadialSolution sol = make_radial(o.p, radial_kinds().at(o.radial), o.lambda);
  const AngularFactor fac{o.lambda, o.c1, o.c2};
  fac.validate();
  if (o.n_rho < 2 || o.n_theta < 2) throw UsageError("grid must be at least 2 x 2");
  const double rt = o.p.rho_T();
  const SectorDomain d{o.rho_min * rt, o.rho_max * rt, o.theta_min * kDeg, o.theta_max * kDeg};
  d.validate(o.p, false);
  std::string text = csv_row({"rho", "theta", "u", "region"});
  for (std::size_t i = 0; i < o.n_rho; ++i) {
    const double rho = d.rho_min + (d.rho_max - d.rho_min) * static_cast<double>(i) / static_cast<double>(o.n_rho - 1);
    for (std::size_t j = 0; j < o.n_theta; ++j) {
      const double th = d.theta_min + (d.theta_max - d.theta_min) * static_cast<double>(j) / static_cast<double>(o.n_theta - 1);
      text += csv_row({format_real(rho / rt), format_real(th / kDeg), format_real(factorized_u(o.p, sol, fac, rho, th)),
                       std::string(to_string(classify(o.p, rho)))});
    }
  }
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(o.output + ".csv", text);
  const auto u = [&](double r, double t) { return factorized_u(o.p, sol, fac, r, t); };
  const auto rep = pde_residual_momentum(o.p, u, d, o.n_rho, o.n_theta, 1e-4, 1e-5);
  json side{{"config", {{"model", model_echo(o.p)},
                        {"lambda", o.lambda},
                        {"radial", o.radial},
                        {"c1", o.c1},
                        {"c2", o.c2},
                        {"rho_min", o.rho_min},
                        {"rho_max", o.rho_max},
                        {"theta_min", o.theta_min},
                        {"theta_max", o.theta_max},
                        {"n_rho", o.n_rho},
                        {"n_theta", o.n_theta}}},
            {"solution", {{"nu", sol.nu}, {"a", sol.a}, {"b", sol.b}, {"laguerre_k", sol.laguerre_k}}},
            {"units", {{"rho", "rho_T"}, {"theta", "deg"}}},
            {"residual", report_json(rep)}};
  write_file(o.output + ".json", side.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// map-fields

struct MapOptions {
  ModelParams p;
  double lambda = 2.0;
  std::string radial = "kummer-plus";
  double c1 = 0.0, c2 = 1.0;
  double rho_min = 1.8, rho_max = 2.4, theta_min = -12.0, theta_max = 12.0;
  std::size_t n_rho = 41, n_theta = 41;
  std::string norm = "auto";
  bool require_univalent = false;
  std::string output = "fields";
};

int cmd_map_fields(const MapOptions& o, std::ostream& out, std::ostream& err) {
  o.p.validate();
  const double rt = o.p.rho_T();
  MappedSolution s;
  s.radial_map = o.radial == "omega";
  if (!s.radial_map) {
    s.radial = make_radial(o.p, radial_kinds().at(o.radial), o.lambda);
    s.angular = AngularFactor{o.lambda, o.c1, o.c2};
    s.angular.validate();
  }
  const SectorDomain d{o.rho_min * rt, o.rho_max * rt, o.theta_min * kDeg, o.theta_max * kDeg};
  if (!s.radial_map && is_degenerate_lambda(o.lambda))
    raise(ErrorKind::DegenerateMap,
          "lambda = 1: the Jacobian vanishes identically, so the inverse Legendre transform is not possible");
  d.validate(o.p, s.radial_map);
  double norm = 0.0;
  if (o.norm == "auto") {
    SectorMeasure m{d.rho_min, d.rho_max, d.theta_min, d.theta_max,
                    [&](double rho, double th) { return area_element(o.p, s, rho, th); }};
    norm = normalization_N(o.p, m);
  } else {
    try {
      norm = std::stod(o.norm);
    } catch (const std::exception&) {
      throw UsageError("norm must be 'auto' or a number");
    }
  }
  const auto samples = sample_fields(o.p, s, d, o.n_rho, o.n_theta, norm);
  const bool univalent = is_univalent(samples);
  if (!univalent) {
    err << "warning: the Jacobian changes sign on the grid; the image overlaps itself (several leaves)\n";
    if (o.require_univalent) raise(ErrorKind::FoldDetected, "grid is not univalent and require_univalent is set");
  }
  std::string text = csv_row({"x", "y", "phi", "vx", "vy", "speed", "density", "q_pot", "u_pot", "jac_inv", "region"});
  double smin = std::numeric_limits<double>::infinity(), smax = -smin, dmin = smin, dmax = -smin, rmin = smin;
  std::size_t nodes = 0, degenerate = 0;
  for (const auto& f : samples) {
    text += csv_row({format_real(f.x), format_real(f.y), format_real(f.phi), format_real(f.vx), format_real(f.vy),
                     format_real(f.speed), format_real(f.density), format_real(f.q_pot), format_real(f.u_pot),
                     format_real(f.jac_inv), std::string(to_string(f.region))});
    smin = std::min(smin, f.speed);
    smax = std::max(smax, f.speed);
    dmin = std::min(dmin, f.density);
    dmax = std::max(dmax, f.density);
    rmin = std::min(rmin, std::hypot(f.x, f.y));
    nodes += f.flag == SampleFlag::Node;
    degenerate += f.flag == SampleFlag::Degenerate;
  }
  json side{{"config", {{"model", model_echo(o.p)},
                        {"lambda", o.lambda},
                        {"radial", o.radial},
                        {"c1", o.c1},
                        {"c2", o.c2},
                        {"rho_min", o.rho_min},
                        {"rho_max", o.rho_max},
                        {"theta_min", o.theta_min},
                        {"theta_max", o.theta_max},
                        {"n_rho", o.n_rho},
                        {"n_theta", o.n_theta},
                        {"norm", o.norm},
                        {"require_univalent", o.require_univalent},
                        {"output", o.output}}},
            {"units", {{"rho", "rho_T"}, {"theta", "deg"}, {"speed", "absolute"}}},
            {"summary", {{"points", samples.size()},
                         {"speed_min", smin},
                         {"speed_max", smax},
                         {"density_min", dmin},
                         {"density_max", dmax},
                         {"radius_min", rmin},
                         {"norm", norm},
                         {"univalent", univalent},
                         {"node_points", nodes},
                         {"degenerate_points", degenerate}}}};
  write_file(o.output + ".csv", text);
  write_file(o.output + ".json", side.dump(2) + "\n");
  out << "wrote " << o.output << ".csv and " << o.output << ".json (" << samples.size() << " points)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// psi-model

struct PsiOptions {
  ModelParams p = [] {
    ModelParams q;
    q.n = 4.0;
    q.ell = 6.0;
    return q;
  }();
  double sigma_r = std::numeric_limits<double>::quiet_NaN();
  std::string regime = "two-zeros";
  double r_min = 0.2, r_max = 5.0;
  int count = 97;
  std::string output;
};

int cmd_psi(const PsiOptions& o, std::ostream& out) {
  PsiModel pm;
  pm.params = o.p;
  const double rt = o.p.rho_T();
  if (!std::isnan(o.sigma_r)) pm.sigma_r = o.sigma_r;
  else if (o.regime == "two-zeros") pm.sigma_r = 0.5 * o.p.ell / rt;
  else if (o.regime == "critical") pm.sigma_r = o.p.ell / rt;
  else pm.sigma_r = 1.5 * o.p.ell / rt;
  pm.validate();
  if (o.count < 2 || !(o.r_min > 0.0) || !(o.r_max > o.r_min)) throw UsageError("need 0 < r-min < r-max and count >= 2");
  const auto zeros = psi_model_zeros(pm);
  json summary{{"config", {{"model", model_echo(o.p)},
                           {"sigma_r", pm.sigma_r},
                           {"r_min", o.r_min},
                           {"r_max", o.r_max},
                           {"count", o.count}}},
               {"units", {{"r", "sigma_r"}}},
               {"regime", std::string(to_string(pm.regime()))},
               {"hbar", pm.hbar()},
               {"mass", pm.mass()},
               {"c1", pm.c1()},
               {"norm", pm.norm()},
               {"zeros", json::array()}};
  for (double z : zeros) summary["zeros"].push_back(z / pm.sigma_r);
  if (o.p.ell > 4.0) summary["sigma_r_std"] = psi_model_sigma_r(pm) / pm.sigma_r;
  if (!o.output.empty()) {
    std::string text = csv_row({"r", "density", "q_pot", "u_pot", "v_phi"});
    for (int i = 0; i < o.count; ++i) {
      const double r = o.r_min + (o.r_max - o.r_min) * i / (o.count - 1);
      const PsiSample s = psi_model_eval(pm, r * pm.sigma_r, 0.0, 0.0);
      text += csv_row({format_real(r), format_real(s.density), format_real(s.q_pot), format_real(s.u_pot),
                       format_real(s.vy)});  // at phi = 0, e_phi = e_y
    }
    write_file(o.output + ".csv", text);
    write_file(o.output + ".json", summary.dump(2) + "\n");
  }
  out << summary.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite = "all";
  std::string output;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto reports = run_suite(o.suite);
  json j{{"suite", o.suite}, {"pass", all_pass(reports)}, {"reports", json::array()}};
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  const std::string text = j.dump(2) + "\n";
  if (!o.output.empty()) write_file(o.output, text);
  out << text;
  return all_pass(reports) ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions of the generalized-Maxwell phase equation: momentum-space solutions, "
               "inverse Legendre maps, potentials and verification."};
  app.name("hodograph");
  app.require_subcommand(1);
  std::string config;

  ClassifyOptions classify_o;
  auto* classify_c = app.add_subcommand("classify", "region of each momentum radius");
  add_model_options(classify_c, classify_o.p);
  classify_c->add_option("--rho", classify_o.rho, "radii in units of rho_T")->delimiter(',')->capture_default_str();

  CharacteristicsOptions char_o;
  auto* char_c = app.add_subcommand("characteristics", "characteristics through (rho_T, theta0) and their slope");
  add_model_options(char_c, char_o.p);
  char_c->add_option("--rho-min", char_o.rho_min, "in units of rho_T")->capture_default_str();
  char_c->add_option("--rho-max", char_o.rho_max, "in units of rho_T")->capture_default_str();
  char_c->add_option("--count", char_o.count)->capture_default_str();
  char_c->add_option("--theta0", char_o.theta0, "degrees")->capture_default_str();
  char_c->add_option("--output", char_o.output, "file prefix; stdout when empty");

  LaguerreOptions lag_o;
  auto* lag_c = app.add_subcommand("laguerre-enum", "parameters for which the radial factor is a Laguerre polynomial");
  lag_c->add_option("--n", lag_o.n)->capture_default_str();
  lag_c->add_option("--lambda", lag_o.lambda, "separation constants")->delimiter(',')->capture_default_str();
  lag_c->add_option("--ell-max", lag_o.ell_max)->capture_default_str();
  lag_c->add_option("--ell-fixed", lag_o.ell_fixed, "solve for lambda at this ell instead");
  lag_c->add_option("--k-max", lag_o.k_max, "largest degree in --ell-fixed mode")->capture_default_str();

  SolveOptions solve_o;
  auto* solve_c = app.add_subcommand("solve-momentum", "factorized momentum-space solution on a polar grid");
  add_model_options(solve_c, solve_o.p);
  solve_c->add_option("--lambda", solve_o.lambda)->capture_default_str();
  solve_c->add_option("--radial", solve_o.radial)->check(CLI::IsMember(radial_kind_names()))->capture_default_str();
  solve_c->add_option("--c1", solve_o.c1)->capture_default_str();
  solve_c->add_option("--c2", solve_o.c2)->capture_default_str();
  solve_c->add_option("--rho-min", solve_o.rho_min, "in units of rho_T")->capture_default_str();
  solve_c->add_option("--rho-max", solve_o.rho_max, "in units of rho_T")->capture_default_str();
  solve_c->add_option("--theta-min", solve_o.theta_min, "degrees")->capture_default_str();
  solve_c->add_option("--theta-max", solve_o.theta_max, "degrees")->capture_default_str();
  solve_c->add_option("--n-rho", solve_o.n_rho)->capture_default_str();
  solve_c->add_option("--n-theta", solve_o.n_theta)->capture_default_str();
  solve_c->add_option("--output", solve_o.output, "file prefix; stdout when empty");

  MapOptions map_o;
  auto* map_c = app.add_subcommand("map-fields", "map a momentum solution to coordinate space and sample its fields");
  add_model_options(map_c, map_o.p);
  map_c->add_option("--lambda", map_o.lambda)->capture_default_str();
  std::vector<std::string> map_kinds = radial_kind_names();
  map_kinds.erase(std::remove(map_kinds.begin(), map_kinds.end(), "constant"), map_kinds.end());
  map_c->add_option("--radial", map_o.radial, "radial factor; omega maps the angle-free hyperbolic solution")
      ->check(CLI::IsMember(map_kinds))
      ->capture_default_str();
  map_c->add_option("--c1", map_o.c1)->capture_default_str();
  map_c->add_option("--c2", map_o.c2)->capture_default_str();
  map_c->add_option("--rho-min", map_o.rho_min, "in units of rho_T")->capture_default_str();
  map_c->add_option("--rho-max", map_o.rho_max, "in units of rho_T")->capture_default_str();
  map_c->add_option("--theta-min", map_o.theta_min, "degrees")->capture_default_str();
  map_c->add_option("--theta-max", map_o.theta_max, "degrees")->capture_default_str();
  map_c->add_option("--n-rho", map_o.n_rho)->capture_default_str();
  map_c->add_option("--n-theta", map_o.n_theta)->capture_default_str();
  map_c->add_option("--norm", map_o.norm, "'auto' or a value")->capture_default_str();
  map_c->add_option("--require-univalent", map_o.require_univalent, "exit 3 when the grid folds")->capture_default_str();
  map_c->add_option("--output", map_o.output, "file prefix for .csv and .json")->capture_default_str();

  PsiOptions psi_o;
  auto* psi_c = app.add_subcommand("psi-model", "vortex solution of the Schrodinger equation");
  add_model_options(psi_c, psi_o.p);
  auto* sigma_opt = psi_c->add_option("--sigma-r", psi_o.sigma_r, "characteristic length");
  psi_c->add_option("--regime", psi_o.regime, "picks sigma_r when --sigma-r is absent")
      ->check(CLI::IsMember({"two-zeros", "critical", "one-zero"}))
      ->excludes(sigma_opt)
      ->capture_default_str();
  psi_c->add_option("--r-min", psi_o.r_min, "in units of sigma_r")->capture_default_str();
  psi_c->add_option("--r-max", psi_o.r_max, "in units of sigma_r")->capture_default_str();
  psi_c->add_option("--count", psi_o.count)->capture_default_str();
  psi_c->add_option("--output", psi_o.output, "file prefix for the profile .csv and .json");

  VerifyOptions ver_o;
  auto* ver_c = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver_c->add_option("suite", ver_o.suite)->check(CLI::IsMember(suites))->capture_default_str();
  ver_c->add_option("--output", ver_o.output, "also write the report here");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--config", config, "flat 'key = value' file; flags override it");

  try {
    // the config file supplies defaults, so it is read before the real parse
    std::string sub_name, cfg_path;
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (sub_name.empty() && app.get_subcommand_no_throw(a) != nullptr) sub_name = a;
      if (a == "--config" && i + 1 < argc) cfg_path = argv[i + 1];
      else if (a.rfind("--config=", 0) == 0) cfg_path = a.substr(9);
    }
    if (!cfg_path.empty() && !sub_name.empty()) apply_config(app.get_subcommand(sub_name), cfg_path);
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify_c) return cmd_classify(classify_o, out);
    if (*char_c) return cmd_characteristics(char_o, out);
    if (*lag_c) return cmd_laguerre(lag_o, out);
    if (*solve_c) return cmd_solve(solve_o, out);
    if (*map_c) return cmd_map_fields(map_o, out, err);
    if (*psi_c) return cmd_psi(psi_o, out);
    if (*ver_c) return cmd_verify(ver_o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::DegenerateMap: return kExitDegenerate;
      case ErrorKind::FoldDetected: return kExitFold;
      default: return kExitUsage;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hodograph::cli
