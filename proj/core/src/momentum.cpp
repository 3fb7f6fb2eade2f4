#include "hodograph/momentum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hodograph/error.hpp"

namespace hodograph {
namespace {

double rho_bar(const ModelParams& p, double rho) { return rho / p.rho_T(); }

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) raise(ErrorKind::Domain, "momentum radius must be positive, got " + std::to_string(rho));
}

// Power series whose derivative in x is x^(-ell-1) exp((ell+1)/n x^n):
//   sum_k (ell+1)^k x^(nk-ell) / (n^k (nk-ell) k!)
double exp_power_series(double n, double ell, double x, const specfun::SeriesControl& ctl) {
  ctl.validate();
  const double xn = std::pow(x, n);
  if (xn > kSeriesArgMax)
    raise(ErrorKind::Domain, "series branch limited to (rho/rho_T)^n <= 50, got " + std::to_string(xn));
  const double q = (ell + 1.0) * xn / n;
  const double lead = std::pow(x, -ell);
  double pw = 1.0;  // q^k / k!
  double sum = 0.0;
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) pw *= q / k;
    const double term = pw / (n * k - ell);
    sum += term;
    small_run = (std::fabs(term) < ctl.rel_tol * std::fabs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return lead * sum;
  }
  raise(ErrorKind::Divergence, "Hill series did not converge within max_terms");
}

// Hill substitution recurrence for ell = n k.
double J_recurrence(double n, int k, double x) {
  auto beta = [n](int j) { return j + 1.0 / n; };
  if (k == 0) return specfun::expint_ei(beta(0) * std::pow(x, n)) / n;
  const double bk = beta(k), bk1 = beta(k - 1);
  const double coeff = std::pow(bk, k) / (k * std::pow(bk1, k - 1));
  const double xs = std::pow(bk / bk1, 1.0 / n) * x;
  return coeff * J_recurrence(n, k - 1, xs) - std::exp(bk * std::pow(x, n)) / (k * n * std::pow(x, k * n));
}

// Hyperbolic-solution recurrence for ell = n k.
double I_recurrence(double n, int k, double x) {
  auto beta = [n](int j) { return j + 1.0 / n; };
  if (k == 0) return specfun::expint_ei(beta(0) * x);
  const double bk = beta(k), bk1 = beta(k - 1);
  const double coeff = std::pow(bk, k) / (k * std::pow(bk1, k - 1));
  return coeff * I_recurrence(n, k - 1, bk * x / bk1) - std::exp(bk * x) / (k * std::pow(x, k));
}

struct KummerEval {
  double T, dT, d2T;  // T(tau) and its tau-derivatives
};

KummerEval kummer_eval(const RadialSolution& sol, double tau, const specfun::SeriesControl& ctl) {
  switch (sol.kind) {
    case RadialKind::KummerPlus:
    case RadialKind::KummerMinus:
      if (sol.laguerre_k >= 0) {
        const int k = sol.laguerre_k;
        const double ab = sol.b - 1.0;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        // d/dz L_k^(a)(z) = -L_{k-1}^(a+1)(z)
        const double d1 = k >= 1 ? -specfun::laguerre(k - 1, ab + 1.0, tau) : 0.0;
        const double d2 = k >= 2 ? specfun::laguerre(k - 2, ab + 2.0, tau) : 0.0;
        return {sign * specfun::laguerre(k, ab, tau), sign * d1, sign * d2};
      }
      return {specfun::kummer_m(sol.a, sol.b, tau, ctl),
              specfun::kummer_m_derivative(sol.a, sol.b, tau, 1, ctl),
              specfun::kummer_m_derivative(sol.a, sol.b, tau, 2, ctl)};
    case RadialKind::TricomiPlus:
    case RadialKind::TricomiMinus:
      return {specfun::tricomi_psi(sol.a, sol.b, tau, ctl),
              specfun::tricomi_psi_derivative(sol.a, sol.b, tau, 1, ctl),
              specfun::tricomi_psi_derivative(sol.a, sol.b, tau, 2, ctl)};
    default:
      raise(ErrorKind::Parameter, "radial solution is not of Kummer type");
  }
}

bool is_kummer_type(RadialKind kind) {
  return kind == RadialKind::KummerPlus || kind == RadialKind::KummerMinus ||
         kind == RadialKind::TricomiPlus || kind == RadialKind::TricomiMinus;
}

}  // namespace

std::string_view to_string(CharacteristicKind kind) noexcept {
  switch (kind) {
    case CharacteristicKind::HyperbolicPlus: return "hyperbolic+";
    case CharacteristicKind::HyperbolicMinus: return "hyperbolic-";
    case CharacteristicKind::EllipticPlus: return "elliptic+";
    case CharacteristicKind::EllipticMinus: return "elliptic-";
  }
  return "unknown";
}

std::string_view to_string(RadialKind kind) noexcept {
  switch (kind) {
    case RadialKind::KummerPlus: return "kummer+";
    case RadialKind::KummerMinus: return "kummer-";
    case RadialKind::TricomiPlus: return "tricomi+";
    case RadialKind::TricomiMinus: return "tricomi-";
    case RadialKind::HyperbolicOmega: return "omega";
    case RadialKind::Constant: return "constant";
  }
  return "unknown";
}

CharacteristicValue characteristic_chi(const ModelParams& p, CharacteristicKind kind, double rho,
                                       double theta) {
  require_positive_rho(rho);
  const double pref = 2.0 / p.n * std::sqrt(p.ell + 1.0);
  const bool plus = kind == CharacteristicKind::HyperbolicPlus || kind == CharacteristicKind::EllipticPlus;
  const double angle = plus ? theta : -theta;
  const double rt = p.rho_T();
  if (kind == CharacteristicKind::HyperbolicPlus || kind == CharacteristicKind::HyperbolicMinus) {
    if (rho < rt) raise(ErrorKind::Region, "hyperbolic characteristic needs rho >= rho_T");
    const double t = std::sqrt(std::pow(rho / rt, p.n) - 1.0);
    return {pref * (t - std::atan(t)) + angle, false};
  }
  if (rho > rt) raise(ErrorKind::Region, "elliptic characteristic needs rho <= rho_T");
  const bool saturated = rho < kRhoFloor * rt;
  const double r = saturated ? kRhoFloor * rt : rho;
  const double t = std::sqrt(1.0 - std::pow(r / rt, p.n));
  return {pref * (t - std::atanh(t)) + angle, saturated};
}

double slope_rho_theta(const ModelParams& p, double rho) {
  require_positive_rho(rho);
  const double delta = discriminant(p, rho);
  if (delta == 0.0 || classify(p, rho) == RegionTag::Parabolic)
    return std::numeric_limits<double>::infinity();
  return rho / std::sqrt(std::fabs(delta));
}

double canonical_kappa(const ModelParams& p, double rho, Branch branch) {
  require_positive_rho(rho);
  const double d = discriminant(p, rho);
  const double base = p.n * (p.ell + 1.0) + (p.n - 2.0) * d;
  if (branch == Branch::Hyperbolic) {
    if (d < 0.0) raise(ErrorKind::Region, "hyperbolic kappa requested in the elliptic region");
    return (base - 2.0 * d * d) / (8.0 * std::pow(d, 1.5));
  }
  if (d > 0.0) raise(ErrorKind::Region, "elliptic kappa requested in the hyperbolic region");
  return (base + 2.0 * d * d) / (4.0 * std::pow(-d, 1.5));
}

std::optional<int> integer_branch(const ModelParams& p) {
  const double q = p.ell / p.n;
  const double k = std::round(q);
  if (k >= 0.0 && std::fabs(q - k) <= kIntegerBranchTol) return static_cast<int>(k);
  return std::nullopt;
}

double hill_substitution_zeta(const ModelParams& p, double rho, const specfun::SeriesControl& ctl) {
  require_positive_rho(rho);
  const double x = rho_bar(p, rho);
  const double scale = p.c0 * p.rho_T();
  if (auto k = integer_branch(p)) return scale * J_recurrence(p.n, *k, x);
  return scale * exp_power_series(p.n, p.ell, x, ctl);
}

double hill_zeta_bar(const ModelParams& p, double rho) {
  require_positive_rho(rho);
  const double x = rho_bar(p, rho);
  return p.c0 * std::exp((p.ell + 1.0) * (std::pow(x, p.n) / p.n - std::log(x)));
}

double hill_coefficient_G(const ModelParams& p, double lambda, double rho) {
  require_positive_rho(rho);
  const double x = rho_bar(p, rho);
  const double xn = std::pow(x, p.n);
  const double theta = lambda * std::sqrt(p.ell + 1.0) / (p.c0 * p.rho_T()) * std::pow(x, p.ell) *
                       std::sqrt(std::fabs(xn - 1.0)) * std::exp(-(p.ell + 1.0) / p.n * xn);
  return xn >= 1.0 ? theta * theta : -theta * theta;
}

double hyperbolic_omega(const ModelParams& p, double rho, const specfun::SeriesControl& ctl) {
  if (!(rho > p.rho_T())) raise(ErrorKind::Region, "hyperbolic solution needs rho > rho_T");
  const double x = rho_bar(p, rho);
  const double pref = p.c1 * std::sqrt(p.ell + 1.0) / p.n * std::exp(-(p.ell + 1.0) / p.n);
  double body;
  if (auto k = integer_branch(p)) {
    body = I_recurrence(p.n, *k, std::pow(x, p.n));
  } else {
    body = p.n * exp_power_series(p.n, p.ell, x, ctl);
  }
  return pref * (body + p.c2);
}

double hyperbolic_omega_derivative(const ModelParams& p, double rho) {
  if (!(rho > p.rho_T())) raise(ErrorKind::Region, "hyperbolic solution needs rho > rho_T");
  const double x = rho_bar(p, rho);
  return p.c1 * std::sqrt(p.ell + 1.0) / p.rho_T() *
         std::exp((p.ell + 1.0) / p.n * (std::pow(x, p.n) - 1.0) - (p.ell + 1.0) * std::log(x));
}

double mu_plus(const ModelParams& p, double rho) {
  if (rho < p.rho_T()) raise(ErrorKind::Region, "mu_plus needs rho >= rho_T");
  const double s = std::sqrt(std::pow(rho_bar(p, rho), p.n) - 1.0);
  return 2.0 * std::sqrt(p.ell + 1.0) / p.n * (s - std::atan(s));
}

std::pair<double, double> nu_roots(double ell, double lambda) {
  const double disc = std::sqrt(0.25 * ell * ell + lambda * lambda * (ell + 1.0));
  return {-0.5 * ell - disc, -0.5 * ell + disc};
}

RadialSolution make_radial(const ModelParams& p, RadialKind kind, double lambda) {
  p.validate();
  if (!(lambda >= 0.0)) raise(ErrorKind::Parameter, "lambda must be non-negative");
  RadialSolution sol;
  sol.kind = kind;
  sol.lambda = lambda;
  if (kind == RadialKind::HyperbolicOmega || kind == RadialKind::Constant) {
    if (lambda != 0.0) raise(ErrorKind::Parameter, std::string(to_string(kind)) + " radial solution requires lambda = 0");
    return sol;
  }
  const auto [nu_minus, nu_plus] = nu_roots(p.ell, lambda);
  const bool plus = kind == RadialKind::KummerPlus || kind == RadialKind::TricomiPlus;
  sol.nu = plus ? nu_plus : nu_minus;
  sol.a = (sol.nu - lambda * lambda) / p.n;
  int k = 0;
  if (specfun::near_nonpositive_integer(sol.a, 1e-12, &k)) {
    sol.a = -static_cast<double>(k);
    sol.nu = lambda * lambda - p.n * k;
    if (kind == RadialKind::KummerPlus) sol.laguerre_k = k;
  }
  sol.b = (2.0 * sol.nu + p.n + p.ell) / p.n;
  return sol;
}

double radial_kummer(const ModelParams& p, const RadialSolution& sol, double rho,
                     const specfun::SeriesControl& ctl) {
  if (!is_kummer_type(sol.kind)) raise(ErrorKind::Parameter, "radial_kummer needs a Kummer or Tricomi kind");
  require_positive_rho(rho);
  const double x = rho_bar(p, rho);
  const double tau = (p.ell + 1.0) / p.n * std::pow(x, p.n);
  return std::pow(x, sol.nu) * kummer_eval(sol, tau, ctl).T;
}

RadialDerivs radial_derivs(const ModelParams& p, const RadialSolution& sol, double rho,
                           const specfun::SeriesControl& ctl) {
  require_positive_rho(rho);
  switch (sol.kind) {
    case RadialKind::Constant:
      return {sol.constant, 0.0, 0.0};
    case RadialKind::HyperbolicOmega: {
      const double d1 = hyperbolic_omega_derivative(p, rho);
      return {hyperbolic_omega(p, rho, ctl), d1, -coeff_g(p, rho) * d1 / rho};
    }
    default:
      break;
  }
  const double rt = p.rho_T();
  const double x = rho / rt;
  const double n = p.n;
  const double nu = sol.nu;
  const double tau = (p.ell + 1.0) / n * std::pow(x, n);
  const KummerEval t = kummer_eval(sol, tau, ctl);
  const double xnu = std::pow(x, nu);
  const double first = nu * t.T + n * tau * t.dT;  // x R_x / x^nu
  const double second = (nu - 1.0) * first + n * tau * ((nu + n) * t.dT + n * tau * t.d2T);
  return {xnu * t.T, xnu / x * first / rt, xnu / (x * x) * second / (rt * rt)};
}

void AngularFactor::validate() const {
  if (!(lambda >= 0.0)) raise(ErrorKind::Parameter, "lambda must be non-negative");
  if (c1 == 0.0 && c2 == 0.0) raise(ErrorKind::Parameter, "angular constants c1, c2 are both zero");
}

double angular_theta(const AngularFactor& fac, double theta) {
  return angular_theta_derivative(fac, theta, 0);
}

double angular_theta_derivative(const AngularFactor& fac, double theta, int order) {
  const double l = fac.lambda;
  if (l == 0.0) {
    switch (order) {
      case 0: return fac.c1 * theta + fac.c2;
      case 1: return fac.c1;
      default: return 0.0;
    }
  }
  const double s = std::sin(l * theta), c = std::cos(l * theta);
  switch (order) {
    case 0: return fac.c1 * s + fac.c2 * c;
    case 1: return l * (fac.c1 * c - fac.c2 * s);
    case 2: return -l * l * (fac.c1 * s + fac.c2 * c);
    default: raise(ErrorKind::Parameter, "angular derivative order must be 0, 1 or 2");
  }
}

double angular_logderiv(const AngularFactor& fac, double theta) {
  const double th = angular_theta(fac, theta);
  const double scale = std::hypot(fac.c1, fac.c2);
  if (std::fabs(th) <= 1e-14 * scale)
    raise(ErrorKind::Node, "angular factor vanishes at theta = " + std::to_string(theta));
  return angular_theta_derivative(fac, theta, 1) / th;
}

double angular_extremum(const AngularFactor& fac, int j) {
  if (fac.lambda == 0.0) raise(ErrorKind::Parameter, "linear angular factor has no extremum");
  const double theta0 = std::atan2(fac.c2, fac.c1);
  return (0.5 * std::numbers::pi + std::numbers::pi * j - theta0) / fac.lambda;
}

double factorized_u(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                    double rho, double theta, const specfun::SeriesControl& ctl) {
  if (sol.lambda != fac.lambda) raise(ErrorKind::Parameter, "radial and angular lambda differ");
  return radial_derivs(p, sol, rho, ctl).R * angular_theta(fac, theta);
}

namespace {

std::optional<LaguerreCase> laguerre_case(double n, double lambda, int k) {
  const double s = lambda * lambda;
  const double kn = k * n;
  if (kn > lambda * std::sqrt(std::max(0.0, s - 1.0)) * (1.0 + 1e-12)) return std::nullopt;
  const double ell = ((s - kn) * (s - kn) - s) / kn;
  if (!(ell > -1.0)) return std::nullopt;
  const double alpha_bar = (2.0 * (s - kn) + ell) / n;
  if (std::fabs(alpha_bar) <= 1e-12) return std::nullopt;
  return LaguerreCase{lambda, k, n, ell, alpha_bar};
}

}  // namespace

std::vector<LaguerreCase> laguerre_enumerate(double n, const std::vector<double>& lambdas,
                                             double ell_max) {
  if (!(n > 0.0)) raise(ErrorKind::Parameter, "n must be positive");
  std::vector<LaguerreCase> out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double lambda : lambdas) {
    if (!(lambda >= 1.0)) continue;
    if (std::fabs(lambda - 1.0) <= 1e-12) {
      out.push_back({1.0, 0, n, nan, nan});
      continue;
    }
    const int k_max = static_cast<int>(std::floor(lambda * std::sqrt(lambda * lambda - 1.0) / n * (1.0 + 1e-12)));
    for (int k = 1; k <= k_max; ++k) {
      auto c = laguerre_case(n, lambda, k);
      if (c && c->ell <= ell_max) out.push_back(*c);
    }
  }
  return out;
}

std::vector<LaguerreCase> laguerre_enumerate_fixed_ell(double n, double ell, int k_max) {
  if (!(n > 0.0)) raise(ErrorKind::Parameter, "n must be positive");
  if (!(ell > -1.0)) raise(ErrorKind::Parameter, "ell must exceed -1");
  std::vector<LaguerreCase> out;
  out.push_back({1.0, 0, n, ell, (2.0 + ell) / n});
  for (int k = 1; k <= k_max; ++k) {
    const double kn = k * n;
    const double disc = 4.0 * kn + 1.0 + 4.0 * kn * ell;
    if (disc < 0.0) continue;
    const double root = std::sqrt(disc);
    for (double s : {0.5 * ((2.0 * kn + 1.0) - root), 0.5 * ((2.0 * kn + 1.0) + root)}) {
      if (!(s >= 1.0)) continue;
      auto c = laguerre_case(n, std::sqrt(s), k);
      if (c) {
        c->ell = ell;  // exact input rather than the round-tripped value
        c->alpha_bar = (2.0 * (s - kn) + ell) / n;
        out.push_back(*c);
      }
    }
  }
  return out;
}

}  // namespace hodograph
