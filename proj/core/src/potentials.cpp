#include "hodograph/potentials.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hodograph/error.hpp"
#include "hodograph/mapper.hpp"
#include "hodograph/specfun.hpp"

namespace hodograph {
namespace {

using std::numbers::pi;

// Bracket shared by the B term of the closed form.
double b_bracket(const ModelParams& p, double z3) {
  const double w = z3 - 1.0;
  return 0.5 * w * w + w * (p.n - 1.0) - p.n * p.ell;
}

}  // namespace

QPotentialArgs q_args(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                      double rho, double theta) {
  const double sr = script_R(p, sol, rho);
  const double l2 = sol.lambda * sol.lambda;
  return {sr - 1.0, sr - l2, coeff_g(p, rho), angular_logderiv(fac, theta)};
}

double quantum_potential_z(const ModelParams& p, double lambda, const QPotentialArgs& z, double u,
                           double rho) {
  if (u == 0.0) raise(ErrorKind::Node, "quantum potential undefined where u = 0");
  const double l2 = lambda * lambda;
  const double z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const double z4s = z.z4 * z.z4;
  const double d = z1 * z1 * z4s + z3 * z2 * z2;
  const double a0 = z2 * z2 * z2 * (l2 * z1 * (1.0 - z3) * z3 + z2 * ((1.0 - p.n) * z3 + p.n * (p.ell + 1.0)));
  const double a1 = z1 * z2 *
                    (z1 * z2 * (2.0 * z3 * z3 + (3.0 + p.n) * (1.0 - z3) + p.n * p.ell) +
                     3.0 * (1.0 - z3) * (z2 * z2 * z3 - l2 * z1 * z1));
  const double a2 = z1 * z1 * z1 * (z1 - z2 * (1.0 - z3));
  const double term_a = (z3 - 1.0) / (d * d * d) * (a0 + a1 * z4s + a2 * z4s * z4s);
  const double term_b = (z1 * z1 * z4s + z2 * z2) / (d * d) * b_bracket(p, z3);
  return p.alpha * rho * rho / (2.0 * p.beta * u * u) * (term_a + term_b);
}

double quantum_potential(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                         double rho, double theta) {
  if (is_degenerate_lambda(sol.lambda))
    raise(ErrorKind::DegenerateMap, "lambda = 1: no coordinate-space image, quantum potential undefined");
  const double u = factorized_u(p, sol, fac, rho, theta);
  const double scale = std::hypot(fac.c1, fac.c2);
  if (std::fabs(angular_theta(fac, theta)) <= 1e-14 * scale)
    raise(ErrorKind::Node, "quantum potential undefined on a nodal line of the angular factor");
  if (u == 0.0) raise(ErrorKind::Node, "quantum potential undefined where u = 0");
  return quantum_potential_z(p, sol.lambda, q_args(p, sol, fac, rho, theta), u, rho);
}

double quantum_potential_radial(const ModelParams& p, double rho) {
  if (!(rho > p.rho_T())) raise(ErrorKind::Region, "radial map needs rho > rho_T");
  // Closed form at Upsilon = 0, where u^2 scriptR^2 = rho^2 zeta_bar^2 removes
  // the integration constant of Omega_bar.
  const double g = coeff_g(p, rho);
  const double zb = hill_zeta_bar(p, rho);
  const double a = (g - 1.0) * ((1.0 - p.n) * g + p.n * (p.ell + 1.0)) / (g * g * g);
  const double b = b_bracket(p, g) / (g * g);
  return p.alpha / (2.0 * p.beta * zb * zb) * (a + b);
}

double classical_potential_from_q(const ModelParams& p, double rho, double q, double energy) {
  return p.alpha * rho * rho / (4.0 * p.beta) - q + energy;
}

double classical_potential(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                           double rho, double theta, double energy) {
  return classical_potential_from_q(p, rho, quantum_potential(p, sol, fac, rho, theta), energy);
}

std::string_view to_string(PsiRegime regime) noexcept {
  switch (regime) {
    case PsiRegime::TwoZeros: return "two-zeros";
    case PsiRegime::Critical: return "critical";
    case PsiRegime::OneZero: return "one-zero";
  }
  return "unknown";
}

void PsiModel::validate() const {
  params.validate();
  if (!(params.alpha < 0.0)) raise(ErrorKind::Parameter, "vortex model needs alpha < 0 (alpha = -hbar/2m)");
  if (!(sigma_r > 0.0)) raise(ErrorKind::Parameter, "sigma_r must be positive");
  if (!(params.ell > 2.0))
    raise(ErrorKind::Divergence, "normalization diverges: the vortex model needs ell > 2, got ell = " +
                                     std::to_string(params.ell));
}

double PsiModel::hbar() const { return 1.0 / params.beta; }

double PsiModel::mass() const { return hbar() / (2.0 * std::fabs(params.alpha)); }

double PsiModel::c1() const { return -params.rho_T() * sigma_r; }

double PsiModel::norm() const {
  validate();
  const double n = params.n, l = params.ell;
  return 1.0 / (2.0 * pi * sigma_r * sigma_r / n * std::pow((l + 1.0) / n, 2.0 / n) *
                specfun::gamma((l - 2.0) / n));
}

PsiRegime PsiModel::regime() const {
  const double rs = params.rho_T() * sigma_r;
  const double l = params.ell;
  const double k = rs * rs - l * l;
  if (std::fabs(k) <= 1e-12 * l * l) return PsiRegime::Critical;
  return k < 0.0 ? PsiRegime::TwoZeros : PsiRegime::OneZero;
}

double psi_amplitude(const PsiModel& pm, double r, int order) {
  if (!(r > 0.0)) return 0.0;  // limit at the origin
  const double n = pm.params.n, l = pm.params.ell;
  const double c = (l + 1.0) / n;
  const double x = std::pow(pm.sigma_r / r, n);
  const double amp = std::sqrt(pm.norm()) *
                     std::exp(0.5 * (l / n * std::log(c) + l * std::log(pm.sigma_r / r) - c * x));
  const double lg = (-l + (l + 1.0) * x) / (2.0 * r);            // (ln A)'
  const double lg1 = (l - (l + 1.0) * (n + 1.0) * x) / (2.0 * r * r);  // (ln A)''
  switch (order) {
    case 0: return amp;
    case 1: return amp * lg;
    case 2: return amp * (lg1 + lg * lg);
    default: raise(ErrorKind::Parameter, "amplitude derivative order must be 0, 1 or 2");
  }
}

PsiSample psi_model_eval(const PsiModel& pm, double r, double phi, double t) {
  pm.validate();
  const double n = pm.params.n, l = pm.params.ell, s = pm.sigma_r;
  const double rs = pm.params.rho_T() * s;
  const double pref = pm.hbar() * pm.hbar() / (8.0 * pm.mass());
  PsiSample out{};
  out.phase = 0.5 * rs * phi - pm.energy / pm.hbar() * t;
  if (!(r > 0.0)) return out;
  const double a = psi_amplitude(pm, r, 0);
  out.density = a * a;
  const double x = std::pow(s / r, n);
  const double mid = 2.0 * (l + 1.0) * (l + n) * x;
  const double last = (l + 1.0) * (l + 1.0) * x * x;
  out.q_pot = -pref / (r * r) * (l * l - mid + last);
  out.u_pot = -pref / (r * r) * (rs * rs - l * l + mid - last) + pm.energy;
  const double v = s * pm.params.sigma_v / r;
  out.vx = -v * std::sin(phi);
  out.vy = v * std::cos(phi);
  return out;
}

std::vector<double> psi_model_zeros(const PsiModel& pm) {
  pm.validate();
  const double n = pm.params.n, l = pm.params.ell, s = pm.sigma_r;
  const double rs = pm.params.rho_T() * s;
  const double k = rs * rs - l * l;
  const double d = n * n + 2.0 * n * l + rs * rs;
  const double root = std::sqrt(d);
  // U = 0 <=> y^2 - 2(l+n) y - K = 0 with y = (l+1)(s/r)^n.
  auto radius = [&](double y) { return s * std::pow((l + 1.0) / y, 1.0 / n); };
  switch (pm.regime()) {
    case PsiRegime::TwoZeros:
      return {radius(l + n + root), radius(l + n - root)};
    case PsiRegime::Critical:
      return {s * std::pow((l + 1.0) / (2.0 * (l + n)), 1.0 / n)};
    case PsiRegime::OneZero:
      return {s * std::pow(l + 1.0, 1.0 / n) * std::pow((root - l - n) / k, 1.0 / n)};
  }
  return {};
}

double radial_moments(const PsiModel& pm, double s) {
  pm.validate();
  const double n = pm.params.n, l = pm.params.ell, sr = pm.sigma_r;
  if (!(l > s + 2.0))
    raise(ErrorKind::Divergence, "moment of order " + std::to_string(s) + " diverges for ell <= s + 2");
  return 2.0 * pi * std::pow(sr, s + 2.0) * pm.norm() * std::pow((l + 1.0) / n, (s + 2.0) / n) / n *
         specfun::gamma((l - s - 2.0) / n);
}

double psi_model_sigma_r(const PsiModel& pm) {
  pm.validate();
  const double n = pm.params.n, l = pm.params.ell;
  if (!(l > 4.0)) raise(ErrorKind::Divergence, "second moment diverges for ell <= 4");
  const double g2 = specfun::gamma((l - 2.0) / n);
  const double g3 = specfun::gamma((l - 3.0) / n);
  const double g4 = specfun::gamma((l - 4.0) / n);
  return pm.sigma_r * std::pow((l + 1.0) / n, 1.0 / n) / g2 * std::sqrt(g4 * g2 - g3 * g3);
}

namespace {

std::complex<double> psi_value(const PsiModel& pm, double r, double phi, double t) {
  const double phase = 0.5 * pm.params.rho_T() * pm.sigma_r * phi - pm.energy / pm.hbar() * t;
  return psi_amplitude(pm, r, 0) * std::polar(1.0, phase);
}

}  // namespace

double schrodinger_residual_analytic(const PsiModel& pm, double r, double phi, double t) {
  pm.validate();
  const double hb = pm.hbar();
  const double kin = hb * hb / (2.0 * pm.mass());
  const double k = 0.5 * pm.params.rho_T() * pm.sigma_r;  // angular quantum of the phase
  const double a0 = psi_amplitude(pm, r, 0);
  const double a1 = psi_amplitude(pm, r, 1);
  const double a2 = psi_amplitude(pm, r, 2);
  const std::complex<double> e = std::polar(1.0, k * phi - pm.energy / hb * t);
  const std::complex<double> psi = a0 * e;
  const std::complex<double> lhs = std::complex<double>(0.0, hb) * (std::complex<double>(0.0, -pm.energy / hb) * psi);
  const std::complex<double> lap = (a2 + a1 / r - k * k * a0 / (r * r)) * e;
  const double u = psi_model_eval(pm, r, phi, t).u_pot;
  const std::complex<double> rhs = -kin * lap + u * psi;
  const double scale = std::abs(lhs) + kin * (std::fabs(a2) + std::fabs(a1) / r + k * k * a0 / (r * r)) +
                       std::fabs(u) * a0;
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double schrodinger_residual_fd(const PsiModel& pm, double r, double phi, double t, double h) {
  pm.validate();
  const double hb = pm.hbar();
  const double kin = hb * hb / (2.0 * pm.mass());
  const double x0 = r * std::cos(phi), y0 = r * std::sin(phi);
  // Unwrap the angle around the centre so the stencil never straddles the cut.
  auto at = [&](double x, double y, double tt) {
    const double ang = phi + std::remainder(std::atan2(y, x) - phi, 2.0 * pi);
    return psi_value(pm, std::hypot(x, y), ang, tt);
  };
  const std::complex<double> c = at(x0, y0, t);
  const std::complex<double> lap =
      (at(x0 + h, y0, t) + at(x0 - h, y0, t) + at(x0, y0 + h, t) + at(x0, y0 - h, t) - 4.0 * c) / (h * h);
  const double ht = h * std::max(1.0, std::fabs(t));
  const std::complex<double> dt = (at(x0, y0, t + ht) - at(x0, y0, t - ht)) / (2.0 * ht);
  const double u = psi_model_eval(pm, r, phi, t).u_pot;
  const std::complex<double> resid = std::complex<double>(0.0, hb) * dt + kin * lap - u * c;
  const double scale = hb * std::abs(dt) + kin * std::abs(lap) + std::fabs(u) * std::abs(c);
  return scale == 0.0 ? 0.0 : std::abs(resid) / scale;
}

Circulation circulation(const PsiModel& pm, const std::vector<CoordPoint>& contour) {
  pm.validate();
  if (contour.size() < 3) raise(ErrorKind::Parameter, "contour needs at least three vertices");
  static constexpr std::array<double, 5> nodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                  0.5384693101056831, 0.9061798459386640};
  static constexpr std::array<double, 5> weights = {0.2369268850561891, 0.4786286704993665,
                                                    0.5688888888888889, 0.4786286704993665,
                                                    0.2369268850561891};
  const double strength = pm.mass() * pm.sigma_r * pm.params.sigma_v;  // m <v> = strength e_phi / r
  double total = 0.0;
  double turn = 0.0;
  for (std::size_t i = 0; i < contour.size(); ++i) {
    const CoordPoint a = contour[i];
    const CoordPoint b = contour[(i + 1) % contour.size()];
    const double dx = b.x - a.x, dy = b.y - a.y;
    double seg = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      const double s = 0.5 * (nodes[q] + 1.0);
      const double x = a.x + s * dx, y = a.y + s * dy;
      const double r2 = x * x + y * y;
      if (r2 == 0.0) raise(ErrorKind::Domain, "contour passes through the vortex centre");
      seg += weights[q] * (-y * dx + x * dy) / r2;
    }
    total += 0.5 * strength * seg;
    turn += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
  }
  return {total, static_cast<int>(std::lround(turn / (2.0 * pi)))};
}

double bohr_sommerfeld(const PsiModel& pm, const std::vector<CoordPoint>& contour) {
  const Circulation c = circulation(pm, contour);
  if (std::abs(c.winding) != 1)
    raise(ErrorKind::Winding, "contour winds " + std::to_string(c.winding) + " times around the origin");
  return c.value;
}

}  // namespace hodograph
