#include "hodograph/mapper.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hodograph/error.hpp"
#include "hodograph/numerics.hpp"
#include "hodograph/potentials.hpp"

namespace hodograph {
namespace {

// Polar derivatives of omega = R(rho) Theta(theta).
struct PolarJet {
  double w, w_r, w_t, w_rr, w_rt, w_tt;
};

PolarJet polar_jet(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                   double rho, double theta) {
  const RadialDerivs r = radial_derivs(p, sol, rho);
  const double t0 = angular_theta_derivative(fac, theta, 0);
  const double t1 = angular_theta_derivative(fac, theta, 1);
  const double t2 = angular_theta_derivative(fac, theta, 2);
  return {r.R * t0, r.dR * t0, r.R * t1, r.d2R * t0, r.dR * t1, r.R * t2};
}

void check_lambdas(const RadialSolution& sol, const AngularFactor& fac) {
  if (sol.lambda != fac.lambda) raise(ErrorKind::Parameter, "radial and angular lambda differ");
}

}  // namespace

bool is_degenerate_lambda(double lambda) { return std::fabs(lambda - 1.0) <= 1e-12; }

double script_R(const ModelParams& p, const RadialSolution& sol, double rho) {
  if (!(rho > 0.0)) raise(ErrorKind::Domain, "script_R needs rho > 0");
  switch (sol.kind) {
    case RadialKind::Constant:
      return 0.0;
    case RadialKind::HyperbolicOmega: {
      const RadialDerivs d = radial_derivs(p, sol, rho);
      if (d.R == 0.0) raise(ErrorKind::Node, "Omega_bar vanishes");
      return rho * d.dR / d.R;
    }
    case RadialKind::KummerPlus:
    case RadialKind::KummerMinus: {
      const double tau = (p.ell + 1.0) / p.n * std::pow(rho / p.rho_T(), p.n);
      return sol.nu + p.n * tau * specfun::kummer_logderiv(sol.a, sol.b, tau);
    }
    case RadialKind::TricomiPlus:
    case RadialKind::TricomiMinus: {
      const double tau = (p.ell + 1.0) / p.n * std::pow(rho / p.rho_T(), p.n);
      const double psi = specfun::tricomi_psi(sol.a, sol.b, tau);
      if (psi == 0.0) raise(ErrorKind::Node, "Tricomi factor vanishes");
      return sol.nu + p.n * tau * specfun::tricomi_psi_derivative(sol.a, sol.b, tau, 1) / psi;
    }
  }
  raise(ErrorKind::Parameter, "unknown radial kind");
}

double jacobian_inverse(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                        double rho, double theta) {
  check_lambdas(sol, fac);
  const RadialDerivs r = radial_derivs(p, sol, rho);
  const double t0 = angular_theta_derivative(fac, theta, 0);
  const double t1 = angular_theta_derivative(fac, theta, 1);
  const double l2 = sol.lambda * sol.lambda;
  const double radial_part = rho * r.dR - l2 * r.R;
  const double angular_part = rho * r.dR - r.R;
  const double r4 = rho * rho * rho * rho;
  return -(coeff_g(p, rho) * t0 * t0 * radial_part * radial_part + t1 * t1 * angular_part * angular_part) / r4;
}

double jacobian_scale(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                      double rho, double theta) {
  const RadialDerivs r = radial_derivs(p, sol, rho);
  const double t0 = angular_theta_derivative(fac, theta, 0);
  const double amp2 = fac.c1 * fac.c1 + fac.c2 * fac.c2;
  const double l2 = sol.lambda * sol.lambda;
  const double t1_max2 = fac.lambda == 0.0 ? fac.c1 * fac.c1 : l2 * amp2;
  const double radial_part = rho * r.dR - l2 * r.R;
  const double angular_part = rho * r.dR - r.R;
  const double r4 = rho * rho * rho * rho;
  return ((p.ell + 1.0) * std::max(t0 * t0, amp2) * radial_part * radial_part +
          t1_max2 * angular_part * angular_part) / r4;
}

MapPoint forward_map(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                     double rho, double theta) {
  check_lambdas(sol, fac);
  if (is_degenerate_lambda(sol.lambda))
    raise(ErrorKind::DegenerateMap,
          "lambda = 1: the Jacobian vanishes identically, so the inverse Legendre transform is not possible");
  if (!(rho > 0.0)) raise(ErrorKind::Domain, "forward_map needs rho > 0");
  const PolarJet j = polar_jet(p, sol, fac, rho, theta);
  const double c = std::cos(theta), s = std::sin(theta);
  MapPoint m;
  m.rho = rho;
  m.theta = theta;
  m.x = j.w_r * c - j.w_t / rho * s;
  m.y = j.w_r * s + j.w_t / rho * c;
  m.phi_val = rho * j.w_r - j.w;
  m.jac_inv = jacobian_inverse(p, sol, fac, rho, theta);
  m.region = classify(p, rho);
  return m;
}

MapDifferential map_differential(const ModelParams& p, const RadialSolution& sol,
                                 const AngularFactor& fac, double rho, double theta) {
  const PolarJet j = polar_jet(p, sol, fac, rho, theta);
  const double c = std::cos(theta), s = std::sin(theta);
  const double cross = j.w_rt / rho - j.w_t / (rho * rho);
  return {j.w_rr * c - cross * s,
          j.w_rt * c - j.w_r * s - j.w_tt / rho * s - j.w_t / rho * c,
          j.w_rr * s + cross * c,
          j.w_rt * s + j.w_r * c + j.w_tt / rho * c - j.w_t / rho * s};
}

ModelParams radial_map_params(const ModelParams& p) {
  ModelParams q = p;
  q.c1 = std::exp((p.ell + 1.0) / p.n) * p.c0 * p.rho_T() / std::sqrt(p.ell + 1.0);
  return q;
}

MapPoint forward_map_radial(const ModelParams& p, double rho, double theta) {
  if (!(rho > p.rho_T())) raise(ErrorKind::Region, "radial map needs rho > rho_T");
  const ModelParams q = radial_map_params(p);
  const double zb = hill_zeta_bar(p, rho);
  MapPoint m;
  m.rho = rho;
  m.theta = theta;
  m.x = zb * std::cos(theta);
  m.y = zb * std::sin(theta);
  m.phi_val = rho * zb - hyperbolic_omega(q, rho);
  m.jac_inv = -coeff_g(p, rho) * zb * zb / (rho * rho);
  m.region = classify(p, rho);
  return m;
}

MomentumPoint invert_map(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                         CoordPoint target, MomentumPoint seed, const InvertOptions& opt) {
  const double scale = std::max(1.0, std::hypot(target.x, target.y));
  MomentumPoint cur = seed;
  MapPoint m = forward_map(p, sol, fac, cur.rho, cur.theta);
  const double sign0 = std::copysign(1.0, m.jac_inv);
  double fx = m.x - target.x, fy = m.y - target.y;
  double res = std::hypot(fx, fy);
  int polished = 0;
  for (int it = 0; it < opt.max_iter; ++it) {
    if (res <= opt.tol * scale && polished++ >= opt.polish) return cur;
    const MapDifferential d = map_differential(p, sol, fac, cur.rho, cur.theta);
    const double det = d.x_rho * d.y_theta - d.x_theta * d.y_rho;
    if (det == 0.0) raise(ErrorKind::FoldDetected, "singular map differential on the Newton path");
    const double drho = -(d.y_theta * fx - d.x_theta * fy) / det;
    const double dtheta = -(-d.y_rho * fx + d.x_rho * fy) / det;
    double step = 1.0;
    bool accepted = false;
    for (int back = 0; back < 30; ++back, step *= 0.5) {
      const MomentumPoint trial{cur.rho + step * drho, cur.theta + step * dtheta};
      if (!(trial.rho > 0.0)) continue;
      const MapPoint tm = forward_map(p, sol, fac, trial.rho, trial.theta);
      const double tres = std::hypot(tm.x - target.x, tm.y - target.y);
      if (tres < res) {
        if (tm.jac_inv != 0.0 && std::copysign(1.0, tm.jac_inv) != sign0)
          raise(ErrorKind::FoldDetected, "Jacobian changes sign along the inversion path");
        cur = trial;
        m = tm;
        fx = m.x - target.x;
        fy = m.y - target.y;
        res = tres;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (res <= opt.tol * scale) return cur;
  raise(ErrorKind::NoConvergence, "invert_map did not converge (residual " + std::to_string(res) + ")");
}

MomentumPoint invert_map_radial(const ModelParams& p, CoordPoint target) {
  const double r = std::hypot(target.x, target.y);
  const double rt = p.rho_T();
  if (!(r > hill_zeta_bar(p, rt))) raise(ErrorKind::NoConvergence, "target radius inside the image hole");
  double hi = 2.0 * rt;
  while (hill_zeta_bar(p, hi) < r) {
    hi *= 1.5;
    if (hi > 1e6 * rt) raise(ErrorKind::NoConvergence, "radial inversion bracket not found");
  }
  const numerics::Fn1 f = [&](double rho) { return hill_zeta_bar(p, rho) - r; };
  const double rho = numerics::bisect_root(f, rt, hi, 1e-15 * hi);
  return {rho, std::atan2(target.y, target.x)};
}

void SectorDomain::validate(const ModelParams& p, bool hyperbolic_only) const {
  if (!(rho_min > 0.0 && rho_min < rho_max)) raise(ErrorKind::Parameter, "sector needs 0 < rho_min < rho_max");
  if (!(theta_min < theta_max)) raise(ErrorKind::Parameter, "sector needs theta_min < theta_max");
  if (hyperbolic_only && !(rho_min > p.rho_T()))
    raise(ErrorKind::Region, "hyperbolic sector needs rho_min > rho_T");
}

std::string_view to_string(SampleFlag flag) noexcept {
  switch (flag) {
    case SampleFlag::Ok: return "ok";
    case SampleFlag::Node: return "node";
    case SampleFlag::Degenerate: return "degenerate";
  }
  return "unknown";
}

double area_element(const ModelParams& p, const MappedSolution& s, double rho, double theta) {
  if (s.radial_map) return rho * std::fabs(forward_map_radial(p, rho, theta).jac_inv);
  return rho * std::fabs(jacobian_inverse(p, s.radial, s.angular, rho, theta));
}

std::vector<FieldSample> sample_fields(const ModelParams& p, const MappedSolution& s,
                                       const SectorDomain& domain, std::size_t n_rho,
                                       std::size_t n_theta, double norm) {
  if (n_rho < 2 || n_theta < 2) raise(ErrorKind::Parameter, "field grid must be at least 2 x 2");
  domain.validate(p, s.radial_map);
  if (!s.radial_map && is_degenerate_lambda(s.radial.lambda))
    raise(ErrorKind::DegenerateMap,
          "lambda = 1: the Jacobian vanishes identically, so the inverse Legendre transform is not possible");
  const double va = -p.alpha;  // velocity = -alpha (xi, eta)
  std::vector<FieldSample> out;
  out.reserve(n_rho * n_theta);
  for (std::size_t i = 0; i < n_rho; ++i) {
    const double rho = domain.rho_min + (domain.rho_max - domain.rho_min) * static_cast<double>(i) /
                                            static_cast<double>(n_rho - 1);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta = domain.theta_min + (domain.theta_max - domain.theta_min) *
                                                  static_cast<double>(j) / static_cast<double>(n_theta - 1);
      const MapPoint m = s.radial_map ? forward_map_radial(p, rho, theta)
                                      : forward_map(p, s.radial, s.angular, rho, theta);
      FieldSample f;
      f.rho = rho;
      f.theta = theta;
      f.x = m.x;
      f.y = m.y;
      f.phi = m.phi_val;
      f.vx = va * rho * std::cos(theta);
      f.vy = va * rho * std::sin(theta);
      f.speed = std::fabs(p.alpha) * rho;
      f.density = density_F(p, f.speed, norm);
      f.jac_inv = m.jac_inv;
      f.region = m.region;
      const double jscale = s.radial_map ? 0.0 : jacobian_scale(p, s.radial, s.angular, rho, theta);
      f.flag = std::fabs(m.jac_inv) <= kDegenerateJacobian * jscale ? SampleFlag::Degenerate : SampleFlag::Ok;
      if (f.flag == SampleFlag::Degenerate) f.jac_inv = 0.0;
      try {
        f.q_pot = s.radial_map ? quantum_potential_radial(p, rho)
                               : quantum_potential(p, s.radial, s.angular, rho, theta);
        f.u_pot = classical_potential_from_q(p, rho, f.q_pot);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Node) throw;
        f.q_pot = f.u_pot = std::numeric_limits<double>::quiet_NaN();
        f.flag = SampleFlag::Node;
      }
      out.push_back(f);
    }
  }
  return out;
}

bool is_univalent(const std::vector<FieldSample>& samples) {
  int sign = 0;
  for (const auto& f : samples) {
    if (f.jac_inv == 0.0 || std::isnan(f.jac_inv)) continue;
    const int sg = f.jac_inv > 0.0 ? 1 : -1;
    if (sign == 0) sign = sg;
    else if (sg != sign) return false;
  }
  return true;
}

}  // namespace hodograph
