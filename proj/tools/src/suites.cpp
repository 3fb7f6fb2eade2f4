#include "hodograph/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hodograph/error.hpp"
#include "hodograph/mapper.hpp"
#include "hodograph/maxwell.hpp"
#include "hodograph/momentum.hpp"
#include "hodograph/numerics.hpp"
#include "hodograph/potentials.hpp"
#include "hodograph/specfun.hpp"

namespace hodograph::cli {
namespace {

using std::numbers::pi;
using Reports = std::vector<VerificationReport>;

ModelParams model(double n, double ell) {
  ModelParams p;
  p.n = n;
  p.ell = ell;
  return p;
}

std::string tag(double n, double ell, double lambda) {
  std::ostringstream os;
  os << "(" << n << "," << ell << "," << lambda << ")";
  return os.str();
}

double fd1(const numerics::Fn1& f, double x) { return numerics::fd_derivative(f, x, 1, numerics::fd_step(1, x)); }
double fd2(const numerics::Fn1& f, double x) { return numerics::fd_derivative(f, x, 2, numerics::fd_step(2, x)); }

// Factorized test solutions: the three polynomial (Laguerre) cases.
struct Case {
  double n, ell, lambda;
};
constexpr Case kCases[] = {{2.0, 0.0, 2.0}, {2.0, 4.0, 3.0}, {2.0, 2.0, 4.0}};

// Hyperbolic sectors |theta| <= theta_max with Theta = cos(lambda theta).
struct ReferenceSector {
  double ell, lambda, rho1, rho2, theta_deg;
};
constexpr ReferenceSector kSectors[] = {{0.0, 2.0, 1.8, 2.4, 12.0}, {4.0, 3.0, 1.5, 1.89, 15.0}, {2.0, 4.0, 1.45, 1.75, 12.0}};

// ---------------------------------------------------------------------------
// special functions

Reports specfun_suite() {
  Reports out;
  {
    ResidualAccumulator acc;
    for (double a : {-2.5, -0.3, 0.7, 1.5, 3.2})
      for (double b : {0.5, 1.5, 3.7})
        for (double z : {0.1, 1.0, 5.0, 12.0}) {
          const double m0 = specfun::kummer_m(a, b, z), m1 = specfun::kummer_m_derivative(a, b, z, 1);
          const double m2 = specfun::kummer_m_derivative(a, b, z, 2);
          acc.add(z * m2 + (b - z) * m1 - a * m0, std::fabs(z * m2) + std::fabs((b - z) * m1) + std::fabs(a * m0));
        }
    out.push_back(acc.finish("kummer-ode", "a x b x z = 5 x 3 x 4, analytic derivatives", 1e-10));
  }
  {
    ResidualAccumulator acc;
    for (int k = 0; k <= 12; ++k)
      for (double ab = 0.5; ab < 10.0; ab += 1.5)
        for (double z : {0.1, 1.7, 6.0, 14.0}) {
          const double binom = std::exp(std::lgamma(k + ab + 1.0) - std::lgamma(k + 1.0) - std::lgamma(ab + 1.0));
          const double want = binom * specfun::kummer_m(-k, ab + 1.0, z);
          const double got = specfun::laguerre(k, ab, z);
          acc.add(got - want, std::fabs(want));
        }
    out.push_back(acc.finish("laguerre-bridge", "k <= 12, alpha in 0.5:1.5:9.5, z in {0.1,1.7,6,14}", 1e-12));
  }
  {
    ResidualAccumulator acc;
    for (double x : {-3.0, -0.5, 0.5, 1.0, 4.0, 10.0}) {
      const double d = fd1([](double t) { return specfun::expint_ei(t); }, x);
      acc.add(d - std::exp(x) / x, std::exp(x) / std::fabs(x));
    }
    out.push_back(acc.finish("ei-derivative", "x in {-3,-0.5,0.5,1,4,10}, central FD", 1e-6));
  }
  return out;
}

// ---------------------------------------------------------------------------
// momentum space

Reports momentum_suite() {
  Reports out;
  for (const Case c : kCases) {
    const ModelParams p = model(c.n, c.ell);
    const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
    const AngularFactor fac{c.lambda, 1.0, 0.0};
    const auto u = [&](double r, double t) { return factorized_u(p, sol, fac, r, t); };
    const SectorDomain d{0.2 * p.rho_T(), 2.0 * p.rho_T(), 0.0, 2.0 * pi / 3.0};
    out.push_back(pde_residual_momentum(p, u, d, 50, 50, 1e-4, 1e-5, "momentum-pde " + tag(c.n, c.ell, c.lambda)));
  }
  {
    ResidualAccumulator acc;
    for (const Case c : kCases)
      for (double r : {0.4, 0.7, 1.3, 1.8}) {
        const ModelParams p = model(c.n, c.ell);
        const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
        const double rho = r * p.rho_T();
        const numerics::Fn1 R = [&](double x) { return radial_kummer(p, sol, x); };
        const numerics::Fn1 zb = [&](double x) { return hill_zeta_bar(p, x); };
        const double z = zb(rho);
        const double r_zz = (fd2(R, rho) * z - fd1(R, rho) * fd1(zb, rho)) / (z * z * z);
        const double gr = hill_coefficient_G(p, c.lambda, rho) * R(rho);
        acc.add(r_zz + gr, std::fabs(r_zz) + std::fabs(gr));
      }
    out.push_back(acc.finish("hill-reduction", "3 cases x rho in {0.4,0.7,1.3,1.8} rho_T, FD in rho", 1e-4));
  }
  {
    ResidualAccumulator acc;
    const ModelParams p = model(2.0, 2.0);
    struct K { CharacteristicKind kind; double r, sign; };
    for (const K k : {K{CharacteristicKind::HyperbolicPlus, 1.5, -1.0}, K{CharacteristicKind::HyperbolicMinus, 1.5, 1.0},
                      K{CharacteristicKind::EllipticPlus, 0.5, -1.0}, K{CharacteristicKind::EllipticMinus, 0.5, 1.0}}) {
      const double rho = k.r * p.rho_T();
      const numerics::Fn1 chi_r = [&](double r) { return characteristic_chi(p, k.kind, r, 0.3).value; };
      const numerics::Fn1 chi_t = [&](double t) { return characteristic_chi(p, k.kind, rho, t).value; };
      const double got = -fd1(chi_r, rho) / fd1(chi_t, 0.3);
      const double want = k.sign * std::sqrt(std::fabs(discriminant(p, rho))) / rho;
      acc.add(got - want, std::fabs(want));
    }
    out.push_back(acc.finish("characteristic-ode", "(2,2), four kinds, implicit FD", 1e-6));
  }
  {
    const ModelParams p = model(2.0, 2.0);
    const double rho = 1.6 * p.rho_T();
    const numerics::Fn1 mu = [&](double r) { return mu_plus(p, r); };
    const numerics::Fn1 om = [&](double r) { return hyperbolic_omega(p, r); };
    const numerics::Fn1 lam = [&](double r) { return fd1(om, r) / fd1(mu, r); };
    const double l = lam(rho);
    const double dl = numerics::fd_derivative(lam, rho, 1, 1e-4 * rho) / fd1(mu, rho);
    const double k4 = 4.0 * canonical_kappa(p, rho, Branch::Hyperbolic) * l;
    ResidualAccumulator acc;
    acc.add(dl + k4, std::fabs(k4));
    out.push_back(acc.finish("kappa-flow", "(2,2), rho = 1.6 rho_T, nested FD", 1e-4));
  }
  {
    ResidualAccumulator acc;
    for (const Case c : kCases)
      for (double r : {0.3, 0.8, 1.5, 2.2}) {
        const ModelParams p = model(c.n, c.ell);
        const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
        const double rho = r * p.rho_T(), g = coeff_g(p, rho), l2 = c.lambda * c.lambda;
        const RadialDerivs d = radial_derivs(p, sol, rho);
        acc.add(d.d2R + g * (d.dR / rho - l2 * d.R / (rho * rho)),
                std::fabs(d.d2R) + std::fabs(g) * (std::fabs(d.dR) / rho + l2 * std::fabs(d.R) / (rho * rho)));
      }
    out.push_back(acc.finish("radial-ode", "3 cases x 4 radii, analytic derivatives", 1e-9));
  }
  return out;
}

// ---------------------------------------------------------------------------
// inverse map

Reports map_legendre_suite() {
  Reports out;
  {
    ResidualAccumulator acc;
    for (const Case c : kCases) {
      const ModelParams p = model(c.n, c.ell);
      const MappedSolution s{make_radial(p, RadialKind::KummerPlus, c.lambda), AngularFactor{c.lambda, 0.0, 1.0}};
      for (double r : {0.4, 0.7, 1.6, 2.0})
        for (double t : {-0.15, 0.05, 0.2}) {
          const double rho = r * p.rho_T();
          const MapPoint m = forward_map(p, s.radial, s.angular, rho, t);
          if (std::fabs(m.jac_inv) < 1e-2 * jacobian_scale(p, s.radial, s.angular, rho, t)) {
            acc.skip();
            continue;
          }
          const PhiField phi = mapped_phi(p, s, {{{m.x, m.y}, {rho, t}}});
          const double h = chart_step(p, s, rho, t, 1e-5);
          const double gx = (phi(m.x + h, m.y) - phi(m.x - h, m.y)) / (2 * h);
          const double gy = (phi(m.x, m.y + h) - phi(m.x, m.y - h)) / (2 * h);
          acc.add(std::hypot(gx - rho * std::cos(t), gy - rho * std::sin(t)), rho);
        }
    }
    out.push_back(acc.finish("legendre-gradient", "3 cases x 4 radii x 3 angles, coordinate FD on local charts", 1e-4));
  }
  {
    ResidualAccumulator acc;
    for (const Case c : kCases) {
      const ModelParams p = model(c.n, c.ell);
      const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
      const AngularFactor fac{c.lambda, 1.0, 0.3};
      for (double r : {0.5, 0.9, 1.4})
        for (double t : {0.2, 0.5}) {
          const double rho = r * p.rho_T();
          const numerics::Fn2 u = [&](double a, double b) {
            return factorized_u(p, sol, fac, std::hypot(a, b), std::atan2(b, a));
          };
          const auto d = numerics::fd_partials(u, rho * std::cos(t), rho * std::sin(t), 1e-3 * rho, 1e-3 * rho);
          const double hess = d.fxx * d.fyy - d.fxy * d.fxy;
          const double j = jacobian_inverse(p, sol, fac, rho, t);
          acc.add(j - hess, std::fabs(d.fxx * d.fyy) + d.fxy * d.fxy);
        }
    }
    out.push_back(acc.finish("jacobian-fd", "3 cases x 3 radii x 2 angles, Cartesian Hessian of u", 1e-4));
  }
  {
    ResidualAccumulator acc;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ur(0.05, 3.0), ut(-pi, pi);
    for (double ell : {0.0, 2.0, 4.0}) {
      const ModelParams p = model(2.0, ell);
      const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, 1.0);
      const AngularFactor fac{1.0, 1.0, 0.4};
      for (int i = 0; i < 100; ++i) acc.add(jacobian_inverse(p, sol, fac, ur(rng) * p.rho_T(), ut(rng)));
    }
    out.push_back(acc.finish("degenerate-lambda", "lambda = 1, ell in {0,2,4}, 100 random points each", 1e-12));
  }
  {
    ResidualAccumulator acc;
    for (const Case c : kCases) {
      const ModelParams p = model(c.n, c.ell);
      const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
      const AngularFactor fac{c.lambda, 0.8, 0.5};
      for (int j = -1; j <= 1; ++j) acc.add(jacobian_inverse(p, sol, fac, p.rho_T(), angular_extremum(fac, j)));
    }
    out.push_back(acc.finish("parabolic-extremum", "J^-1(rho_T, theta_e), 3 cases x 3 extrema", 1e-10));
  }
  return out;
}

VerificationReport speed_bounds(const std::string& name, const std::vector<FieldSample>& samples, double lo, double hi) {
  ResidualAccumulator acc;
  for (const auto& f : samples) acc.add(std::max({0.0, lo - f.speed, f.speed - hi}));
  std::ostringstream spec;
  spec.precision(6);
  spec << samples.size() << " samples, speed in [" << lo << ", " << hi << "]";
  return acc.finish(name, spec.str(), 0.0);
}

Reports map_pde_suite() {
  Reports out;
  {
    const ModelParams p = model(2.0, 0.0);
    const MappedSolution s{make_radial(p, RadialKind::KummerPlus, 2.0), AngularFactor{2.0, 0.0, 1.0}};
    const SectorDomain d{0.1 * p.rho_T(), 0.95 * p.rho_T(), -pi, pi};
    out.push_back(hsweep("coordinate-pde disk (2,0,2)",
                         [&](double h) { return pde_residual_mapped(p, s, d, 8, 16, h, 1e-3); }, 1e-3));
    const SectorDomain disk{0.02 * p.rho_T(), (1.0 - 1e-9) * p.rho_T(), -pi, pi};
    out.push_back(speed_bounds("speed-bounds disk (2,0,2)", sample_fields(p, s, disk, 25, 25, 1.0), 0.0,
                               p.sigma_v * (1.0 - 1e-12)));
  }
  for (const ReferenceSector c : kSectors) {
    const ModelParams p = model(2.0, c.ell);
    const MappedSolution s{make_radial(p, RadialKind::KummerPlus, c.lambda), AngularFactor{c.lambda, 0.0, 1.0}};
    const double tm = c.theta_deg * pi / 180.0;
    const SectorDomain d{c.rho1 * p.rho_T(), c.rho2 * p.rho_T(), -tm, tm};
    const std::string t = tag(2.0, c.ell, c.lambda);
    out.push_back(hsweep("coordinate-pde sector " + t, [&](double h) { return pde_residual_mapped(p, s, d, 8, 8, h, 1e-3); }, 1e-4));
    const double va = std::fabs(p.alpha);
    out.push_back(speed_bounds("speed-bounds sector " + t, sample_fields(p, s, d, 15, 15, 1.0),
                               c.rho1 * p.rho_T() * va * (1 - 1e-14), c.rho2 * p.rho_T() * va * (1 + 1e-14)));
  }
  {
    const ModelParams p = model(2.0, 0.0);
    const MappedSolution s{RadialSolution{}, AngularFactor{}, true};
    const SectorDomain d{1.1 * p.rho_T(), 2.5 * p.rho_T(), -pi, pi};
    out.push_back(hsweep("coordinate-pde radial (2,0)", [&](double h) { return pde_residual_mapped(p, s, d, 6, 6, h, 1e-3); }, 1e-3));
  }
  return out;
}

// ---------------------------------------------------------------------------
// potentials

double q_oracle(const ModelParams& p, const MappedSolution& s, MomentumPoint m, double h) {
  const MapPoint img = forward_map(p, s.radial, s.angular, m.rho, m.theta);
  const auto amp = [&](double x, double y) {
    const MomentumPoint q = invert_map(p, s.radial, s.angular, {x, y}, m);
    return std::sqrt(density_F(p, std::fabs(p.alpha) * q.rho, 1.0));
  };
  const double step = chart_step(p, s, m.rho, m.theta, h);
  const double a0 = amp(img.x, img.y);
  const double lap = (amp(img.x + step, img.y) + amp(img.x - step, img.y) + amp(img.x, img.y + step) +
                      amp(img.x, img.y - step) - 4.0 * a0) / (step * step);
  return p.alpha / p.beta * lap / a0;
}

Reports potentials_suite() {
  Reports out;
  for (const Case c : kCases) {
    const ModelParams p = model(c.n, c.ell);
    const MappedSolution s{make_radial(p, RadialKind::KummerPlus, c.lambda), AngularFactor{c.lambda, 1.0, 0.0}};
    const double rt = p.rho_T();
    const MomentumPoint pts[] = {{0.45 * rt, 0.30}, {0.55 * rt, 0.45}, {0.65 * rt, 0.35}, {0.75 * rt, 0.25}};
    ResidualAccumulator acc;
    const double q0 = quantum_potential(p, s.radial, s.angular, pts[0].rho, pts[0].theta);
    const double f0 = q_oracle(p, s, pts[0], 1e-3);
    for (std::size_t i = 1; i < std::size(pts); ++i) {
      const double dq = quantum_potential(p, s.radial, s.angular, pts[i].rho, pts[i].theta) - q0;
      const double df = q_oracle(p, s, pts[i], 1e-3) - f0;
      acc.add(dq - df, std::fabs(df));
    }
    out.push_back(acc.finish("q-oracle " + tag(c.n, c.ell, c.lambda), "3 point differences, FD Laplacian of sqrt f", 1e-3));
  }
  {
    ResidualAccumulator acc;
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> un(1.0, 4.0), ul(2.2, 9.0), us(0.3, 5.0), ur(0.05, 20.0);
    for (int i = 0; i < 100; ++i) {
      PsiModel pm;
      pm.params = model(un(rng), ul(rng));
      pm.sigma_r = us(rng);
      const double r = ur(rng) * pm.sigma_r, rho = std::fabs(pm.c1()) / r;
      const double u = pm.c1() * 0.4 + 0.7;
      const QPotentialArgs z{-1.0, 0.0, coeff_g(pm.params, rho), pm.c1() / u};
      const double want = psi_model_eval(pm, r, 0.0, 0.0).q_pot;
      acc.add(quantum_potential_z(pm.params, 0.0, z, u, rho) - want, std::fabs(want));
    }
    out.push_back(acc.finish("q-reduction", "lambda = 0, R = const, 100 random (r, n, ell, sigma)", 1e-12));
  }
  return out;
}

// ---------------------------------------------------------------------------
// vortex model

Reports psi_suite() {
  Reports out;
  const double inf = std::numeric_limits<double>::infinity();
  const char* names[] = {"two-zeros", "critical", "one-zero"};
  const double sigmas[] = {1.5, 3.0, 4.5};  // rho_T sigma_r vs ell = 6 with rho_T = 2
  const double exps[] = {-2.0, -6.0, -2.0};
  for (int i = 0; i < 3; ++i) {
    PsiModel pm;
    pm.params = model(4.0, 6.0);
    pm.sigma_r = sigmas[i];
    const std::string rg = names[i];
    ResidualAccumulator an, fd;
    for (double r = 0.3; r <= 5.0; r += 0.1)
      for (double phi : {0.2, 1.9, 4.0}) an.add(schrodinger_residual_analytic(pm, r * pm.sigma_r, phi, 0.0));
    for (double r = 0.7; r <= 5.0; r += 0.1) fd.add(schrodinger_residual_fd(pm, r * pm.sigma_r, 0.7, 0.0, 1e-4 * pm.sigma_r));
    out.push_back(an.finish("schrodinger-analytic " + rg, "(4,6), r in 0.3:0.1:5 sigma, 3 angles", 1e-8));
    out.push_back(fd.finish("schrodinger-fd " + rg, "(4,6), r in 0.7:0.1:5 sigma, h = 1e-4 sigma", 1e-4));
    ResidualAccumulator zeros;
    for (double r : psi_model_zeros(pm)) {
      const PsiSample s = psi_model_eval(pm, r, 0.0, 0.0);
      zeros.add(s.u_pot, std::max(1.0, std::fabs(s.q_pot)));
    }
    out.push_back(zeros.finish("u-zeros " + rg, "closed-form zeros", 1e-9));
    const double r = 1e3 * pm.sigma_r;
    const double u1 = psi_model_eval(pm, r, 0.0, 0.0).u_pot, u2 = psi_model_eval(pm, 1.1 * r, 0.0, 0.0).u_pot;
    out.push_back(scalar_report("u-asymptotic " + rg, std::log(std::fabs(u2 / u1)) / std::log(1.1), exps[i], 0.02));
  }
  PsiModel pm;
  pm.params = model(4.0, 6.0);
  pm.sigma_r = 1.5;
  {
    const numerics::Fn2 f = [&](double r, double phi) { return psi_model_eval(pm, r, phi, 0.0).density; };
    out.push_back(scalar_report("normalization (4,6)", numerics::quad2d_polar(f, 0.0, inf, 0.0, 2 * pi), 1.0, 1e-6));
  }
  {
    const numerics::Fn2 f1 = [&](double r, double phi) { return r * psi_model_eval(pm, r, phi, 0.0).density; };
    const numerics::Fn2 f2 = [&](double r, double phi) { return r * r * psi_model_eval(pm, r, phi, 0.0).density; };
    const double m1 = numerics::quad2d_polar(f1, 0.0, inf, 0.0, 2 * pi);
    const double m2 = numerics::quad2d_polar(f2, 0.0, inf, 0.0, 2 * pi);
    out.push_back(scalar_report("sigma-r (4,6)", psi_model_sigma_r(pm), std::sqrt(m2 - m1 * m1), 1e-6));
  }
  {
    PsiModel bs = pm;
    bs.sigma_r = 1.0;  // |c1| = 2
    const auto ellipse = [](double a, double b, double cx, double cy) {
      std::vector<CoordPoint> pts;
      for (int i = 0; i < 10000; ++i) {
        const double t = 2 * pi * i / 10000.0;
        pts.push_back({cx + a * std::cos(t), cy + b * std::sin(t)});
      }
      return pts;
    };
    const double want = 2 * pi * bs.hbar() / 2 * std::fabs(bs.c1());
    out.push_back(scalar_report("bohr-sommerfeld circle", bohr_sommerfeld(bs, ellipse(1.0, 1.0, 0.0, 0.0)), want, 1e-8));
    out.push_back(scalar_report("bohr-sommerfeld ellipse", bohr_sommerfeld(bs, ellipse(3.0, 0.5, 0.4, -0.1)), want, 1e-8));
    out.push_back(scalar_report("circulation off-centre", circulation(bs, ellipse(0.5, 0.5, 3.0, 0.0)).value, 0.0, 1e-10, false));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "momentum", "map", "potentials", "psi"};
  return names;
}

std::vector<VerificationReport> run_suite(std::string_view name) {
  if (name == "specfun") return specfun_suite();
  if (name == "momentum") return momentum_suite();
  if (name == "map-legendre") return map_legendre_suite();
  if (name == "map-pde") return map_pde_suite();
  if (name == "map") {
    auto a = map_legendre_suite();
    auto b = map_pde_suite();
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  if (name == "potentials") return potentials_suite();
  if (name == "psi") return psi_suite();
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : suite_names()) {
      auto r = run_suite(n);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  raise(ErrorKind::Parameter, "unknown suite '" + std::string(name) + "'");
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace hodograph::cli
