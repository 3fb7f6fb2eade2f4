#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hodograph/error.hpp"
#include "hodograph/mapper.hpp"
#include "hodograph/maxwell.hpp"
#include "hodograph/momentum.hpp"
#include "hodograph/numerics.hpp"
#include "hodograph/potentials.hpp"
#include "hodograph/specfun.hpp"

using namespace hodograph;
using std::numbers::pi;

namespace {

ModelParams make(double n, double ell) {
  ModelParams p;
  p.n = n;
  p.ell = ell;
  return p;
}

double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }

PsiModel psi(double n, double ell, double sigma_r) {
  PsiModel pm;
  pm.params = make(n, ell);
  pm.sigma_r = sigma_r;
  return pm;
}

// sigma_r values putting (4, 6) in each regime: rho_T sigma_r vs ell with rho_T = 2
constexpr double kRegimeSigma[] = {1.5, 3.0, 4.5};

// (alpha / beta) Lap sqrt(f) / sqrt(f) at a coordinate point by a five-point
// Laplacian; rho(x, y) comes from Newton inversion seeded at `seed`.
double q_oracle(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac, CoordPoint c,
                MomentumPoint seed, double h) {
  const auto amp = [&](double x, double y) {
    const MomentumPoint m = invert_map(p, sol, fac, {x, y}, seed);
    return std::sqrt(density_F(p, std::fabs(p.alpha) * m.rho, 1.0));
  };
  const double a0 = amp(c.x, c.y);
  const double lap = (amp(c.x + h, c.y) + amp(c.x - h, c.y) + amp(c.x, c.y + h) + amp(c.x, c.y - h) - 4.0 * a0) / (h * h);
  return p.alpha / p.beta * lap / a0;
}

}  // namespace

TEST_CASE("quantum potential: closed form against the FD Laplacian oracle") {
  struct Case { double n, ell, lambda; MomentumPoint a, b; };
  for (const Case c : {Case{2.0, 0.0, 2.0, {0.5, 0.4}, {0.7, 0.6}}, Case{2.0, 0.0, 2.0, {1.95, 0.06}, {2.25, 0.12}},
                       Case{2.0, 4.0, 3.0, {0.5, 0.4}, {0.7, 0.6}}, Case{2.0, 2.0, 4.0, {0.5, 0.35}, {0.7, 0.5}}}) {
    const ModelParams p = make(c.n, c.ell);
    const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, c.lambda);
    const AngularFactor fac{c.lambda, 1.0, 0.0};
    const double rt = p.rho_T();
    const MomentumPoint pa{c.a.rho * rt, c.a.theta}, pb{c.b.rho * rt, c.b.theta};
    const MapPoint ma = forward_map(p, sol, fac, pa.rho, pa.theta);
    const MapPoint mb = forward_map(p, sol, fac, pb.rho, pb.theta);
    const double ha = 1e-3 * std::max(1.0, std::hypot(ma.x, ma.y));
    const double hb = 1e-3 * std::max(1.0, std::hypot(mb.x, mb.y));
    const double fd = q_oracle(p, sol, fac, {ma.x, ma.y}, pa, ha) - q_oracle(p, sol, fac, {mb.x, mb.y}, pb, hb);
    const double closed = quantum_potential(p, sol, fac, pa.rho, pa.theta) - quantum_potential(p, sol, fac, pb.rho, pb.theta);
    CHECK_MESSAGE(rel(closed, fd) < 1e-3, "n=" << c.n << " ell=" << c.ell << " lambda=" << c.lambda << " closed=" << closed << " fd=" << fd);
  }
}

TEST_CASE("quantum potential: reduction to the vortex model at lambda = 0, R = const") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> un(1.0, 4.0), ul(2.2, 9.0), us(0.3, 5.0), ur(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    const PsiModel pm = psi(un(rng), ul(rng), us(rng));
    const ModelParams& p = pm.params;
    const double r = ur(rng) * pm.sigma_r;
    const double rho = std::fabs(pm.c1()) / r;
    const double c2 = 0.7, theta = 0.4;
    const double u = pm.c1() * theta + c2;
    const QPotentialArgs z{-1.0, 0.0, coeff_g(p, rho), pm.c1() / u};
    const double q = quantum_potential_z(p, 0.0, z, u, rho);
    CHECK(rel(q, psi_model_eval(pm, r, 0.0, 0.0).q_pot) < 1e-12);
    const RadialSolution cst = make_radial(p, RadialKind::Constant, 0.0);
    CHECK(rel(quantum_potential(p, cst, AngularFactor{0.0, pm.c1(), c2}, rho, theta), q) < 1e-12);
  }
}

TEST_CASE("quantum potential: nodes and degenerate lambda") {
  const ModelParams p = make(2.0, 0.0);
  const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, 2.0);
  CHECK_THROWS_AS(quantum_potential(p, sol, AngularFactor{2.0, 1.0, 0.0}, 0.5 * p.rho_T(), 0.0), Error);
  const RadialSolution one = make_radial(p, RadialKind::KummerPlus, 1.0);
  try {
    quantum_potential(p, one, AngularFactor{1.0, 1.0, 0.0}, 0.5 * p.rho_T(), 0.3);
    FAIL("expected DegenerateMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
  }
  const QPotentialArgs z = q_args(p, sol, AngularFactor{2.0, 1.0, 0.3}, 0.6 * p.rho_T(), 0.5);
  CHECK(z.z1 - z.z2 == doctest::Approx(3.0));
}

TEST_CASE("quantum potential: radial map closed form against the FD oracle") {
  const ModelParams p = make(2.0, 1.0);
  const double rt = p.rho_T();
  const auto q_fd = [&](double rho) {
    const double r = hill_zeta_bar(p, rho), h = 1e-3 * r;
    const auto amp = [&](double x, double y) {
      return std::sqrt(density_F(p, std::fabs(p.alpha) * invert_map_radial(p, {x, y}).rho, 1.0));
    };
    const double lap = (amp(r + h, 0) + amp(r - h, 0) + amp(r, h) + amp(r, -h) - 4 * amp(r, 0)) / (h * h);
    return p.alpha / p.beta * lap / amp(r, 0);
  };
  const double closed = quantum_potential_radial(p, 1.4 * rt) - quantum_potential_radial(p, 2.0 * rt);
  CHECK(rel(closed, q_fd(1.4 * rt) - q_fd(2.0 * rt)) < 1e-3);
}

TEST_CASE("classical potential: kinetic term and energy shift") {
  const ModelParams p = make(2.0, 0.0);
  CHECK(classical_potential_from_q(p, 2.0, 0.0) == doctest::Approx(-0.5));
  CHECK(classical_potential_from_q(p, 1.3, 0.4 + 2.5, 2.5) == doctest::Approx(classical_potential_from_q(p, 1.3, 0.4)));
  const RadialSolution sol = make_radial(p, RadialKind::KummerPlus, 2.0);
  const AngularFactor fac{2.0, 1.0, 0.0};
  const double rho = 0.6 * p.rho_T();
  CHECK(classical_potential(p, sol, fac, rho, 0.4) ==
        doctest::Approx(p.alpha * rho * rho / (4 * p.beta) - quantum_potential(p, sol, fac, rho, 0.4)));
}

TEST_CASE("vortex model: constants and normalization") {
  const PsiModel pm = psi(4.0, 6.0, 1.5);
  CHECK(pm.hbar() == doctest::Approx(1.0));
  CHECK(pm.mass() == doctest::Approx(1.0));
  CHECK(pm.c1() == doctest::Approx(-3.0));
  const double s = pm.sigma_r, c = 7.0 / 4.0;
  CHECK(rel(1.0 / pm.norm(), 2 * pi * s * s / 4.0 * std::pow(c, 0.5) * std::tgamma(1.0)) < 1e-14);
  const numerics::Fn2 f = [&](double r, double phi) { return psi_model_eval(pm, r, phi, 0.0).density; };
  CHECK(rel(numerics::quad2d_polar(f, 0.0, std::numeric_limits<double>::infinity(), 0.0, 2 * pi), 1.0) < 1e-6);
  CHECK(rel(normalization_N(pm.params, PsiModelMeasure{pm.sigma_r}), pm.norm()) < 1e-6);
  CHECK(psi_model_eval(pm, 0.0, 0.0, 0.0).density == 0.0);
  CHECK_THROWS_AS(psi(4.0, 2.0, 1.0).validate(), Error);
}

TEST_CASE("vortex model: velocity, phase and density form") {
  const PsiModel pm = psi(4.0, 6.0, 1.5);
  const double r = 0.8, phi = 1.1;
  const PsiSample s = psi_model_eval(pm, r, phi, 0.0);
  const double v = pm.sigma_r * pm.params.sigma_v / r;
  CHECK(s.vx == doctest::Approx(-v * std::sin(phi)));
  CHECK(s.vy == doctest::Approx(v * std::cos(phi)));
  CHECK(s.phase == doctest::Approx(pm.params.rho_T() * pm.sigma_r / 2 * phi));
  const double c = 7.0 / 4.0, x = std::pow(pm.sigma_r / r, 4.0);
  CHECK(rel(s.density, pm.norm() * std::pow(c, 1.5) * std::pow(pm.sigma_r / r, 6.0) * std::exp(-c * x)) < 1e-13);
  CHECK(psi_amplitude(pm, r, 0) == doctest::Approx(std::sqrt(s.density)));
  const numerics::Fn1 a = [&](double t) { return psi_amplitude(pm, t, 0); };
  CHECK(rel(psi_amplitude(pm, r, 1), numerics::fd_derivative(a, r, 1, 1e-5)) < 1e-7);
  CHECK(rel(psi_amplitude(pm, r, 2), numerics::fd_derivative(a, r, 2, 1e-4)) < 1e-5);
}

TEST_CASE("vortex model: zeros of U in the three regimes") {
  const PsiRegime want[] = {PsiRegime::TwoZeros, PsiRegime::Critical, PsiRegime::OneZero};
  for (int i = 0; i < 3; ++i) {
    const PsiModel pm = psi(4.0, 6.0, kRegimeSigma[i]);
    CHECK(pm.regime() == want[i]);
    const auto zeros = psi_model_zeros(pm);
    CHECK(zeros.size() == (i == 0 ? 2u : 1u));
    const double rt = pm.params.rho_T();
    CHECK(pm.params.n * pm.params.n + 2 * pm.params.n * pm.params.ell + rt * rt * pm.sigma_r * pm.sigma_r > 0.0);
    for (double r : zeros) {
      const PsiSample s = psi_model_eval(pm, r, 0.0, 0.0);
      CHECK(std::fabs(s.u_pot) < 1e-9 * std::max(1.0, std::fabs(s.q_pot)));
    }
  }
}

TEST_CASE("vortex model: asymptotic exponents of U") {
  const double want_exp[] = {-2.0, -6.0, -2.0};
  const double want_sign[] = {1.0, -1.0, -1.0};
  for (int i = 0; i < 3; ++i) {
    const PsiModel pm = psi(4.0, 6.0, kRegimeSigma[i]);
    const double r = 1e3 * pm.sigma_r;
    const double u1 = psi_model_eval(pm, r, 0.0, 0.0).u_pot, u2 = psi_model_eval(pm, 1.1 * r, 0.0, 0.0).u_pot;
    CHECK(u1 * want_sign[i] > 0.0);
    const double slope = std::log(std::fabs(u2 / u1)) / std::log(1.1);
    CHECK(std::fabs(slope - want_exp[i]) < 0.02 * std::fabs(want_exp[i]));
  }
}

TEST_CASE("vortex model: Schrodinger residuals") {
  for (double sr : kRegimeSigma) {
    const PsiModel pm = psi(4.0, 6.0, sr);
    for (double r : {0.3, 0.7, 1.0, 1.6, 3.0})
      for (double phi : {0.2, 2.5}) {
        CHECK(schrodinger_residual_analytic(pm, r * sr, phi, 0.0) < 1e-8);
        // inside the core f varies on ~r / (n c (sigma/r)^n); at 0.3 sigma that is
        // ~5e-4 sigma, so the fixed FD step only applies further out
        if (r >= 0.7) CHECK(schrodinger_residual_fd(pm, r * sr, phi, 0.0, 1e-4 * sr) < 1e-4);
        else CHECK(schrodinger_residual_fd(pm, r * sr, phi, 0.0, 1e-5 * sr) < 1e-4);
      }
    const double r0 = schrodinger_residual_analytic(pm, 0.9 * sr, 0.4, 0.0);
    CHECK(schrodinger_residual_analytic(pm, 0.9 * sr, 0.4, 17.0) == doctest::Approx(r0).epsilon(1e-6));
  }
}

TEST_CASE("vortex model: Hamilton-Jacobi closure") {
  // -(1/beta) d_t phase = -|v|^2 / (4 alpha beta) + U + Q, with the phase
  // advancing as -beta E t
  for (double sr : kRegimeSigma) {
    PsiModel pm = psi(4.0, 6.0, sr);
    const ModelParams& p = pm.params;
    for (double r : {0.5, 1.2, 4.0}) {
      const PsiSample s = psi_model_eval(pm, r * sr, 0.3, 0.0);
      const double v2 = s.vx * s.vx + s.vy * s.vy;
      const double rhs = -v2 / (4 * p.alpha * p.beta) + s.u_pot + s.q_pot;
      CHECK(std::fabs(rhs - pm.energy) < 1e-10 * std::max(1.0, std::fabs(s.q_pot)));
    }
  }
}

TEST_CASE("vortex model: moments and sigma_r") {
  const PsiModel pm = psi(4.0, 8.0, 1.3);
  CHECK(radial_moments(pm, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  const numerics::Fn2 rf = [&](double r, double phi) { return r * psi_model_eval(pm, r, phi, 0.0).density; };
  CHECK(rel(radial_moments(pm, 1.0), numerics::quad2d_polar(rf, 0.0, std::numeric_limits<double>::infinity(), 0.0, 2 * pi)) < 1e-6);
  const double m1 = radial_moments(pm, 1.0), m2 = radial_moments(pm, 2.0);
  CHECK(rel(psi_model_sigma_r(pm), std::sqrt(m2 - m1 * m1)) < 1e-12);
  const numerics::Fn2 r2f = [&](double r, double phi) { return r * r * psi_model_eval(pm, r, phi, 0.0).density; };
  const double q1 = numerics::quad2d_polar(rf, 0.0, std::numeric_limits<double>::infinity(), 0.0, 2 * pi);
  const double q2 = numerics::quad2d_polar(r2f, 0.0, std::numeric_limits<double>::infinity(), 0.0, 2 * pi);
  CHECK(rel(psi_model_sigma_r(psi(4.0, 6.0, 1.5)), psi_model_sigma_r(psi(4.0, 6.0, 1.5))) == 0.0);
  CHECK(rel(psi_model_sigma_r(pm), std::sqrt(q2 - q1 * q1)) < 1e-6);
  CHECK_THROWS_AS(radial_moments(pm, 6.0), Error);
}

TEST_CASE("vortex model: Bohr-Sommerfeld circulation") {
  const PsiModel pm = psi(4.0, 6.0, 1.0);  // |c1| = 2
  REQUIRE(std::fabs(pm.c1()) == doctest::Approx(2.0));
  const double h = 2 * pi * pm.hbar();
  const auto ellipse = [](double a, double b, double cx, double cy, int n) {
    std::vector<CoordPoint> pts;
    for (int i = 0; i < n; ++i) {
      const double t = 2 * pi * i / n;
      pts.push_back({cx + a * std::cos(t), cy + b * std::sin(t)});
    }
    return pts;
  };
  const double circle = bohr_sommerfeld(pm, ellipse(1.0, 1.0, 0.0, 0.0, 10000));
  CHECK(rel(circle, h / 2 * 2.0) < 1e-8);
  CHECK(rel(bohr_sommerfeld(pm, ellipse(3.0, 0.5, 0.4, -0.1, 10000)), circle) < 1e-8);
  const Circulation off = circulation(pm, ellipse(0.5, 0.5, 3.0, 0.0, 10000));
  CHECK(off.winding == 0);
  CHECK(std::fabs(off.value) < 1e-10);
  CHECK_THROWS_AS(bohr_sommerfeld(pm, ellipse(0.5, 0.5, 3.0, 0.0, 100)), Error);
}
