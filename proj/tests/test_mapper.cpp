#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hodograph/error.hpp"
#include "hodograph/mapper.hpp"
#include "hodograph/momentum.hpp"
#include "hodograph/numerics.hpp"
#include "hodograph/verifier.hpp"

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

struct Fixture {
  ModelParams p;
  RadialSolution sol;
  AngularFactor fac;
};

Fixture fixture(double n, double ell, double lambda, double c1 = 1.0, double c2 = 0.0,
                RadialKind kind = RadialKind::KummerPlus) {
  const ModelParams p = make(n, ell);
  return {p, make_radial(p, kind, lambda), AngularFactor{lambda, c1, c2}};
}

// (Phi_x, Phi_y) from FD derivatives of x, y, Phi in (rho, theta) and the chain rule.
std::pair<double, double> gradient_by_chain(const std::function<MapPoint(double, double)>& map, double rho,
                                            double theta) {
  const double hr = 1e-5 * rho, ht = 1e-5;
  const MapPoint rp = map(rho + hr, theta), rm = map(rho - hr, theta);
  const MapPoint tp = map(rho, theta + ht), tm = map(rho, theta - ht);
  const double xr = (rp.x - rm.x) / (2 * hr), yr = (rp.y - rm.y) / (2 * hr), fr = (rp.phi_val - rm.phi_val) / (2 * hr);
  const double xt = (tp.x - tm.x) / (2 * ht), yt = (tp.y - tm.y) / (2 * ht), ft = (tp.phi_val - tm.phi_val) / (2 * ht);
  const double det = xr * yt - xt * yr;
  return {(fr * yt - ft * yr) / det, (xr * ft - xt * fr) / det};
}

}  // namespace

TEST_CASE("script R: lambda = 1, small tau and FD oracle") {
  for (double ell : {0.0, 2.0, 3.5}) {
    const auto f = fixture(2.0, ell, 1.0);
    for (double r : {0.1, 0.9, 2.0}) CHECK(script_R(f.p, f.sol, r * f.p.rho_T()) == doctest::Approx(1.0).epsilon(1e-14));
  }
  const auto f = fixture(2.0, 0.0, 2.0);
  CHECK(script_R(f.p, f.sol, 1e-7 * f.p.rho_T()) == doctest::Approx(f.sol.nu).epsilon(1e-10));
  const double rho = 0.5 * f.p.rho_T();
  const numerics::Fn1 R = [&](double r) { return radial_kummer(f.p, f.sol, r); };
  const double fd = rho * numerics::fd_derivative(R, rho, 1, numerics::fd_step(1, rho)) / R(rho);
  CHECK(rel(script_R(f.p, f.sol, rho), fd) < 1e-6);
  const auto t = fixture(2.0, 0.7, 1.6, 1.0, 0.0, RadialKind::TricomiPlus);
  const double rho_t = 1.3 * t.p.rho_T();
  const numerics::Fn1 Rt = [&](double r) { return radial_kummer(t.p, t.sol, r); };
  CHECK(rel(script_R(t.p, t.sol, rho_t), rho_t * numerics::fd_derivative(Rt, rho_t, 1, numerics::fd_step(1, rho_t)) / Rt(rho_t)) < 1e-6);
}

TEST_CASE("forward map: explicit form u / rho * rotation * (script R, Upsilon)") {
  const auto f = fixture(2.0, 0.0, 2.0, 1.0, 0.3);
  const double rho = 0.7 * f.p.rho_T(), theta = 0.4;
  const MapPoint m = forward_map(f.p, f.sol, f.fac, rho, theta);
  const double u = factorized_u(f.p, f.sol, f.fac, rho, theta);
  const double sr = script_R(f.p, f.sol, rho), up = angular_logderiv(f.fac, theta);
  CHECK(rel(m.x, u / rho * (std::cos(theta) * sr - std::sin(theta) * up)) < 1e-12);
  CHECK(rel(m.y, u / rho * (std::sin(theta) * sr + std::cos(theta) * up)) < 1e-12);
  CHECK(rel(m.phi_val, u * (sr - 1.0)) < 1e-12);
  CHECK(m.region == RegionTag::Elliptic);
}

TEST_CASE("forward map: Jacobian vanishes at the parabolic circle where Theta' = 0") {
  const auto f = fixture(2.0, 0.0, 2.0, 0.8, 0.5);
  for (int j = -1; j <= 1; ++j) {
    const double te = angular_extremum(f.fac, j);
    const double scale = jacobian_scale(f.p, f.sol, f.fac, f.p.rho_T(), te);
    CHECK(std::fabs(jacobian_inverse(f.p, f.sol, f.fac, f.p.rho_T(), te)) <= kDegenerateJacobian * scale);
  }
  CHECK(std::fabs(jacobian_inverse(f.p, f.sol, f.fac, 1.2 * f.p.rho_T(), 0.1)) > 1e-6);
}

TEST_CASE("forward map: lambda = 1 has identically zero Jacobian and is rejected") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(0.05, 3.0), ut(-pi, pi);
  for (double ell : {0.0, 2.0}) {
    const auto f = fixture(2.0, ell, 1.0, 1.0, 0.4);
    for (int i = 0; i < 100; ++i) {
      const double rho = ur(rng) * f.p.rho_T(), theta = ut(rng);
      CHECK(std::fabs(jacobian_inverse(f.p, f.sol, f.fac, rho, theta)) < 1e-12);
    }
    try {
      forward_map(f.p, f.sol, f.fac, f.p.rho_T(), 0.2);
      FAIL("expected DegenerateMap");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateMap);
      CHECK(std::string(e.what()).find("inverse Legendre transform is not possible") != std::string::npos);
    }
  }
}

TEST_CASE("forward map: Legendre gradient consistency") {
  for (const auto& f : {fixture(2.0, 0.0, 2.0), fixture(2.0, 4.0, 3.0, 1.0, 0.2), fixture(3.0, 0.5, 1.7, 0.6, 1.0)}) {
    for (double r : {0.5, 1.5}) {
      const double rho = r * f.p.rho_T(), theta = 0.2;
      const auto map = [&](double a, double b) { return forward_map(f.p, f.sol, f.fac, a, b); };
      const auto [gx, gy] = gradient_by_chain(map, rho, theta);
      CHECK(std::hypot(gx - rho * std::cos(theta), gy - rho * std::sin(theta)) / rho < 1e-4);
    }
  }
}

TEST_CASE("forward map: Jacobian against the Cartesian Hessian of u and the FD map") {
  for (const auto& f : {fixture(2.0, 0.0, 2.0), fixture(2.0, 4.0, 3.0, 1.0, 0.2), fixture(2.0, 0.5, 1.7, 0.6, 1.0),
                        fixture(2.0, 1.0, 0.0, 1.0, 2.0)}) {
    for (double r : {0.6, 1.4}) {
      const double rho = r * f.p.rho_T(), theta = 0.35;
      const double xi = rho * std::cos(theta), eta = rho * std::sin(theta);
      const numerics::Fn2 u = [&](double a, double b) {
        return factorized_u(f.p, f.sol, f.fac, std::hypot(a, b), std::atan2(b, a));
      };
      const auto d = numerics::fd_partials(u, xi, eta, 1e-3 * rho, 1e-3 * rho);
      const double hess = d.fxx * d.fyy - d.fxy * d.fxy;
      const double j = jacobian_inverse(f.p, f.sol, f.fac, rho, theta);
      CHECK(rel(j, hess) < 1e-4);
      const MapDifferential md = map_differential(f.p, f.sol, f.fac, rho, theta);
      CHECK(rel((md.x_rho * md.y_theta - md.x_theta * md.y_rho) / rho, j) < 1e-10);
    }
  }
}

TEST_CASE("forward map: analytic differential against FD") {
  const auto f = fixture(2.0, 0.5, 1.7, 0.6, 1.0);
  const double rho = 0.8 * f.p.rho_T(), theta = 0.9;
  const MapDifferential md = map_differential(f.p, f.sol, f.fac, rho, theta);
  const numerics::Fn1 xr = [&](double r) { return forward_map(f.p, f.sol, f.fac, r, theta).x; };
  const numerics::Fn1 yt = [&](double t) { return forward_map(f.p, f.sol, f.fac, rho, t).y; };
  CHECK(rel(md.x_rho, numerics::fd_derivative(xr, rho, 1, 1e-5 * rho)) < 1e-7);
  CHECK(rel(md.y_theta, numerics::fd_derivative(yt, theta, 1, 1e-5)) < 1e-7);
}

TEST_CASE("radial map: minimum radius, velocity lock and gradient") {
  for (double ell : {0.0, 2.0, 0.5}) {
    const ModelParams p = make(2.0, ell);
    CHECK(hill_zeta_bar(p, p.rho_T()) == doctest::Approx(std::exp((ell + 1.0) / p.n)).epsilon(1e-14));
    for (double r : {1.2, 1.9, 2.6}) {
      const MapPoint m = forward_map_radial(p, r * p.rho_T(), 0.7);
      const MomentumPoint back = invert_map_radial(p, {m.x, m.y});
      CHECK(rel(back.rho, r * p.rho_T()) < 1e-12);
      CHECK(back.theta == doctest::Approx(0.7));
      CHECK(m.jac_inv > 0.0);
      const auto map = [&](double a, double b) { return forward_map_radial(p, a, b); };
      const auto [gx, gy] = gradient_by_chain(map, r * p.rho_T(), 0.7);
      CHECK(std::hypot(gx - r * p.rho_T() * std::cos(0.7), gy - r * p.rho_T() * std::sin(0.7)) / (r * p.rho_T()) < 1e-4);
    }
    CHECK_THROWS_AS(forward_map_radial(p, 0.9 * p.rho_T(), 0.0), Error);
  }
}

TEST_CASE("invert map: roundtrip and rejection of foreign targets") {
  const auto f = fixture(2.0, 0.0, 2.0);
  for (double r : {0.4, 0.8, 1.6, 2.2})
    for (double t : {0.15, 0.5, 1.2}) {
      const double rho = r * f.p.rho_T();
      const MapPoint m = forward_map(f.p, f.sol, f.fac, rho, t);
      const MomentumPoint back = invert_map(f.p, f.sol, f.fac, {m.x, m.y}, {rho * 1.02, t - 0.02});
      CHECK(std::fabs(back.rho - rho) < 1e-10 * rho);
      CHECK(std::fabs(back.theta - t) < 1e-10);
    }
  // a hyperbolic image point seeded from the elliptic leaf: either a fold is
  // reported or the answer is a genuine preimage on the seed's side
  const MapPoint far = forward_map(f.p, f.sol, f.fac, 2.0 * f.p.rho_T(), 0.4);
  const MomentumPoint seed{0.5 * f.p.rho_T(), 0.4};
  REQUIRE(far.jac_inv * forward_map(f.p, f.sol, f.fac, seed.rho, seed.theta).jac_inv < 0.0);
  try {
    const MomentumPoint got = invert_map(f.p, f.sol, f.fac, {far.x, far.y}, seed);
    const MapPoint m = forward_map(f.p, f.sol, f.fac, got.rho, got.theta);
    CHECK(std::hypot(m.x - far.x, m.y - far.y) < 1e-9 * std::hypot(far.x, far.y));
    CHECK(m.jac_inv * forward_map(f.p, f.sol, f.fac, seed.rho, seed.theta).jac_inv > 0.0);
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::FoldDetected || e.kind() == ErrorKind::NoConvergence));
  }
  try {
    invert_map(f.p, f.sol, f.fac, {1e9, -3e9}, {0.5 * f.p.rho_T(), 0.4});
    FAIL("expected a fold or no convergence");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::FoldDetected || e.kind() == ErrorKind::NoConvergence));
  }
}

TEST_CASE("sample fields: hyperbolic reference sector") {
  const auto f = fixture(2.0, 0.0, 2.0);
  const double rt = f.p.rho_T();
  const SectorDomain d{1.8 * rt, 2.4 * rt, 0.0, 12.0 * pi / 180.0};
  const double norm = 1.0;
  const auto s = sample_fields(f.p, {f.sol, f.fac}, d, 7, 5, norm);
  REQUIRE(s.size() == 35);
  const double sv = f.p.sigma_v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& x = s[i];
    CHECK(x.speed >= 1.8 * sv * (1 - 1e-14));
    CHECK(x.speed <= 2.4 * sv * (1 + 1e-14));
    CHECK(x.vx == doctest::Approx(-f.p.alpha * x.rho * std::cos(x.theta)));
    CHECK(x.speed == doctest::Approx(std::hypot(x.vx, x.vy)));
    CHECK(x.density == doctest::Approx(density_F(f.p, x.speed, norm)));
    const double dir = std::atan2(x.vy, x.vx);
    CHECK(dir >= d.theta_min - 1e-14);
    CHECK(dir <= d.theta_max + 1e-14);
    CHECK(x.region == RegionTag::Hyperbolic);
    if (i >= 5) CHECK(x.density < s[i - 5].density);
  }
  // row-major over rho
  CHECK(s[1].rho == s[0].rho);
  CHECK(s[5].rho > s[0].rho);
}

TEST_CASE("sample fields: elliptic disk speeds stay below sigma_v") {
  const auto f = fixture(2.0, 0.0, 2.0);
  const auto s = sample_fields(f.p, {f.sol, f.fac}, SectorDomain{0.05 * f.p.rho_T(), 0.99 * f.p.rho_T(), 0.0, 2 * pi}, 9, 17, 1.0);
  std::size_t nodes = 0;
  for (const auto& x : s) {
    CHECK(x.speed < f.p.sigma_v);
    CHECK(x.region == RegionTag::Elliptic);
    if (x.flag == SampleFlag::Node) {
      ++nodes;
      CHECK(std::isnan(x.q_pot));
    }
  }
  CHECK(nodes > 0);  // theta = 0, pi/2, ... are nodal lines of sin 2 theta
}

TEST_CASE("sample fields: degenerate corner and lambda = 1") {
  const auto f = fixture(2.0, 0.0, 2.0);
  const double rt = f.p.rho_T();
  const auto s = sample_fields(f.p, {f.sol, f.fac}, SectorDomain{rt, 1.5 * rt, 0.0, pi / 2}, 3, 3, 1.0);
  const auto& corner = s[1];
  CHECK(corner.rho == rt);
  CHECK(corner.theta == doctest::Approx(pi / 4));
  CHECK(corner.flag == SampleFlag::Degenerate);
  CHECK(corner.jac_inv == 0.0);
  CHECK(s[4].flag == SampleFlag::Ok);
  const auto one = fixture(2.0, 0.0, 1.0);
  CHECK_THROWS_AS(sample_fields(one.p, {one.sol, one.fac}, SectorDomain{0.2, 1.0, 0.0, 1.0}, 3, 3, 1.0), Error);
}

TEST_CASE("sample fields: univalence check") {
  const auto f = fixture(2.0, 0.0, 2.0);
  const double rt = f.p.rho_T();
  CHECK(is_univalent(sample_fields(f.p, {f.sol, f.fac}, SectorDomain{1.95 * rt, 2.4 * rt, 0.0, 0.2}, 5, 5, 1.0)));
  // with c1 = 1, c2 = 0 the fold J^-1 = 0 cuts the corner of the 12 degree sector
  CHECK_FALSE(is_univalent(sample_fields(f.p, {f.sol, f.fac}, SectorDomain{1.8 * rt, 2.4 * rt, 0.0, 12.0 * pi / 180.0}, 7, 5, 1.0)));
  CHECK_FALSE(is_univalent(sample_fields(f.p, {f.sol, f.fac}, SectorDomain{0.5 * rt, 2.4 * rt, 0.05, 0.2}, 5, 5, 1.0)));
}

TEST_CASE("coordinate-space phase equation on mapped charts") {
  const auto f = fixture(2.0, 0.0, 2.0);
  const double rt = f.p.rho_T();
  for (const SectorDomain d : {SectorDomain{1.85 * rt, 2.35 * rt, 0.03, 0.18}, SectorDomain{0.4 * rt, 0.8 * rt, 0.3, 0.7}}) {
    std::vector<std::pair<CoordPoint, MomentumPoint>> seeds;
    std::vector<CoordPoint> centres;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        const double rho = d.rho_min + (d.rho_max - d.rho_min) * i / 4.0;
        const double t = d.theta_min + (d.theta_max - d.theta_min) * j / 4.0;
        const MapPoint m = forward_map(f.p, f.sol, f.fac, rho, t);
        seeds.push_back({{m.x, m.y}, {rho, t}});
        if (i > 0 && i < 4 && j > 0 && j < 4) centres.push_back({m.x, m.y});
      }
    const auto phi = mapped_phi(f.p, {f.sol, f.fac}, seeds);
    const auto rep = pde_residual_coordinate(f.p, phi, centres, 1e-3, 1e-3);
    CHECK(rep.pass);
    CHECK(rep.max_rel() < 1e-3);
  }
}

TEST_CASE("coordinate-space phase equation on local charts of the reference sectors") {
  struct Case { double ell, lambda, r1, r2, deg; };
  for (const Case c : {Case{0.0, 2.0, 1.8, 2.4, 12.0}, Case{4.0, 3.0, 1.5, 1.89, 15.0}, Case{2.0, 4.0, 1.45, 1.75, 12.0}}) {
    const auto f = fixture(2.0, c.ell, c.lambda, 0.0, 1.0);
    const double rt = f.p.rho_T(), tm = c.deg * pi / 180.0;
    const SectorDomain d{c.r1 * rt, c.r2 * rt, -tm, tm};
    const auto run = [&](double h) { return pde_residual_mapped(f.p, {f.sol, f.fac}, d, 8, 8, h, 1e-3); };
    const auto rep = hsweep("sector", run, 1e-4);
    CHECK_MESSAGE(rep.pass, "lambda=" << c.lambda << " max_rel=" << rep.max_rel() << " " << rep.grid_spec);
  }
  const auto disk = fixture(2.0, 0.0, 2.0, 0.0, 1.0);
  const SectorDomain dd{0.1 * disk.p.rho_T(), 0.95 * disk.p.rho_T(), -pi, pi};
  CHECK(pde_residual_mapped(disk.p, {disk.sol, disk.fac}, dd, 8, 16, 1e-3, 1e-3).pass);
  ModelParams p;
  const SectorDomain rd{1.1 * p.rho_T(), 2.5 * p.rho_T(), -pi, pi};
  CHECK(pde_residual_mapped(p, {RadialSolution{}, AngularFactor{}, true}, rd, 6, 6, 1e-3, 1e-3).pass);
}
