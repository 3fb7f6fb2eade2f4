#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hodograph/error.hpp"
#include "hodograph/maxwell.hpp"
#include "hodograph/numerics.hpp"
#include "hodograph/specfun.hpp"

using namespace hodograph;

namespace {

ModelParams make(double n, double ell) {
  ModelParams p;
  p.n = n;
  p.ell = ell;
  return p;
}

}  // namespace

TEST_CASE("density: Gaussian case") {
  const ModelParams p = make(2.0, 0.0);
  CHECK(density_F(p, 0.0, 3.0) == 3.0);
  const double s = p.sigma_nl();
  for (double z : {0.2, 1.0, 2.5}) CHECK(density_F(p, z, 1.0) == doctest::Approx(std::exp(-z * z / (2 * s * s))));
}

TEST_CASE("density: mode where the log-derivative vanishes") {
  const ModelParams p = make(3.0, 2.0);
  const double s = p.sigma_nl();
  const double zstar = s * std::numbers::sqrt2 * std::pow(p.ell / p.n, 1.0 / p.n);
  const numerics::Fn1 f = [&](double z) { return density_F(p, z, 1.0); };
  const double d = numerics::fd_derivative(f, zstar, 1, 1e-6);
  CHECK(std::fabs(d) < 1e-8);
  CHECK(f(zstar) > f(0.9 * zstar));
  CHECK(f(zstar) > f(1.1 * zstar));
}

TEST_CASE("density: integral over speed") {
  const ModelParams p = make(2.0, 2.0);
  const double norm = 1.7;
  const numerics::Fn1 f = [&](double z) { return density_F(p, z, norm); };
  const double want = norm / p.n * specfun::gamma((p.ell + 1.0) / p.n) * p.sigma_nl() * std::numbers::sqrt2;
  CHECK(numerics::adaptive_quad_inf(f, 0.0, {1e-12, 4000}) == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("density: singular origin for negative ell") {
  CHECK_THROWS_AS(density_F(make(2.0, -0.5), 0.0, 1.0), Error);
}

TEST_CASE("h coefficient: parabolic locus, sign and momentum form") {
  const ModelParams p = make(2.0, 2.0);
  const double rt = p.rho_T();
  // g = 1 + rho^2 h(|alpha| rho) vanishes at rho_T
  CHECK(1.0 + rt * rt * coeff_h(p, std::fabs(p.alpha) * rt) == doctest::Approx(0.0).epsilon(1e-14));
  const ModelParams p0 = make(2.0, 0.0);
  for (double z : {0.01, 0.5, 3.0}) CHECK(coeff_h(p0, z) < 0.0);
  const double rho = 1.3 * rt;
  const double s = p.sigma_nl();
  const double hbar = p.ell / (rho * rho) -
                      p.n * std::pow(std::fabs(p.alpha), p.n) * std::pow(rho, p.n - 2.0) / (std::pow(s, p.n) * std::pow(2.0, p.n / 2.0));
  CHECK(coeff_h(p, std::fabs(p.alpha) * rho) == doctest::Approx(hbar).epsilon(1e-12));
  CHECK_THROWS_AS(coeff_h(p, 0.0), Error);
}

TEST_CASE("g coefficient: zeros, limits and determinant form") {
  for (double n : {1.0, 2.0, 3.5}) {
    const ModelParams p = make(n, 1.5);
    const double rt = p.rho_T();
    CHECK(coeff_g(p, rt) == doctest::Approx(0.0));
    CHECK(coeff_g(p, 1e-9 * rt) == doctest::Approx(p.ell + 1.0));
    const double d = discriminant(p, 2.0 * rt);
    CHECK(d == doctest::Approx((p.ell + 1.0) * (std::pow(2.0, n) - 1.0)).epsilon(1e-13));
    const double s = p.sigma_nl();
    const double direct = n * std::pow(std::fabs(p.alpha) * 2.0 * rt, n) / (std::pow(s, n) * std::pow(2.0, n / 2.0)) - 1.0 - p.ell;
    CHECK(d == doctest::Approx(direct).epsilon(1e-12));
    for (double r : {0.3, 1.0, 2.2}) CHECK(coeff_g(p, r * rt) == -discriminant(p, r * rt));
  }
}

TEST_CASE("g coefficient: rho g' identity") {
  const ModelParams p = make(2.5, 0.7);
  const numerics::Fn1 g = [&](double r) { return coeff_g(p, r); };
  for (double r : {0.4, 1.1, 2.7}) {
    const double rho = r * p.rho_T();
    const double lhs = rho * numerics::fd_derivative(g, rho, 1, 1e-6 * rho);
    const double rhs = p.n * (coeff_g(p, rho) - 1.0 - p.ell);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
  }
}

TEST_CASE("classification by momentum radius") {
  const ModelParams p = make(2.0, 2.0);
  const double rt = p.rho_T();
  CHECK(classify(p, rt) == RegionTag::Parabolic);
  CHECK(classify(p, 0.5 * rt) == RegionTag::Elliptic);
  CHECK(classify(p, 2.0 * rt) == RegionTag::Hyperbolic);
  RegionTag prev = RegionTag::Elliptic;
  for (double r = 0.01; r < 3.0; r += 0.0137) {
    const RegionTag t = classify(p, r * rt);
    CHECK(static_cast<int>(t) >= static_cast<int>(prev));
    prev = t;
  }
  CHECK(std::fabs(p.alpha) * rt == p.sigma_v);
}

TEST_CASE("normalization: vortex model closed form") {
  const ModelParams p = make(4.0, 6.0);
  const double sr = 0.8;
  const double want = 1.0 / (2.0 * std::numbers::pi * sr * sr / p.n * std::pow((p.ell + 1.0) / p.n, 2.0 / p.n) *
                             specfun::gamma((p.ell - 2.0) / p.n));
  CHECK(normalization_N(p, PsiModelMeasure{sr}) == doctest::Approx(want).epsilon(1e-6));
  CHECK_THROWS_AS(normalization_N(make(4.0, 2.0), PsiModelMeasure{sr}), Error);
}

TEST_CASE("normalization: linear in N and sector quadrature") {
  const ModelParams p = make(2.0, 0.0);
  CHECK(density_F(p, 0.7, 2.0) == 2.0 * density_F(p, 0.7, 1.0));
  const double rt = p.rho_T();
  SectorMeasure unit{0.5 * rt, 1.5 * rt, 0.0, 0.3, [](double, double) { return 1.0; }};
  // With a unit area element the mass is 0.3 * integral of F(|alpha| rho) d rho.
  const numerics::Fn1 f = [&](double r) { return density_F(p, std::fabs(p.alpha) * r, 1.0); };
  const double mass = 0.3 * numerics::adaptive_quad(f, 0.5 * rt, 1.5 * rt);
  CHECK(normalization_N(p, unit) == doctest::Approx(1.0 / mass).epsilon(1e-10));
}
