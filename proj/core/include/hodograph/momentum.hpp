#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hodograph/maxwell.hpp"
#include "hodograph/specfun.hpp"

namespace hodograph {

// ---------------------------------------------------------------------------
// Characteristics of the mixed-type momentum equation

enum class CharacteristicKind { HyperbolicPlus, HyperbolicMinus, EllipticPlus, EllipticMinus };

std::string_view to_string(CharacteristicKind kind) noexcept;

/// Radii below rho_floor * rho_T saturate elliptic characteristics.
inline constexpr double kRhoFloor = 1e-6;

struct CharacteristicValue {
  double value;
  bool saturated;  // evaluated at the floor radius instead of rho
};

CharacteristicValue characteristic_chi(const ModelParams& p, CharacteristicKind kind, double rho,
                                       double theta);

/// Tangent of the characteristic inclination, rho / sqrt(|Delta|); +inf on
/// the parabolic circle.
double slope_rho_theta(const ModelParams& p, double rho);

enum class Branch { Elliptic, Hyperbolic };

/// Coefficient of the first-order term in the canonical form.
double canonical_kappa(const ModelParams& p, double rho, Branch branch);

// ---------------------------------------------------------------------------
// Hill substitution and the angle-free hyperbolic solution

/// Largest (rho/rho_T)^n admitted by the power-series branches.
inline constexpr double kSeriesArgMax = 50.0;

/// Tolerance of the integer test ell/n = k selecting the recurrence branches.
inline constexpr double kIntegerBranchTol = 1e-9;

/// Returns k when ell = n k for a non-negative integer k.
std::optional<int> integer_branch(const ModelParams& p);

/// zeta(rho); its derivative is zeta_bar(rho).
double hill_substitution_zeta(const ModelParams& p, double rho,
                              const specfun::SeriesControl& ctl = {});

/// zeta_bar(rho) = c0 (rho_T/rho)^(ell+1) exp((ell+1)/n (rho/rho_T)^n).
double hill_zeta_bar(const ModelParams& p, double rho);

/// Variable frequency G of the Hill equation; positive in the hyperbolic
/// region, negative in the elliptic region.
double hill_coefficient_G(const ModelParams& p, double lambda, double rho);

/// Radial-only hyperbolic solution Omega_bar(rho), rho > rho_T.
double hyperbolic_omega(const ModelParams& p, double rho, const specfun::SeriesControl& ctl = {});

/// d Omega_bar / d rho.
double hyperbolic_omega_derivative(const ModelParams& p, double rho);

/// Half-sum of the hyperbolic characteristics; depends on rho only.
double mu_plus(const ModelParams& p, double rho);

// ---------------------------------------------------------------------------
// Separated solutions u = R(rho) Theta(theta)

/// Roots nu(-), nu(+) of nu^2 + ell nu - lambda^2 (ell+1) = 0.
std::pair<double, double> nu_roots(double ell, double lambda);

enum class RadialKind { KummerPlus, KummerMinus, TricomiPlus, TricomiMinus, HyperbolicOmega, Constant };

std::string_view to_string(RadialKind kind) noexcept;

struct RadialSolution {
  RadialKind kind = RadialKind::KummerPlus;
  double lambda = 0.0;
  double nu = 0.0;
  double a = 0.0;
  double b = 0.0;
  /// Degree k when a = -k on the KummerPlus branch: R is then evaluated as
  /// (-1)^k rho_bar^nu L_k^(b-1)(tau). -1 otherwise.
  int laguerre_k = -1;
  /// Value of R for the Constant kind.
  double constant = 1.0;
};

/// Builds the radial solution of the given kind. When a lies within 1e-12 of
/// a non-positive integer -k it is snapped to -k and nu to lambda^2 - n k, so
/// the polynomial cases are exact. HyperbolicOmega and Constant require
/// lambda = 0.
RadialSolution make_radial(const ModelParams& p, RadialKind kind, double lambda);

/// R(rho) for the Kummer and Tricomi kinds.
double radial_kummer(const ModelParams& p, const RadialSolution& sol, double rho,
                     const specfun::SeriesControl& ctl = {});

struct RadialDerivs {
  double R, dR, d2R;  // derivatives with respect to rho
};

/// R, R', R'' for any kind, with analytic derivatives.
RadialDerivs radial_derivs(const ModelParams& p, const RadialSolution& sol, double rho,
                           const specfun::SeriesControl& ctl = {});

struct AngularFactor {
  double lambda = 0.0;
  double c1 = 1.0;
  double c2 = 0.0;

  void validate() const;
};

double angular_theta(const AngularFactor& fac, double theta);
double angular_theta_derivative(const AngularFactor& fac, double theta, int order);

/// Upsilon = Theta'/Theta. Throws ErrorKind::Node where Theta vanishes.
double angular_logderiv(const AngularFactor& fac, double theta);

/// Extremum angle (pi/2 + pi j - theta0)/lambda, tan(theta0) = c2/c1.
double angular_extremum(const AngularFactor& fac, int j);

double factorized_u(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                    double rho, double theta, const specfun::SeriesControl& ctl = {});

// ---------------------------------------------------------------------------
// Polynomial (Laguerre) cases

struct LaguerreCase {
  double lambda;
  int k;
  double n;
  double ell;
  double alpha_bar;
};

/// For each lambda (in order) all k with ell = ((lambda^2 - kn)^2 - lambda^2)/(kn),
/// kn <= lambda sqrt(lambda^2 - 1), -1 < ell <= ell_max and alpha_bar != 0,
/// plus the k = 0 family at lambda = 1, where every ell qualifies: that row
/// carries ell = alpha_bar = NaN (alpha_bar = (2 + ell)/n for the chosen ell).
std::vector<LaguerreCase> laguerre_enumerate(double n, const std::vector<double>& lambdas,
                                             double ell_max);

/// Fixed-ell variant: every (lambda, k), 0 <= k <= k_max, for which the radial
/// factor is a Laguerre polynomial. Ordered by k, then lambda.
std::vector<LaguerreCase> laguerre_enumerate_fixed_ell(double n, double ell, int k_max);

}  // namespace hodograph
