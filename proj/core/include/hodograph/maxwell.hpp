#pragma once

#include <functional>
#include <string_view>
#include <variant>

namespace hodograph {

/// One exact-solution family: distribution shape (n, ell), thermal scale
/// sigma_v, the Helmholtz/Planck constants alpha and beta, and the
/// integration constants c0, c1, c2. Defaults correspond to hbar = m = 1.
struct ModelParams {
  double n = 2.0;
  double ell = 0.0;
  double sigma_v = 1.0;
  double alpha = -0.5;
  double beta = 1.0;
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;

  void validate() const;

  /// Momentum radius of the parabolic circle, sigma_v / |alpha|.
  double rho_T() const;

  /// Scale parameter of the distribution, fixed by sigma_v so that the
  /// distribution mode sits at the parabolic speed.
  double sigma_nl() const;
};

enum class RegionTag { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(RegionTag tag) noexcept;

/// Relative half-width of the band classified as parabolic.
inline constexpr double kParabolicBand = 1e-12;

/// Generalized Maxwell density F(z) with normalization constant `norm`.
double density_F(const ModelParams& p, double z, double norm);

/// Velocity-space coefficient h(z) of the nonlinear phase equation.
double coeff_h(const ModelParams& p, double z);

/// g(rho) = (ell+1)(1 - (rho/rho_T)^n).
double coeff_g(const ModelParams& p, double rho);

/// Determinant of the linearized equation; always -g.
double discriminant(const ModelParams& p, double rho);

RegionTag classify(const ModelParams& p, double rho);

/// Momentum sector mapped into coordinate space. `area_element(rho, theta)`
/// must return |d(x,y)/d(rho,theta)| so that the coordinate integral becomes
/// an integral over the sector.
struct SectorMeasure {
  double rho_min, rho_max, theta_min, theta_max;
  std::function<double(double, double)> area_element;
};

/// The whole plane under the vortex model, where r = rho_T sigma_r / rho.
struct PsiModelMeasure {
  double sigma_r;
};

using DomainSpec = std::variant<SectorMeasure, PsiModelMeasure>;

/// Normalization constant making the coordinate-space density integrate to 1.
/// Throws ErrorKind::Divergence for the vortex model with ell <= 2.
double normalization_N(const ModelParams& p, const DomainSpec& domain, double tol = 1e-11);

}  // namespace hodograph
