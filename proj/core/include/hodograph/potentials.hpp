#pragma once

#include <string_view>
#include <vector>

#include "hodograph/mapper.hpp"
#include "hodograph/maxwell.hpp"
#include "hodograph/momentum.hpp"

namespace hodograph {

/// Reduced arguments of the quantum potential at one momentum point:
/// z1 = scriptR - 1, z2 = scriptR - lambda^2, z3 = g(rho), z4 = Theta'/Theta.
struct QPotentialArgs {
  double z1, z2, z3, z4;
};

QPotentialArgs q_args(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                      double rho, double theta);

/// Closed-form quantum potential from reduced arguments, amplitude u = R Theta
/// and momentum radius rho.
double quantum_potential_z(const ModelParams& p, double lambda, const QPotentialArgs& z, double u,
                           double rho);

/// Quantum potential of the mapped solution at the image of (rho, theta).
/// Throws ErrorKind::Node where u vanishes and ErrorKind::DegenerateMap for
/// lambda = 1.
double quantum_potential(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                         double rho, double theta);

/// Quantum potential for the angle-free hyperbolic map (forward_map_radial).
double quantum_potential_radial(const ModelParams& p, double rho);

/// U = |v|^2 / (4 alpha beta) - Q + E with |v| = |alpha| rho.
double classical_potential_from_q(const ModelParams& p, double rho, double q, double energy = 0.0);

double classical_potential(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                           double rho, double theta, double energy = 0.0);

// ---------------------------------------------------------------------------
// Vortex (Psi) model: lambda = 0, constant radial factor

enum class PsiRegime { TwoZeros, Critical, OneZero };

std::string_view to_string(PsiRegime regime) noexcept;

struct PsiModel {
  ModelParams params;   // n, ell, sigma_v, alpha, beta
  double sigma_r = 1.0;  // characteristic coordinate length
  double energy = 0.0;

  void validate() const;
  double hbar() const;
  double mass() const;
  /// Integration constant of the angular factor, -rho_T sigma_r.
  double c1() const;
  /// Normalization constant from its closed form.
  double norm() const;
  /// Sign of rho_T^2 sigma_r^2 - ell^2 (critical within 1e-12 relative).
  PsiRegime regime() const;
};

struct PsiSample {
  double density, phase, q_pot, u_pot, vx, vy;
};

PsiSample psi_model_eval(const PsiModel& pm, double r, double phi, double t);

/// Zeros of U in increasing order (two, one or one root depending on regime).
std::vector<double> psi_model_zeros(const PsiModel& pm);

/// d^order/dr^order of the amplitude sqrt(f), order 0..2.
double psi_amplitude(const PsiModel& pm, double r, int order);

/// Integral of r^s f over the plane, from its closed form. Throws
/// ErrorKind::Divergence when ell <= s + 2.
double radial_moments(const PsiModel& pm, double s);

/// Standard deviation of r from its closed form (needs ell > 4).
double psi_model_sigma_r(const PsiModel& pm);

/// Relative residual of the time-dependent Schrodinger equation at (r, phi, t)
/// using analytic derivatives of the amplitude.
double schrodinger_residual_analytic(const PsiModel& pm, double r, double phi, double t);

/// Same residual with a five-point Cartesian finite-difference Laplacian of
/// the complex wavefunction, step h.
double schrodinger_residual_fd(const PsiModel& pm, double r, double phi, double t, double h);

struct Circulation {
  double value;  // line integral of the mean momentum along the contour
  int winding;   // winding number of the contour about the origin
};

/// Line integral of m <v> along a closed polyline (last vertex joins first),
/// by 5-point Gauss-Legendre quadrature on every segment.
Circulation circulation(const PsiModel& pm, const std::vector<CoordPoint>& contour);

/// Circulation of a contour that winds once around the origin; equals
/// pi hbar |c1|. Throws ErrorKind::Winding otherwise.
double bohr_sommerfeld(const PsiModel& pm, const std::vector<CoordPoint>& contour);

}  // namespace hodograph
