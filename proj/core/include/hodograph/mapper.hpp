#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hodograph/maxwell.hpp"
#include "hodograph/momentum.hpp"

namespace hodograph {

struct MomentumPoint {
  double rho, theta;
};

struct CoordPoint {
  double x, y;
};

/// Image of one momentum point under the inverse Legendre transform.
struct MapPoint {
  double rho, theta;
  double x, y;
  double phi_val;  // phase Phi at (x, y)
  double jac_inv;  // det d(x,y)/d(xi,eta)
  RegionTag region;
};

/// rho R'(rho) / R(rho). Throws ErrorKind::Node where R vanishes.
double script_R(const ModelParams& p, const RadialSolution& sol, double rho);

/// True when lambda is 1 to within 1e-12; the map then collapses.
bool is_degenerate_lambda(double lambda);

/// Inverse Jacobian of the map, in the form that stays finite on the nodal
/// lines of u. Valid for every lambda, including the degenerate lambda = 1.
double jacobian_inverse(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                        double rho, double theta);

/// Magnitude the inverse Jacobian would have with g and Theta' at their
/// ceilings; |J^-1| below kDegenerateJacobian times this is a degenerate point.
double jacobian_scale(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                      double rho, double theta);

inline constexpr double kDegenerateJacobian = 1e-12;

/// Forward map (rho, theta) -> (x, y). Throws ErrorKind::DegenerateMap for
/// lambda = 1.
MapPoint forward_map(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                     double rho, double theta);

/// Partial derivatives of (x, y) with respect to (rho, theta).
struct MapDifferential {
  double x_rho, x_theta, y_rho, y_theta;
};

MapDifferential map_differential(const ModelParams& p, const RadialSolution& sol,
                                 const AngularFactor& fac, double rho, double theta);

/// Angle-free hyperbolic solution mapped to r = zeta_bar(rho), phi = theta.
/// The amplitude of Omega_bar is fixed so that Omega_bar' = zeta_bar, which
/// makes the pair a Legendre transform; p.c1 is ignored.
MapPoint forward_map_radial(const ModelParams& p, double rho, double theta);

/// Parameters of the Omega_bar solution used by forward_map_radial.
ModelParams radial_map_params(const ModelParams& p);

struct InvertOptions {
  int max_iter = 50;
  double tol = 1e-10;  // relative to max(1, |target|)
  int polish = 2;      // extra Newton steps after convergence, kept only if they help
};

/// Newton inversion of the forward map from a seed on the same leaf.
/// Throws ErrorKind::FoldDetected if the Jacobian changes sign along the path
/// and ErrorKind::NoConvergence after max_iter iterations.
MomentumPoint invert_map(const ModelParams& p, const RadialSolution& sol, const AngularFactor& fac,
                         CoordPoint target, MomentumPoint seed, const InvertOptions& opt = {});

/// Inverse of forward_map_radial: rho from the monotone relation
/// r = zeta_bar(rho) on (rho_T, inf), theta = atan2(y, x).
MomentumPoint invert_map_radial(const ModelParams& p, CoordPoint target);

struct SectorDomain {
  double rho_min, rho_max;
  double theta_min, theta_max;  // radians

  void validate(const ModelParams& p, bool hyperbolic_only) const;
};

enum class SampleFlag { Ok, Node, Degenerate };

std::string_view to_string(SampleFlag flag) noexcept;

/// One coordinate-space record of the mapped flow.
struct FieldSample {
  double rho, theta;
  double x, y;
  double phi;
  double vx, vy, speed;
  double density;
  double q_pot, u_pot;
  double jac_inv;
  RegionTag region;
  SampleFlag flag;
};

/// Which momentum solution a sweep maps.
struct MappedSolution {
  RadialSolution radial;
  AngularFactor angular;
  bool radial_map = false;  // use forward_map_radial (Omega_bar, lambda = 0)
};

/// |d(x,y)/d(rho,theta)| = rho |J^-1|, the coordinate area element.
double area_element(const ModelParams& p, const MappedSolution& s, double rho, double theta);

/// Samples the sector on an n_rho x n_theta grid, row-major in rho. Points on
/// nodal lines or degenerate loci are flagged, never fatal.
std::vector<FieldSample> sample_fields(const ModelParams& p, const MappedSolution& s,
                                       const SectorDomain& domain, std::size_t n_rho,
                                       std::size_t n_theta, double norm);

/// True when the nonzero Jacobian values of the samples share one sign.
bool is_univalent(const std::vector<FieldSample>& samples);

}  // namespace hodograph
