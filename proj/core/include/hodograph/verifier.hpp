#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hodograph/mapper.hpp"
#include "hodograph/maxwell.hpp"

namespace hodograph {

/// Residual statistics of one oracle check. Residuals are normalized point by
/// point; rel_scale is the effective scale, max_abs / (worst normalized
/// residual), so that pass <=> max_abs / rel_scale <= tol.
struct VerificationReport {
  std::string name;
  std::string grid_spec;
  double max_abs = 0.0;
  double rms = 0.0;
  double rel_scale = 1.0;
  double tol = 0.0;
  bool pass = false;
  std::size_t skipped_points = 0;
  std::size_t total_points = 0;

  double max_rel() const { return max_abs / rel_scale; }
};

/// Largest fraction of masked points a report may carry and still pass.
inline constexpr double kMaxSkippedFraction = 0.05;

class ResidualAccumulator {
 public:
  /// Adds |residual| with its local scale (use 1 for absolute checks).
  void add(double residual, double scale = 1.0);
  /// Counts a masked point (nodal line, degeneracy).
  void skip();

  VerificationReport finish(std::string name, std::string grid_spec, double tol) const;

 private:
  double max_abs_ = 0.0;
  double worst_rel_ = 0.0;
  double worst_scale_ = 1.0;
  double sum_sq_ = 0.0;
  std::size_t count_ = 0;
  std::size_t skipped_ = 0;
};

/// Single-value report, for scalar comparisons.
VerificationReport scalar_report(std::string name, double got, double want, double tol,
                                 bool relative = true);

/// Runs an FD check at h and h/2. Passes when the h/2 report passes and the
/// residual either shrinks at least 2x or already sits below tol/10 (noise
/// floor).
VerificationReport hsweep(const std::string& name, const std::function<VerificationReport(double)>& run,
                          double h);

/// FD residual of u_rr + g (u_r / rho + u_tt / rho^2) on an interior grid of
/// the sector; h is relative to rho_T for the radius and absolute in theta.
/// Each point is scaled by its term magnitudes, floored at 1e-2 of the largest
/// magnitude at the same radius so nodal lines of the angular factor do not
/// turn roundoff into an O(1) relative error.
VerificationReport pde_residual_momentum(const ModelParams& p,
                                         const std::function<double(double, double)>& u,
                                         const SectorDomain& domain, std::size_t n_rho,
                                         std::size_t n_theta, double h, double tol,
                                         const std::string& name = "momentum-pde");

/// Phase Phi(x, y) on a coordinate chart.
using PhiField = std::function<double(double, double)>;

/// FD residual of the nonlinear coordinate-space phase equation at every
/// centre, each normalized by the sum of its term magnitudes. h is relative
/// to max(1, |centre|).
VerificationReport pde_residual_coordinate(const ModelParams& p, const PhiField& phi,
                                           const std::vector<CoordPoint>& centres, double h,
                                           double tol, const std::string& name = "coordinate-pde");

/// Coordinate FD step around the image of (rho, theta) that moves the
/// preimage by at most h in (ln rho, theta).
double chart_step(const ModelParams& p, const MappedSolution& s, double rho, double theta, double h);

/// Coordinate phase-equation residual over the image of a momentum grid. Each
/// cell centre gets its own local chart, inverted from its own preimage, so
/// folds between centres do not matter. The FD step is the coordinate image
/// of a relative momentum step h. Centres with |J^-1| below jac_floor times
/// jacobian_scale sit too close to a fold and are left out.
VerificationReport pde_residual_mapped(const ModelParams& p, const MappedSolution& s,
                                       const SectorDomain& domain, std::size_t n_rho,
                                       std::size_t n_theta, double h, double tol,
                                       const std::string& name = "coordinate-pde",
                                       double jac_floor = 1e-2);

/// Phase field of a mapped solution: each evaluation inverts the map from the
/// nearest seed in `seeds`.
PhiField mapped_phi(const ModelParams& p, const MappedSolution& s,
                    std::vector<std::pair<CoordPoint, MomentumPoint>> seeds);

}  // namespace hodograph
