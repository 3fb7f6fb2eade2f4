#include "hodograph/verifier.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "hodograph/error.hpp"
#include "hodograph/numerics.hpp"

namespace hodograph {

namespace {
constexpr double kNodalFloor = 1e-2;
}  // namespace

void ResidualAccumulator::add(double residual, double scale) {
  const double a = std::fabs(residual);
  const double s = scale > 0.0 ? scale : 1.0;
  const double rel = std::isnan(a) ? std::numeric_limits<double>::infinity() : a / s;
  if (rel > worst_rel_ || count_ == 0) {
    worst_rel_ = rel;
    worst_scale_ = s;
  }
  max_abs_ = std::max(max_abs_, a);
  sum_sq_ += a * a;
  ++count_;
}

void ResidualAccumulator::skip() { ++skipped_; }

VerificationReport ResidualAccumulator::finish(std::string name, std::string grid_spec, double tol) const {
  VerificationReport r;
  r.name = std::move(name);
  r.grid_spec = std::move(grid_spec);
  r.tol = tol;
  r.skipped_points = skipped_;
  r.total_points = count_ + skipped_;
  r.rms = count_ > 0 ? std::sqrt(sum_sq_ / static_cast<double>(count_)) : 0.0;
  r.max_abs = max_abs_;
  r.rel_scale = worst_rel_ > 0.0 && std::isfinite(worst_rel_) ? max_abs_ / worst_rel_ : worst_scale_;
  const bool few_skips = static_cast<double>(skipped_) <= kMaxSkippedFraction * static_cast<double>(r.total_points);
  r.pass = count_ > 0 && std::isfinite(worst_rel_) && worst_rel_ <= tol && few_skips;
  return r;
}

VerificationReport scalar_report(std::string name, double got, double want, double tol, bool relative) {
  ResidualAccumulator acc;
  acc.add(got - want, relative ? std::fabs(want) : 1.0);
  std::ostringstream spec;
  spec.precision(17);
  spec << "got=" << got << " want=" << want << (relative ? " (relative)" : " (absolute)");
  return acc.finish(std::move(name), spec.str(), tol);
}

VerificationReport hsweep(const std::string& name, const std::function<VerificationReport(double)>& run,
                          double h) {
  const VerificationReport coarse = run(h);
  VerificationReport fine = run(0.5 * h);
  const double rc = coarse.max_rel(), rf = fine.max_rel();
  const bool shrinks = rc >= 2.0 * rf;
  const bool at_floor = rf <= 0.1 * fine.tol;
  std::ostringstream spec;
  spec.precision(6);
  spec << fine.grid_spec << "; h-sweep h=" << h << " rel=" << rc << ", h/2 rel=" << rf;
  fine.name = name;
  fine.grid_spec = spec.str();
  fine.pass = fine.pass && (shrinks || at_floor);
  return fine;
}

VerificationReport pde_residual_momentum(const ModelParams& p,
                                         const std::function<double(double, double)>& u,
                                         const SectorDomain& domain, std::size_t n_rho,
                                         std::size_t n_theta, double h, double tol,
                                         const std::string& name) {
  ResidualAccumulator acc;
  const double hr = h * p.rho_T();
  std::vector<std::pair<double, double>> row(n_theta);
  for (std::size_t i = 0; i < n_rho; ++i) {
    const double rho = domain.rho_min + (domain.rho_max - domain.rho_min) * (static_cast<double>(i) + 0.5) /
                                            static_cast<double>(n_rho);
    const double g = coeff_g(p, rho);
    double row_max = 0.0;
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta = domain.theta_min + (domain.theta_max - domain.theta_min) *
                                                  (static_cast<double>(j) + 0.5) / static_cast<double>(n_theta);
      const auto d = numerics::fd_partials(u, rho, theta, hr, h);
      const double res = d.fxx + g * (d.fx / rho + d.fyy / (rho * rho));
      const double scale = std::fabs(d.fxx) + std::fabs(g) * (std::fabs(d.fx) / rho + std::fabs(d.fyy) / (rho * rho));
      row[j] = {res, scale};
      row_max = std::max(row_max, scale);
    }
    // on a nodal line every term vanishes; measure against the row instead
    for (const auto& [res, scale] : row) acc.add(res, std::max(scale, kNodalFloor * row_max));
  }
  std::ostringstream spec;
  spec.precision(6);
  spec << n_rho << "x" << n_theta << " interior grid rho in [" << domain.rho_min << ", " << domain.rho_max
       << "], theta in [" << domain.theta_min << ", " << domain.theta_max << "], h=" << h;
  return acc.finish(name, spec.str(), tol);
}

namespace {

// Residual of the coordinate phase equation at one centre and the sum of its
// term magnitudes.
std::pair<double, double> coordinate_terms(const ModelParams& p, const PhiField& phi, CoordPoint c, double step) {
  const auto d = numerics::fd_partials(phi, c.x, c.y, step, step);
  const double speed = std::fabs(p.alpha) * std::hypot(d.fx, d.fy);
  const double hh = coeff_h(p, speed);
  const double t1 = (1.0 + d.fx * d.fx * hh) * d.fxx;
  const double t2 = 2.0 * hh * d.fx * d.fy * d.fxy;
  const double t3 = (1.0 + d.fy * d.fy * hh) * d.fyy;
  return {t1 + t2 + t3, std::fabs(t1) + std::fabs(t2) + std::fabs(t3)};
}

}  // namespace

VerificationReport pde_residual_coordinate(const ModelParams& p, const PhiField& phi,
                                           const std::vector<CoordPoint>& centres, double h,
                                           double tol, const std::string& name) {
  ResidualAccumulator acc;
  for (const CoordPoint& c : centres) {
    const auto [res, scale] = coordinate_terms(p, phi, c, h * std::max(1.0, std::hypot(c.x, c.y)));
    acc.add(res, scale);
  }
  std::ostringstream spec;
  spec.precision(6);
  spec << centres.size() << " chart points, h=" << h;
  return acc.finish(name, spec.str(), tol);
}

double chart_step(const ModelParams& p, const MappedSolution& s, double rho, double theta, double h) {
  if (s.radial_map) return h * hill_zeta_bar(p, rho);
  // smallest singular value of d(x,y)/d(ln rho, theta)
  const MapDifferential md = map_differential(p, s.radial, s.angular, rho, theta);
  const double a = rho * md.x_rho, b = md.x_theta, c = rho * md.y_rho, d = md.y_theta;
  const double fro2 = a * a + b * b + c * c + d * d, det = std::fabs(a * d - b * c);
  const double smax = std::sqrt(0.5 * (fro2 + std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det))));
  return h * det / smax;
}

VerificationReport pde_residual_mapped(const ModelParams& p, const MappedSolution& s,
                                       const SectorDomain& domain, std::size_t n_rho,
                                       std::size_t n_theta, double h, double tol,
                                       const std::string& name, double jac_floor) {
  ResidualAccumulator acc;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n_rho; ++i) {
    const double rho = domain.rho_min + (domain.rho_max - domain.rho_min) * (static_cast<double>(i) + 0.5) /
                                            static_cast<double>(n_rho);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta = domain.theta_min + (domain.theta_max - domain.theta_min) *
                                                  (static_cast<double>(j) + 0.5) / static_cast<double>(n_theta);
      double step;
      MapPoint img;
      if (s.radial_map) {
        img = forward_map_radial(p, rho, theta);
        step = chart_step(p, s, rho, theta, h);
      } else {
        img = forward_map(p, s.radial, s.angular, rho, theta);
        if (std::fabs(img.jac_inv) < jac_floor * jacobian_scale(p, s.radial, s.angular, rho, theta)) continue;
        step = chart_step(p, s, rho, theta, h);
      }
      ++used;
      const PhiField phi = mapped_phi(p, s, {{{img.x, img.y}, {rho, theta}}});
      const auto [res, scale] = coordinate_terms(p, phi, {img.x, img.y}, step);
      acc.add(res, scale);
    }
  }
  std::ostringstream spec;
  spec.precision(6);
  spec << n_rho << "x" << n_theta << " momentum grid rho in [" << domain.rho_min << ", " << domain.rho_max
       << "], theta in [" << domain.theta_min << ", " << domain.theta_max << "], " << used
       << " local charts (|J^-1| >= " << jac_floor << " of its ceiling), h=" << h;
  return acc.finish(name, spec.str(), tol);
}

PhiField mapped_phi(const ModelParams& p, const MappedSolution& s,
                    std::vector<std::pair<CoordPoint, MomentumPoint>> seeds) {
  if (s.radial_map) {
    return [p](double x, double y) {
      const MomentumPoint m = invert_map_radial(p, {x, y});
      return forward_map_radial(p, m.rho, m.theta).phi_val;
    };
  }
  return [p, s, seeds = std::move(seeds)](double x, double y) {
    if (seeds.empty()) raise(ErrorKind::Parameter, "mapped_phi needs at least one seed");
    const auto* best = &seeds.front();
    double bd = std::numeric_limits<double>::infinity();
    for (const auto& sd : seeds) {
      const double d = std::hypot(sd.first.x - x, sd.first.y - y);
      if (d < bd) {
        bd = d;
        best = &sd;
      }
    }
    const MomentumPoint m = invert_map(p, s.radial, s.angular, {x, y}, best->second);
    return forward_map(p, s.radial, s.angular, m.rho, m.theta).phi_val;
  };
}

}  // namespace hodograph
