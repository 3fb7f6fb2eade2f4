#include "hodograph/maxwell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hodograph/error.hpp"
#include "hodograph/numerics.hpp"

namespace hodograph {

void ModelParams::validate() const {
  if (!(n > 0.0)) raise(ErrorKind::Parameter, "n must be positive, got " + std::to_string(n));
  if (!(ell > -1.0)) raise(ErrorKind::Parameter, "ell must exceed -1, got " + std::to_string(ell));
  if (!(sigma_v > 0.0)) raise(ErrorKind::Parameter, "sigma_v must be positive");
  if (alpha == 0.0 || !std::isfinite(alpha)) raise(ErrorKind::Parameter, "alpha must be nonzero");
  if (!(beta > 0.0)) raise(ErrorKind::Parameter, "beta must be positive");
}

double ModelParams::rho_T() const { return sigma_v / std::fabs(alpha); }

double ModelParams::sigma_nl() const {
  return sigma_v / std::numbers::sqrt2 * std::pow(n / (ell + 1.0), 1.0 / n);
}

std::string_view to_string(RegionTag tag) noexcept {
  switch (tag) {
    case RegionTag::Elliptic: return "elliptic";
    case RegionTag::Parabolic: return "parabolic";
    case RegionTag::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

double density_F(const ModelParams& p, double z, double norm) {
  if (z < 0.0) raise(ErrorKind::Domain, "density_F requires z >= 0");
  if (z == 0.0) {
    if (p.ell < 0.0) raise(ErrorKind::Domain, "density_F is singular at z = 0 for ell < 0");
    return p.ell == 0.0 ? norm : 0.0;
  }
  const double s = p.sigma_nl() * std::numbers::sqrt2;  // sigma * 2^{1/2}
  const double zs = z / s;
  return norm * std::exp(p.ell * std::log(zs) - std::pow(zs, p.n));
}

double coeff_h(const ModelParams& p, double z) {
  if (!(z > 0.0)) raise(ErrorKind::Domain, "coeff_h requires z > 0");
  const double s = p.sigma_nl() * std::numbers::sqrt2;
  return p.alpha * p.alpha / (z * z) * (p.ell - p.n * std::pow(z / s, p.n));
}

double coeff_g(const ModelParams& p, double rho) {
  return (1.0 - std::pow(rho / p.rho_T(), p.n)) * (p.ell + 1.0);
}

double discriminant(const ModelParams& p, double rho) { return -coeff_g(p, rho); }

RegionTag classify(const ModelParams& p, double rho) {
  const double rt = p.rho_T();
  if (std::fabs(rho - rt) <= kParabolicBand * rt) return RegionTag::Parabolic;
  return rho < rt ? RegionTag::Elliptic : RegionTag::Hyperbolic;
}

double normalization_N(const ModelParams& p, const DomainSpec& domain, double tol) {
  p.validate();
  numerics::QuadOptions opt;
  opt.tol = tol;
  const double speed_scale = std::fabs(p.alpha);
  double mass = 0.0;
  if (const auto* sector = std::get_if<SectorMeasure>(&domain)) {
    if (!(sector->rho_min < sector->rho_max) || !(sector->theta_min < sector->theta_max))
      raise(ErrorKind::Parameter, "sector bounds must be increasing");
    const numerics::Fn1 radial = [&](double rho) {
      const numerics::Fn1 angular = [&](double theta) {
        return std::fabs(sector->area_element(rho, theta));
      };
      return density_F(p, speed_scale * rho, 1.0) *
             numerics::adaptive_quad(angular, sector->theta_min, sector->theta_max, opt);
    };
    mass = numerics::adaptive_quad(radial, sector->rho_min, sector->rho_max, opt);
  } else {
    const auto& psi = std::get<PsiModelMeasure>(domain);
    if (!(psi.sigma_r > 0.0)) raise(ErrorKind::Parameter, "sigma_r must be positive");
    if (p.ell <= 2.0)
      raise(ErrorKind::Divergence, "vortex-model normalization diverges for ell <= 2 (ell = " +
                                       std::to_string(p.ell) + ")");
    const double k = p.rho_T() * psi.sigma_r;  // rho * r
    const numerics::Fn1 ring = [&](double r) {
      if (r <= 0.0) return 0.0;
      return 2.0 * std::numbers::pi * r * density_F(p, speed_scale * k / r, 1.0);
    };
    mass = numerics::adaptive_quad_inf(ring, 0.0, opt);
  }
  if (!(mass > 0.0) || !std::isfinite(mass))
    raise(ErrorKind::Divergence, "density mass over the domain is not finite and positive");
  return 1.0 / mass;
}

}  // namespace hodograph
