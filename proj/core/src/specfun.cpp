#include "hodograph/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hodograph/error.hpp"

namespace hodograph::specfun {
namespace {

using std::numbers::pi;

// Lanczos approximation, g = 7, nine coefficients (relative error ~1e-15).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with exact argument reduction, so that reflection stays accurate
// for large negative x.
double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1], exact
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  return std::sin(pi * r);
}

double gamma_positive(double x) {  // x >= 0.5
  double xm = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (xm + static_cast<double>(i));
  double t = xm + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::exp((xm + 0.5) * std::log(t) - t) * acc;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

struct SeriesResult {
  double sum;
  double max_term;  // largest |term| seen, a roundoff scale for the sum
};

// M(-m, b, z) through the contiguous relation in a,
//   (b + j) M(-j-1) = (2j + b - z) M(-j) - j M(-j+1),
// which avoids the cancellation of the alternating terminating series at
// large z. max_term tracks the largest intermediate value.
SeriesResult kummer_polynomial(int m, double b, double z) {
  double prev = 1.0;  // M(0, b, z)
  if (m == 0) return {1.0, 1.0};
  double cur = 1.0 - z / b;
  double scale = std::max(1.0, std::fabs(cur));
  for (int j = 1; j < m; ++j) {
    const double next = ((2.0 * j + b - z) * cur - j * prev) / (b + j);
    prev = cur;
    cur = next;
    scale = std::max(scale, std::fabs(cur));
  }
  if (!std::isfinite(cur)) raise(ErrorKind::Overflow, "kummer_m polynomial overflow");
  return {cur, scale};
}

// Sum of (a)_k z^k / ((b)_k k!). A terminating polynomial sums exactly m+1
// terms when a is (snapped to) -m.
SeriesResult kummer_series(double a, double b, double z, const SeriesControl& ctl, double z_max) {
  ctl.validate();
  if (!(z >= 0.0)) raise(ErrorKind::Domain, "kummer_m requires z >= 0, got " + std::to_string(z));
  if (z > z_max) raise(ErrorKind::Domain, "kummer_m argument z = " + std::to_string(z) + " exceeds z_max");
  if (std::fabs(b - std::round(b)) < 1e-12 && std::round(b) <= 0.0)
    raise(ErrorKind::Parameter, "kummer_m undefined for non-positive integer b = " + std::to_string(b));

  int m = 0;
  if (near_nonpositive_integer(a, 1e-12, &m)) return kummer_polynomial(m, b, z);

  double term = 1.0;
  double sum = 1.0;
  double max_term = 1.0;
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    sum += term;
    const double at = std::fabs(term);
    if (!std::isfinite(sum) || !std::isfinite(term))
      raise(ErrorKind::Overflow, "kummer_m series overflow at a = " + std::to_string(a) +
                                     ", b = " + std::to_string(b) + ", z = " + std::to_string(z));
    if (at > max_term) max_term = at;
    small_run = (at < ctl.rel_tol * std::fabs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return {sum, max_term};
  }
  raise(ErrorKind::NoConvergence, "kummer_m series did not converge within max_terms");
}

// E1(x) for x >= 1 by the modified Lentz continued fraction.
double expint_e1_cf(double x, const SeriesControl& ctl) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= ctl.max_terms; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < ctl.rel_tol) return h * std::exp(-x);
  }
  raise(ErrorKind::NoConvergence, "E1 continued fraction did not converge");
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) raise(ErrorKind::Parameter, "SeriesControl.rel_tol must be positive");
  if (max_terms < 100) raise(ErrorKind::Parameter, "SeriesControl.max_terms must be >= 100");
}

bool near_nonpositive_integer(double x, double tol, int* m) {
  const double r = std::round(x);
  if (r > 0.0 || std::fabs(x - r) > tol) return false;
  if (m != nullptr) *m = static_cast<int>(-r);
  return true;
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) raise(ErrorKind::Pole, "gamma has a pole at x = " + std::to_string(x));
  if (x < 0.5) return pi / (sin_pi(x) * gamma_positive(1.0 - x));
  return gamma_positive(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sin_pi(x) * gamma_positive(1.0 - x) / pi;
  return 1.0 / gamma_positive(x);
}

double expint_ei(double x, const SeriesControl& ctl) {
  ctl.validate();
  if (x == 0.0) raise(ErrorKind::Domain, "Ei is singular at x = 0");
  if (x <= -1.0) return -expint_e1_cf(-x, ctl);

  // Ei(x) = gamma_e + ln|x| + sum x^k / (k k!)
  double pw = 1.0;  // x^k / k!
  double sum = 0.0;
  int small_run = 0;
  for (int k = 1; k <= ctl.max_terms; ++k) {
    pw *= x / k;
    const double term = pw / k;
    sum += term;
    if (!std::isfinite(sum)) raise(ErrorKind::Overflow, "Ei overflow at x = " + std::to_string(x));
    small_run = (std::fabs(term) < ctl.rel_tol * std::fabs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return kEulerGamma + std::log(std::fabs(x)) + sum;
  }
  raise(ErrorKind::NoConvergence, "Ei series did not converge at x = " + std::to_string(x));
}

double kummer_m(double a, double b, double z, const SeriesControl& ctl, double z_max) {
  return kummer_series(a, b, z, ctl, z_max).sum;
}

double kummer_m_derivative(double a, double b, double z, int order, const SeriesControl& ctl,
                           double z_max) {
  if (order < 0) raise(ErrorKind::Parameter, "derivative order must be non-negative");
  double factor = 1.0;
  for (int j = 0; j < order; ++j) {
    factor *= (a + j) / (b + j);
    if (factor == 0.0) return 0.0;  // polynomial differentiated past its degree
  }
  return factor * kummer_m(a + order, b + order, z, ctl, z_max);
}

double tricomi_psi(double a, double b, double z, const SeriesControl& ctl, double z_max) {
  if (!(z > 0.0)) raise(ErrorKind::Domain, "tricomi_psi requires z > 0");
  if (std::fabs(b - std::round(b)) < 1e-12)
    raise(ErrorKind::Parameter,
          "tricomi_psi for integer b = " + std::to_string(b) + " (limit form not implemented)");
  // rgamma vanishes at poles, which is the correct limit of each term.
  double out = 0.0;
  const double c1 = gamma(1.0 - b) * rgamma(a + 1.0 - b);
  if (c1 != 0.0) out += c1 * kummer_m(a, b, z, ctl, z_max);
  const double c2 = gamma(b - 1.0) * rgamma(a);
  if (c2 != 0.0) out += c2 * std::pow(z, 1.0 - b) * kummer_m(a + 1.0 - b, 2.0 - b, z, ctl, z_max);
  return out;
}

double tricomi_psi_derivative(double a, double b, double z, int order, const SeriesControl& ctl,
                              double z_max) {
  if (order < 0) raise(ErrorKind::Parameter, "derivative order must be non-negative");
  double factor = 1.0;
  for (int j = 0; j < order; ++j) factor *= -(a + j);
  if (factor == 0.0) return 0.0;
  return factor * tricomi_psi(a + order, b + order, z, ctl, z_max);
}

double laguerre(int k, double alpha, double z) {
  if (k < 0) raise(ErrorKind::Parameter, "laguerre degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - z;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - z) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double kummer_logderiv(double a, double b, double z, const SeriesControl& ctl, double z_max) {
  const SeriesResult m = kummer_series(a, b, z, ctl, z_max);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (std::fabs(m.sum) <= 64.0 * eps * m.max_term)
    raise(ErrorKind::Node, "M(a, b, z) vanishes at a = " + std::to_string(a) +
                               ", b = " + std::to_string(b) + ", z = " + std::to_string(z));
  return kummer_m_derivative(a, b, z, 1, ctl, z_max) / m.sum;
}

}  // namespace hodograph::specfun
