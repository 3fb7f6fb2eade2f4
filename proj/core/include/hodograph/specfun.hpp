#pragma once

namespace hodograph::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Truncation policy shared by every power series in the library.
/// A series stops once three consecutive terms fall below
/// rel_tol * |partial sum|, and fails after max_terms terms.
struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 1000;

  void validate() const;
};

/// Default upper bound on the Kummer argument; the plain power series loses
/// digits beyond it.
inline constexpr double kKummerZMax = 50.0;

double gamma(double x);

/// 1/Gamma(x); exactly zero at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// Exponential integral Ei(x) (principal value for x > 0).
double expint_ei(double x, const SeriesControl& ctl = {});

/// Kummer's confluent hypergeometric function M(a, b, z), z in [0, z_max].
/// When `a` is within 1e-12 of a non-positive integer the series is summed as
/// the exact terminating polynomial.
double kummer_m(double a, double b, double z, const SeriesControl& ctl = {},
                double z_max = kKummerZMax);

/// d^order/dz^order M(a, b, z) through the contiguity relation
/// M' = (a/b) M(a+1, b+1, z).
double kummer_m_derivative(double a, double b, double z, int order,
                           const SeriesControl& ctl = {},
                           double z_max = kKummerZMax);

/// Tricomi's function from the connection formula with M. Integer b is not
/// supported (the logarithmic limit form is not implemented).
double tricomi_psi(double a, double b, double z, const SeriesControl& ctl = {},
                   double z_max = kKummerZMax);

/// d^order/dz^order Psi(a, b, z) through Psi' = -a Psi(a+1, b+1, z).
double tricomi_psi_derivative(double a, double b, double z, int order,
                              const SeriesControl& ctl = {},
                              double z_max = kKummerZMax);

/// Generalized Laguerre polynomial L_k^(alpha)(z) by three-term recurrence.
double laguerre(int k, double alpha, double z);

/// d/dz ln M(a, b, z) = (a/b) M(a+1, b+1, z) / M(a, b, z).
/// Throws ErrorKind::Node when M(a, b, z) is indistinguishable from zero.
double kummer_logderiv(double a, double b, double z,
                       const SeriesControl& ctl = {},
                       double z_max = kKummerZMax);

/// True when x lies within tol of a non-positive integer; stores it in *m.
bool near_nonpositive_integer(double x, double tol, int* m = nullptr);

}  // namespace hodograph::specfun
