#pragma once

#include <functional>
#include <limits>

namespace hodograph::numerics {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

/// Central differences with O(h^2) truncation; order is 1 or 2.
double fd_derivative(const Fn1& f, double x, int order, double h);

/// Step balancing truncation against roundoff for a central stencil of the
/// given order, relative to the local length scale.
double fd_step(int order, double scale);

struct Partials2 {
  double fx, fy, fxx, fxy, fyy;
};

/// All first and second partials of f at (x, y) by central differences.
Partials2 fd_partials(const Fn2& f, double x, double y, double hx, double hy);

struct QuadOptions {
  double tol = 1e-10;          // accept when error <= tol * max(1, |I|)
  int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
double adaptive_quad(const Fn1& f, double a, double b, const QuadOptions& opt = {});

/// Integral over [a, inf): [a, a+1] directly, the tail through t = 1/x.
double adaptive_quad_inf(const Fn1& f, double a, const QuadOptions& opt = {});

/// Integral of f(r, phi) r dr dphi over an annular sector; r_max may be
/// +infinity.
double quad2d_polar(const Fn2& f, double r_min, double r_max, double phi_min, double phi_max,
                    const QuadOptions& opt = {});

/// Brent's method on a bracketing interval [a, b].
double brent_root(const Fn1& f, double a, double b, double xtol = 1e-14, int max_iter = 200);

/// Plain bisection on a bracketing interval; always converges.
double bisect_root(const Fn1& f, double a, double b, double xtol = 1e-14, int max_iter = 400);

/// Minimizer of a unimodal f on [a, b] by golden-section search.
double golden_section_min(const Fn1& f, double a, double b, double xtol = 1e-12,
                          int max_iter = 500);

}  // namespace hodograph::numerics
