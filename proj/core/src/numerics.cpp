#include "hodograph/numerics.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "hodograph/error.hpp"

namespace hodograph::numerics {
namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Fn1& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * h, std::fabs((kronrod - gauss) * h)};
}

}  // namespace

double fd_derivative(const Fn1& f, double x, int order, double h) {
  if (!(h > 0.0)) raise(ErrorKind::Parameter, "fd step must be positive");
  switch (order) {
    case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    default: raise(ErrorKind::Parameter, "fd_derivative supports order 1 or 2");
  }
}

double fd_step(int order, double scale) {
  const double s = std::fabs(scale) > 0.0 ? std::fabs(scale) : 1.0;
  switch (order) {
    case 1: return std::cbrt(kUnitRoundoff) * s;
    case 2: return std::sqrt(std::sqrt(kUnitRoundoff)) * s;
    default: raise(ErrorKind::Parameter, "fd_step supports order 1 or 2");
  }
}

Partials2 fd_partials(const Fn2& f, double x, double y, double hx, double hy) {
  const double f0 = f(x, y);
  const double fxp = f(x + hx, y), fxm = f(x - hx, y);
  const double fyp = f(x, y + hy), fym = f(x, y - hy);
  const double fpp = f(x + hx, y + hy), fpm = f(x + hx, y - hy);
  const double fmp = f(x - hx, y + hy), fmm = f(x - hx, y - hy);
  return {(fxp - fxm) / (2.0 * hx),
          (fyp - fym) / (2.0 * hy),
          (fxp - 2.0 * f0 + fxm) / (hx * hx),
          (fpp - fpm - fmp + fmm) / (4.0 * hx * hy),
          (fyp - 2.0 * f0 + fym) / (hy * hy)};
}

double adaptive_quad(const Fn1& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return 0.0;
  if (b < a) return -adaptive_quad(f, b, a, opt);
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  for (int it = 0; it < opt.max_intervals; ++it) {
    if (!std::isfinite(total))
      raise(ErrorKind::NoConvergence, "quadrature produced a non-finite value");
    if (error <= opt.tol * std::max(1.0, std::fabs(total))) return total;
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at machine resolution
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Recompute from the heap to shed accumulated cancellation in the running sums.
  double sum = 0.0, err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  if (err <= opt.tol * std::max(1.0, std::fabs(sum))) return sum;
  raise(ErrorKind::NoConvergence, "adaptive quadrature error estimate " + std::to_string(err) +
                                      " above tolerance");
}

double adaptive_quad_inf(const Fn1& f, double a, const QuadOptions& opt) {
  const double split = a + std::max(1.0, std::fabs(a));
  const double head = adaptive_quad(f, a, split, opt);
  const Fn1 tail_integrand = [&f](double t) {
    if (t <= 0.0) return 0.0;
    return f(1.0 / t) / (t * t);
  };
  return head + adaptive_quad(tail_integrand, 0.0, 1.0 / split, opt);
}

double quad2d_polar(const Fn2& f, double r_min, double r_max, double phi_min, double phi_max,
                    const QuadOptions& opt) {
  const Fn1 radial = [&](double r) {
    const Fn1 angular = [&](double phi) { return f(r, phi); };
    return r * adaptive_quad(angular, phi_min, phi_max, opt);
  };
  if (std::isinf(r_max)) return adaptive_quad_inf(radial, r_min, opt);
  return adaptive_quad(radial, r_min, r_max, opt);
}

double brent_root(const Fn1& f, double a, double b, double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) raise(ErrorKind::Parameter, "brent_root: interval does not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * kUnitRoundoff * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  raise(ErrorKind::NoConvergence, "brent_root exceeded max_iter");
}

double bisect_root(const Fn1& f, double a, double b, double xtol, int max_iter) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) raise(ErrorKind::Parameter, "bisect_root: interval does not bracket a root");
  for (int it = 0; it < max_iter; ++it) {
    const double m = 0.5 * (a + b);
    if (std::fabs(b - a) <= xtol || m == a || m == b) return m;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double golden_section_min(const Fn1& f, double a, double b, double xtol, int max_iter) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && std::fabs(b - a) > xtol * std::max(1.0, std::fabs(c)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace hodograph::numerics
