#include "uavsim/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavsim {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  // Integrands built on a nested quadrature carry tolerance-scale jumps.
  // A jump inside a panel this narrow contributes less than width * jump,
  // which is far below any tolerance, and subdividing can never resolve it.
  if (b - a < 1e-9 * (std::abs(a) + std::abs(b) + 1.0))
    return left + right + delta / 15.0;
  if (depth <= 0)
    throw std::runtime_error("quadrature: no convergence on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
  return adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  return adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), abs_tol,
               max_depth);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureCfg& cfg) {
  const double panel_tol = cfg.abs_tol / 8.0;
  double total = 0.0;
  int panels_used = 0;

  auto panel = [&](double a, double b) {
    if (++panels_used > cfg.max_panels)
      throw std::runtime_error("quadrature: panel budget exhausted near t=" +
                               std::to_string(a));
    return integrate(f, a, b, panel_tol, cfg.max_depth);
  };

  // upward panels [t0 2^k, t0 2^(k+1)]
  double lo = cfg.seed_scale;
  int quiet = 0;
  while (quiet < 3) {
    const double c = panel(lo, 2.0 * lo);
    total += c;
    quiet = std::abs(c) < panel_tol ? quiet + 1 : 0;
    lo *= 2.0;
  }
  // downward panels toward the (integrable) endpoint 0
  double hi = cfg.seed_scale;
  quiet = 0;
  while (quiet < 3) {
    const double c = panel(hi / 2.0, hi);
    total += c;
    quiet = std::abs(c) < panel_tol ? quiet + 1 : 0;
    hi /= 2.0;
  }
  return total;
}

}  // namespace uavsim
