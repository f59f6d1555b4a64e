#pragma once

#include <functional>

namespace uavsim {

struct QuadratureCfg {
  double abs_tol = 1e-9;
  int max_depth = 48;
  double seed_scale = 1.0;  // first dyadic panel is [seed/2, seed]
  int max_panels = 240;
};

/// Adaptive Simpson on [a, b] to absolute tolerance.
/// Throws std::runtime_error when the depth limit is hit before convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9, int max_depth = 48);

/// Integral of f over (0, inf) for integrands with an integrable
/// singularity at 0 and decaying oscillation-free tails: dyadic panels
/// growing from and shrinking toward 0, each integrated adaptively,
/// stopped once three consecutive panels each contribute < tol/8.
/// Throws std::runtime_error if the panel budget runs out first.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureCfg& cfg);

}  // namespace uavsim
