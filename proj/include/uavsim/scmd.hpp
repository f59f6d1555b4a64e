#pragma once

#include <vector>

#include "uavsim/scsd.hpp"

namespace uavsim {

/// One aggregator tier of the multi-drone cell: altitude, cluster size,
/// and optional per-tier threshold grid (empty = use the shared one).
struct DroneTier {
  double h_d = 50.0;   // m
  double r = 50.0;     // m
  std::vector<double> tau;
};

/// Single cell, N aggregators sharing the IoT slot. Tier l sees the BS
/// plus the scheduled transmitter of every other tier as interference.
struct ScMdProblem {
  ScSdProblem base;             // shared constants; base.tau used when a
                                // tier leaves its own grid empty
  std::vector<DroneTier> tiers;

  void validate() const;
};

/// Per-tier EE at the power vector p (one entry per tier), bits/joule.
double ee_tier(std::size_t l, const std::vector<double>& p,
               const ScMdProblem& pb, ClampStats* clamp = nullptr);

struct MdSolution {
  std::vector<double> p_star;   // W, per tier
  double objective = 0.0;       // min-EE or sum-EE, bits/joule
  std::vector<double> ee;       // per-tier EE at p_star
  int dinkelbach_iters = 0;
  bool certified_global = false;  // inner subproblem is nonconvex; multi-start
                                  // coordinate ascent only
  std::vector<double> lambda_trace;
};

/// Max-min EE over the power box via the generalized Dinkelbach scheme:
/// lambda_{k+1} = min_l rate_l / cost_l at the inner maximizer.
MdSolution solve_max_min(const ScMdProblem& pb, double tol = 1e-6,
                         int max_iters = 60);

/// Sum-EE counterpart; one lambda per ratio.
MdSolution solve_sum_ee(const ScMdProblem& pb, double tol = 1e-6,
                        int max_iters = 60);

}  // namespace uavsim
