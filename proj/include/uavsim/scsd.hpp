#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavsim/channel.hpp"

namespace uavsim {

/// Counts how often the single-cell coverage approximation had to be
/// clamped into [0, 1].
struct ClampStats {
  long long evals = 0;
  long long clamped = 0;
  double rate() const { return evals > 0 ? double(clamped) / double(evals) : 0.0; }
};

/// Every constant of the single-cell single-drone EE problem.
/// Powers in watts, thresholds linear, densities per m^2.
struct ScSdProblem {
  double lambda_b = 0.0;
  double lambda_u = 0.0;
  double p_b = 0.0;            // BS transmit power
  int u_b = 4;
  int delta_b = 29;            // desired-link Gamma shape (M_B - U_B + 1)
  double r = 50.0;             // cluster radius, m
  double h_d = 50.0;           // aggregator altitude, m
  DerivedConstants ch;         // l_m, l_b, l_m_median, delta_a, delta_g
  std::vector<double> tau;     // strictly increasing SINR thresholds
  double p_cp = 0.09;          // circuit power, W
  double eta = 0.44;           // PA efficiency
  double p_n = 0.0;            // noise power, W
  double rho = 0.0;            // linear ISR cap
  double eps = 0.5;            // allowed tail probability
  double p_min = 0.0;          // W
  double p_max = 0.0;          // W
  double beta_iot = 0.0;       // Hz, long-term IoT resource share

  void validate() const;
  /// Rate weights: mu_1 = log2(1+tau_1), mu_k = log2(1+tau_k) - log2(1+tau_{k-1}).
  std::vector<double> mu() const;
};

enum class Binding { kInterior, kIsrCap, kPMax, kPMin };

struct EeSolution {
  double p_star = 0.0;   // W
  double ee_star = 0.0;  // bits/joule
  Binding binding = Binding::kInterior;
};

/// CDF of the received desired signal power at the drone (mean-LOS
/// approximation); clamps to {0,1} outside the support.
double iot_signal_cdf(double tau, double p, const ScSdProblem& pb);

/// Median received signal power, p * l_m_median.
double iot_signal_median(double p, const ScSdProblem& pb);

/// CDF of the tagged-BS interference power at the drone.
double bs_interference_cdf(double tau, const ScSdProblem& pb);

/// Single-cell coverage approximation P(sinr >= tau); clamped to [0,1].
double iot_coverage(double p, double tau, const ScSdProblem& pb,
                    ClampStats* clamp = nullptr);

/// Average energy efficiency at nominal power p, bits/joule.
double avg_ee(double p, const ScSdProblem& pb, ClampStats* clamp = nullptr);

/// P(ISR >= rho) at the nearest UE for nominal power p.
double isr_tail(double rho, double p, const ScSdProblem& pb);

/// Largest power satisfying isr_tail(rho, p) <= eps.
/// Throws if the cap falls below p_min (protection conflicts with coverage).
double isr_power_cap(const ScSdProblem& pb);

/// Golden-section search on log-power over the feasible interval.
EeSolution solve_sc_sd(const ScSdProblem& pb, double rel_tol = 1e-6);

/// Closed-form unconstrained maximizer, valid only for a single threshold
/// and alpha_a = 2; returned value already projected onto the bounds.
double closed_form_pstar(const ScSdProblem& pb);
double closed_form_pstar_unconstrained(const ScSdProblem& pb);

struct BsOptTrace {
  std::vector<double> p_m;  // W, per iteration
  std::vector<double> p_b;  // W
  std::vector<double> ee;   // bits/joule
};

struct BsOptResult {
  double p_m_star = 0.0;
  double p_b_star = 0.0;
  double ee_star = 0.0;
  BsOptTrace trace;
};

/// Alternating update of the IoT power and the BS power: shrink P_B until
/// the ISR cap binds, re-solve for P_M, stop when the EE change <= zeta.
BsOptResult optimize_bs_power(ScSdProblem pb, double p_b_min, double p_b_max,
                              double zeta, int max_iters = 100);

}  // namespace uavsim
