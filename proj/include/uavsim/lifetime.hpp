#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uavsim/montecarlo.hpp"

namespace uavsim {

/// NB-IoT report cycle and battery constants. Times in seconds, powers in
/// watts, payload in bits, capacity in joules.
struct LifetimeParams {
  double battery_j = 5.0 * 3600.0;   // 5 Wh
  double payload_bits = 229.0 * 8.0;
  int n_rep = 12;                     // reports per day
  double p_rx = 0.090;
  double p_idle = 0.003;
  double p_sleep = 0.015e-3;
  double t_rx = 0.565;
  double t_idle = 22.451;
  double t_sleep = 86400.0;
  double p_cp = 0.09;                 // circuit power during TX
  double eta = 0.44;                  // PA efficiency
  double max_tx_s = 86400.0 / 12.0;   // longer transfers are censored

  void validate() const;
};

/// Seconds on air for one report at the given rate (bits/s); nullopt when
/// the rate is zero or the transfer cannot finish within the cycle.
std::optional<double> tx_duration(double rate_bps, const LifetimeParams& lp);

/// Energy of one day: n_rep reports (TX + RX + idle) plus deep sleep.
/// The TX stage draws p_cp + p_m_w / eta.
double daily_energy(double t_tx, double p_m_w, const LifetimeParams& lp);

/// Battery life in years at the given per-report duration and TX power.
double lifetime_years(double t_tx, double p_tx_w, const LifetimeParams& lp);

struct LifetimeDistribution {
  std::vector<double> years;   // sorted, censored devices excluded
  long long censored = 0;
  long long total = 0;
  double censored_rate() const {
    return total > 0 ? double(censored) / double(total) : 0.0;
  }
  double quantile(double q) const;
  double mean() const;
};

/// Per-device battery life under a scenario: the MC campaign supplies each
/// device's SINR, resource share, and transmit power.
LifetimeDistribution lifetime_campaign(const ScenarioConfig& cfg,
                                       const LifetimeParams& lp, int n_trials,
                                       std::uint64_t seed, int n_threads = 0);

}  // namespace uavsim
