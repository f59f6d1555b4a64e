#include "uavsim/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uavsim {

void LifetimeParams::validate() const {
  if (battery_j <= 0.0 || payload_bits <= 0.0)
    throw std::invalid_argument("lifetime: battery and payload must be > 0");
  if (n_rep < 1) throw std::invalid_argument("lifetime: n_rep must be >= 1");
  if (p_rx < 0.0 || p_idle < 0.0 || p_sleep < 0.0)
    throw std::invalid_argument("lifetime: powers must be >= 0");
  if (t_rx < 0.0 || t_idle < 0.0 || t_sleep <= 0.0)
    throw std::invalid_argument("lifetime: durations must be >= 0");
  if (eta <= 0.0 || eta > 1.0)
    throw std::invalid_argument("lifetime: eta must be in (0, 1]");
  if (max_tx_s <= 0.0) throw std::invalid_argument("lifetime: max_tx_s must be > 0");
}

std::optional<double> tx_duration(double rate_bps, const LifetimeParams& lp) {
  if (rate_bps <= 0.0) return std::nullopt;
  const double t = lp.payload_bits / rate_bps;
  if (t > lp.max_tx_s) return std::nullopt;
  return t;
}

double daily_energy(double t_tx, double p_m_w, const LifetimeParams& lp) {
  const double per_report = t_tx * (lp.p_cp + p_m_w / lp.eta) +
                            lp.t_rx * lp.p_rx + lp.t_idle * lp.p_idle;
  return lp.n_rep * per_report + lp.t_sleep * lp.p_sleep;
}

double lifetime_years(double t_tx, double p_m_w, const LifetimeParams& lp) {
  return lp.battery_j / daily_energy(t_tx, p_m_w, lp) / 365.0;
}

double LifetimeDistribution::quantile(double q) const {
  if (years.empty()) throw std::runtime_error("lifetime quantile: empty sample");
  const double pos = std::clamp(q, 0.0, 1.0) * double(years.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, years.size() - 1);
  const double frac = pos - double(lo);
  return years[lo] * (1.0 - frac) + years[hi] * frac;
}

double LifetimeDistribution::mean() const {
  if (years.empty()) return 0.0;
  return std::accumulate(years.begin(), years.end(), 0.0) / double(years.size());
}

LifetimeDistribution lifetime_campaign(const ScenarioConfig& cfg,
                                       const LifetimeParams& lp, int n_trials,
                                       std::uint64_t seed, int n_threads) {
  lp.validate();
  const auto data = run_device_campaign(cfg, n_trials, seed, n_threads);
  LifetimeDistribution out;
  for (std::size_t i = 0; i < data.iot_sinr.size(); ++i) {
    ++out.total;
    double rate = 0.0;
    for (double t : cfg.tau_iot) {
      if (data.iot_sinr[i] >= t)
        rate = std::log2(1.0 + t);
      else
        break;
    }
    rate *= data.iot_share[i];
    const auto t_tx = tx_duration(rate, lp);
    if (!t_tx) {
      ++out.censored;
      continue;
    }
    out.years.push_back(lifetime_years(*t_tx, data.iot_power[i], lp));
  }
  std::sort(out.years.begin(), out.years.end());
  return out;
}

}  // namespace uavsim
