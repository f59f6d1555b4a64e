#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uavsim/channel.hpp"
#include "uavsim/geometry.hpp"
#include "uavsim/resources.hpp"

namespace uavsim {

/// Everything a trial needs: densities, channel, protocol, powers.
struct ScenarioConfig {
  ChannelParams chan;
  ProtocolConfig proto;
  Densities dens;          // lambda_d/lambda_cl per m^2; lambda_m per cluster
  double r_cluster = 50.0;       // m
  double h_d = 50.0;             // m, drone altitude
  double h_terrestrial = 10.0;   // m, terrestrial aggregator height
  double p_b = 39.8107;          // W (46 dBm)
  double p_u = 0.199526;         // W (23 dBm)
  double p_m = 0.199526;         // W, IoT nominal power
  double p_m_min = 0.00125893;   // W (1 dBm)
  double p_m_max = 0.199526;     // W (23 dBm)
  double fpc_factor = 0.0;       // per-device fractional power control; 0 = off
  double p_cp = 0.09;            // W
  double eta = 0.44;
  double noise_density = 3.98107e-21;  // W/Hz (-174 dBm/Hz)
  bool include_noise = true;
  double window_half = 0.0;      // m; 0 -> auto (5 / sqrt(lambda_b))
  double core_fraction = 0.5;    // guard-zone rule
  double shadowing_sigma_db = 0.0;  // optional log-normal on path loss
  bool hex_bs = false;
  LosMode los_mode = LosMode::kSampled;  // per-draw vs probability-weighted g2a
  std::vector<double> tau_ue;    // linear SE thresholds, increasing
  std::vector<double> tau_iot;
  int max_eval_ue = 200;         // victims evaluated per trial (0 = all)
  int max_eval_iot = 200;
  // metric groups; estimators switch off what they do not consume
  bool eval_ue = true;           // UE DL and UL blocks
  bool eval_iot = true;          // per-device IoT block
  bool eval_isr = true;          // ISR samples at nearest UEs

  double effective_window_half() const;
  void validate() const;
};

/// One sampled topology with all association maps resolved.
struct NetworkRealization {
  Window window;
  PointSet bs;
  PointSet ue;
  ClusterSet clusters;
  DronePlan drones;                       // empty stops when no aggregators
  std::vector<std::size_t> ue_bs;         // per UE, nearest BS
  std::vector<std::size_t> drone_bs;      // per drone, nearest BS

  struct IotDevice {
    Point2 pos;
    std::size_t cluster = 0;
    std::size_t serving = 0;  // drone index (aggregated) or BS index (direct)
  };
  std::vector<IotDevice> iot;             // flattened daughters
  bool iot_direct_to_bs = false;          // sharing / orthogonal association

  std::vector<std::vector<std::size_t>> bs_ues;     // per-cell attached UEs
  std::vector<std::vector<std::size_t>> bs_drones;  // per-cell attached drones
  std::vector<std::vector<std::size_t>> bs_iot;     // per-cell attached IoT
};

/// Per-device metrics of one trial, core-window devices only.
struct TrialMetrics {
  std::vector<double> ue_dl_se;   // bits/s
  std::vector<double> ue_ul_se;   // bits/s
  std::vector<double> ue_dl_sir;  // linear, noise-free (coverage validation)
  std::vector<double> iot_ee;     // bits/joule
  std::vector<double> iot_sinr;   // linear
  std::vector<double> iot_share;  // Hz, actual-load resource of the device
  std::vector<double> iot_power;  // W, per-device transmit power
  std::vector<double> ue_isr;     // linear ISR at nearest UE of scheduled IoT
};

struct MetricSummary {
  double mean = 0.0;
  double median = 0.0;
  double ci95 = 0.0;  // half-width from trial-level batching
  std::vector<double> samples;
};

struct CampaignSummary {
  MetricSummary ue_dl_se;
  MetricSummary ue_ul_se;
  MetricSummary iot_ee;
  MetricSummary iot_sinr;
  int n_trials = 0;
};

/// Sample a topology and resolve every association map.
NetworkRealization realize(const ScenarioConfig& cfg, std::mt19937_64& rng);

/// Evaluate one realization: schedule, draw fading/LOS, compute per-device
/// SINR, SE, and EE with the actual per-cell loads.
TrialMetrics evaluate_trial(const NetworkRealization& real,
                            const ScenarioConfig& cfg, std::mt19937_64& rng);

/// Independent trials with per-trial derived seeds; deterministic for a
/// fixed seed regardless of thread count.
CampaignSummary run_campaign(const ScenarioConfig& cfg, int n_trials,
                             std::uint64_t seed, int n_threads = 0);

struct CoverageEstimate {
  std::vector<double> tau;       // linear grid
  std::vector<double> ccdf;      // P(SIR >= tau)
  std::vector<double> ci95;      // half-widths
};

/// Empirical UE DL SIR CCDF on a threshold grid (no-IoT when the scenario
/// has lambda_d = 0 or a protocol without aggregators in the DL slot).
CoverageEstimate estimate_coverage(const ScenarioConfig& cfg,
                                   const std::vector<double>& tau_grid,
                                   int n_trials, std::uint64_t seed,
                                   int n_threads = 0);

/// MC estimate of P(ISR >= rho) over sampled UE/BS/IoT geometry.
double mc_isr_tail(const ScenarioConfig& cfg, double rho, int n_trials,
                   std::uint64_t seed);

/// Raw per-device material for the lifetime evaluation.
struct CampaignDeviceData {
  std::vector<double> iot_sinr;
  std::vector<double> iot_share;
  std::vector<double> iot_power;
};

CampaignDeviceData run_device_campaign(const ScenarioConfig& cfg, int n_trials,
                                       std::uint64_t seed, int n_threads = 0);

MetricSummary summarize(const std::vector<std::vector<double>>& per_trial);

}  // namespace uavsim
