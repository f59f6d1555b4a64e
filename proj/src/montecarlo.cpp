#include "uavsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "uavsim/rng.hpp"

namespace uavsim {

double ScenarioConfig::effective_window_half() const {
  if (window_half > 0.0) return window_half;
  return 5.0 / std::sqrt(dens.lambda_b);
}

void ScenarioConfig::validate() const {
  chan.validate();
  proto.validate();
  if (dens.lambda_b <= 0.0 || dens.lambda_u <= 0.0)
    throw std::invalid_argument("scenario: lambda_b, lambda_u must be > 0");
  if (r_cluster <= 0.0 || h_d <= 0.0 || h_terrestrial <= 0.0)
    throw std::invalid_argument("scenario: geometry parameters must be > 0");
  if (p_b <= 0.0 || p_u <= 0.0 || p_m <= 0.0)
    throw std::invalid_argument("scenario: powers must be > 0");
  if (tau_ue.empty() || tau_iot.empty())
    throw std::invalid_argument("scenario: threshold grids must be non-empty");
  if (core_fraction <= 0.0 || core_fraction > 1.0)
    throw std::invalid_argument("scenario: core_fraction must be in (0, 1]");
}

namespace {

bool aggregated(const ScenarioConfig& cfg) {
  return cfg.proto.kind == Protocol::kProposed ||
         cfg.proto.kind == Protocol::kTerrestrial;
}

double dist3d(const Point2& a, const Point2& b, double dz) {
  const double d2 = dist2d(a, b);
  return std::sqrt(d2 * d2 + dz * dz);
}

/// Step rate of the multi-MCS model: log2(1+tau_k) for the largest
/// threshold not exceeding the SINR, zero below the first one.
double rate_bracket(double sinr, const std::vector<double>& tau) {
  double rate = 0.0;
  for (double t : tau) {
    if (sinr >= t)
      rate = std::log2(1.0 + t);
    else
      break;
  }
  return rate;
}

class Shadow {
public:
  Shadow(double sigma_db, std::mt19937_64& rng) : rng_(rng), dist_(0.0, sigma_db) {
    enabled_ = sigma_db > 0.0;
  }
  double operator()() {
    return enabled_ ? db_to_linear(dist_(rng_)) : 1.0;
  }

private:
  std::mt19937_64& rng_;
  std::normal_distribution<double> dist_;
  bool enabled_;
};

}  // namespace

NetworkRealization realize(const ScenarioConfig& cfg, std::mt19937_64& rng) {
  cfg.validate();
  NetworkRealization real;
  real.window = Window{cfg.effective_window_half(), cfg.core_fraction};

  for (int attempt = 0; attempt < 2 && real.bs.empty(); ++attempt)
    real.bs = cfg.hex_bs ? hex_lattice(cfg.dens.lambda_b, real.window)
                         : sample_hppp(cfg.dens.lambda_b, real.window, rng);
  if (real.bs.empty())
    throw std::runtime_error("realize: no BSs sampled after resampling");

  real.ue = sample_hppp(cfg.dens.lambda_u, real.window, rng);
  real.clusters = sample_matern(cfg.dens.lambda_cl, cfg.dens.lambda_m,
                                cfg.r_cluster, real.window, rng);

  real.iot_direct_to_bs = !aggregated(cfg);
  if (!real.iot_direct_to_bs) {
    const double h = cfg.proto.kind == Protocol::kTerrestrial ? cfg.h_terrestrial
                                                              : cfg.h_d;
    real.drones = plan_stops(real.clusters, h);
  }

  real.bs_ues.resize(real.bs.size());
  real.bs_drones.resize(real.bs.size());
  real.bs_iot.resize(real.bs.size());

  real.ue_bs.reserve(real.ue.size());
  for (std::size_t u = 0; u < real.ue.size(); ++u) {
    const auto [b, d] = nearest(real.ue[u], real.bs);
    (void)d;
    real.ue_bs.push_back(b);
    real.bs_ues[b].push_back(u);
  }
  for (std::size_t i = 0; i < real.drones.stops.size(); ++i) {
    const auto [b, d] = nearest(real.drones.stops[i], real.bs);
    (void)d;
    real.drone_bs.push_back(b);
    real.bs_drones[b].push_back(i);
  }
  for (std::size_t c = 0; c < real.clusters.daughters.size(); ++c) {
    for (const auto& p : real.clusters.daughters[c]) {
      NetworkRealization::IotDevice dev;
      dev.pos = p;
      dev.cluster = c;
      if (real.iot_direct_to_bs) {
        dev.serving = nearest(p, real.bs).first;
        real.bs_iot[dev.serving].push_back(real.iot.size());
      } else {
        dev.serving = c;  // one drone per cluster, same index
      }
      real.iot.push_back(dev);
    }
  }
  return real;
}

namespace {

struct TrialContext {
  const NetworkRealization& real;
  const ScenarioConfig& cfg;
  std::mt19937_64& rng;
  Shadow shadow;

  std::vector<std::size_t> scheduled_iot;         // per drone, device index (or npos)
  std::vector<std::vector<std::size_t>> ul_sets;  // per cell, UL snapshot
  std::vector<std::vector<std::size_t>> iot_sets; // per cell, orthogonal IoT snapshot
  std::vector<char> admitted;                     // per IoT device (sharing)
  std::vector<double> drone_interference;         // per drone, W at receiver

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TrialContext(const NetworkRealization& r, const ScenarioConfig& c,
               std::mt19937_64& g)
      : real(r), cfg(c), rng(g), shadow(c.shadowing_sigma_db, g) {}

  // shadowing applies to ground links only; high-elevation air links are
  // LOS-dominated with negligible shadow fading
  double g2g(double d) { return pathloss_g2g(d, cfg.chan) * shadow(); }
  double m2d(double d3, double h) {
    return pathloss_m2d(d3, h, cfg.chan, cfg.los_mode, &rng);
  }
  double b2d(double d3, double h) {
    return pathloss_b2d(d3, h, cfg.chan, cfg.los_mode, &rng);
  }
  double gamma_gain(int shape) { return sample_gamma_gain(shape, rng); }
  double expo() { return sample_gamma_gain(1, rng); }

  /// Per-device transmit power with the optional fractional path loss
  /// compensation around the nominal value.
  double iot_tx_power(const NetworkRealization::IotDevice& dev) {
    if (cfg.fpc_factor <= 0.0) return cfg.p_m;
    double loss_dev, loss_ref;
    if (real.iot_direct_to_bs) {
      loss_dev = pathloss_g2g(dist2d(dev.pos, real.bs[dev.serving]), cfg.chan);
      loss_ref = pathloss_g2g(0.5 / std::sqrt(cfg.dens.lambda_b), cfg.chan);
    } else {
      const double h = real.drones.altitude;
      loss_dev = pathloss_m2d(
          dist3d(dev.pos, real.drones.stops[dev.serving], h), h, cfg.chan,
          LosMode::kExpected);
      const double ref_d =
          std::sqrt(cfg.r_cluster * cfg.r_cluster / 2.0 + h * h);
      loss_ref = pathloss_m2d(ref_d, h, cfg.chan, LosMode::kExpected);
    }
    const double offset_db =
        cfg.fpc_factor * (linear_to_db(loss_ref) - linear_to_db(loss_dev));
    const double p = cfg.p_m * db_to_linear(offset_db);
    return std::clamp(p, cfg.p_m_min, cfg.p_m_max);
  }
};

/// Draw the per-trial scheduling snapshot: one IoT per drone, the UL set
/// of every cell, ACB admissions.
void draw_schedule(TrialContext& ctx) {
  const auto& real = ctx.real;
  const auto& cfg = ctx.cfg;

  if (!real.iot_direct_to_bs) {
    ctx.scheduled_iot.assign(real.drones.stops.size(), TrialContext::npos);
    std::vector<std::vector<std::size_t>> members(real.drones.stops.size());
    for (std::size_t i = 0; i < real.iot.size(); ++i)
      members[real.iot[i].serving].push_back(i);
    for (std::size_t d = 0; d < members.size(); ++d) {
      if (members[d].empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, members[d].size() - 1);
      ctx.scheduled_iot[d] = members[d][pick(ctx.rng)];
    }
  }

  if (cfg.proto.kind == Protocol::kSharing) {
    std::bernoulli_distribution acb(cfg.proto.kappa);
    ctx.admitted.resize(real.iot.size());
    for (auto& a : ctx.admitted) a = acb(ctx.rng) ? 1 : 0;
  }

  ctx.ul_sets.assign(real.bs.size(), {});
  ctx.iot_sets.assign(real.bs.size(), {});
  const std::size_t drone_base = real.ue.size();
  const std::size_t iot_base = drone_base + real.drones.stops.size();
  for (std::size_t c = 0; c < real.bs.size(); ++c) {
    std::vector<std::size_t> roster;
    for (auto u : real.bs_ues[c]) roster.push_back(u);
    if (!real.iot_direct_to_bs)
      for (auto d : real.bs_drones[c]) roster.push_back(drone_base + d);
    if (cfg.proto.kind == Protocol::kSharing)
      for (auto m : real.bs_iot[c])
        if (ctx.admitted[m]) roster.push_back(iot_base + m);
    std::shuffle(roster.begin(), roster.end(), ctx.rng);
    const std::size_t take = std::min<std::size_t>(cfg.proto.u_b, roster.size());
    ctx.ul_sets[c].assign(roster.begin(), roster.begin() + take);

    if (cfg.proto.kind == Protocol::kOrthogonal) {
      std::vector<std::size_t> iot_roster = real.bs_iot[c];
      std::shuffle(iot_roster.begin(), iot_roster.end(), ctx.rng);
      const std::size_t t2 = std::min<std::size_t>(cfg.proto.u_b, iot_roster.size());
      ctx.iot_sets[c].assign(iot_roster.begin(), iot_roster.begin() + t2);
    }
  }
}

/// Aggregate interference-plus-noise at each drone during the IoT slot:
/// every BS transmitting in the DL plus the co-scheduled IoT device of
/// every other drone.
void compute_drone_interference(TrialContext& ctx) {
  const auto& real = ctx.real;
  const auto& cfg = ctx.cfg;
  if (real.iot_direct_to_bs) return;
  const double h = real.drones.altitude;
  const double noise = cfg.include_noise ? cfg.noise_density * cfg.proto.w : 0.0;
  ctx.drone_interference.assign(real.drones.stops.size(), 0.0);
  for (std::size_t d = 0; d < real.drones.stops.size(); ++d) {
    double acc = noise;
    for (const auto& b : real.bs)
      acc += cfg.p_b * ctx.b2d(dist3d(real.drones.stops[d], b, h), h);
    for (std::size_t o = 0; o < real.drones.stops.size(); ++o) {
      if (o == d || ctx.scheduled_iot[o] == TrialContext::npos) continue;
      const auto& dev = real.iot[ctx.scheduled_iot[o]];
      acc += cfg.p_m * ctx.m2d(dist3d(dev.pos, real.drones.stops[d], h), h);
    }
    ctx.drone_interference[d] = acc;
  }
}

std::vector<std::size_t> eval_subset(const PointSet& pts, const Window& w,
                                     double core_fraction, int cap,
                                     std::mt19937_64& rng) {
  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (w.in_core(pts[i], core_fraction)) core.push_back(i);
  std::shuffle(core.begin(), core.end(), rng);
  if (cap > 0 && core.size() > static_cast<std::size_t>(cap))
    core.resize(static_cast<std::size_t>(cap));
  return core;
}

double ul_interferer_power_at(TrialContext& ctx, std::size_t dev_id,
                              const Point2& rx) {
  const auto& real = ctx.real;
  const auto& cfg = ctx.cfg;
  const std::size_t drone_base = real.ue.size();
  const std::size_t iot_base = drone_base + real.drones.stops.size();
  if (dev_id < drone_base)
    return cfg.p_u * ctx.expo() * ctx.g2g(dist2d(real.ue[dev_id], rx));
  if (dev_id < iot_base) {
    const std::size_t d = dev_id - drone_base;
    const double h = real.drones.altitude;
    return cfg.p_u * ctx.expo() *
           ctx.b2d(dist3d(real.drones.stops[d], rx, h), h);
  }
  const auto& dev = real.iot[dev_id - iot_base];
  return cfg.p_m * ctx.expo() * ctx.g2g(dist2d(dev.pos, rx));
}

}  // namespace

TrialMetrics evaluate_trial(const NetworkRealization& real,
                            const ScenarioConfig& cfg, std::mt19937_64& rng) {
  TrialMetrics out;
  TrialContext ctx(real, cfg, rng);
  draw_schedule(ctx);
  if (cfg.eval_iot) compute_drone_interference(ctx);

  const bool agg = aggregated(cfg);
  const double w_ue_band =
      cfg.proto.kind == Protocol::kOrthogonal ? cfg.proto.w_ue : cfg.proto.w;
  const double w_iot_band = cfg.proto.kind == Protocol::kOrthogonal
                                ? cfg.proto.w - cfg.proto.w_ue
                                : cfg.proto.w;
  const double dl_noise =
      cfg.include_noise ? cfg.noise_density * w_ue_band : 0.0;

  // ---- UE downlink and uplink ----
  const auto ue_eval =
      cfg.eval_ue ? eval_subset(real.ue, real.window, cfg.core_fraction,
                                cfg.max_eval_ue, rng)
                  : std::vector<std::size_t>{};
  for (std::size_t u : ue_eval) {
    const Point2& pos = real.ue[u];
    const std::size_t tagged = real.ue_bs[u];

    // DL slot: every other BS transmits; aggregated protocols add one
    // active IoT transmitter per drone.
    const double sig_dl = (cfg.p_b / cfg.proto.u_b) *
                          ctx.gamma_gain(cfg.chan.delta_b()) *
                          ctx.g2g(dist2d(pos, real.bs[tagged]));
    double interf = 0.0;
    for (std::size_t b = 0; b < real.bs.size(); ++b) {
      if (b == tagged) continue;
      interf += (cfg.p_b / cfg.proto.u_b) * ctx.gamma_gain(cfg.chan.psi_b()) *
                ctx.g2g(dist2d(pos, real.bs[b]));
    }
    if (agg) {
      for (std::size_t d = 0; d < real.drones.stops.size(); ++d) {
        if (ctx.scheduled_iot[d] == TrialContext::npos) continue;
        const auto& dev = real.iot[ctx.scheduled_iot[d]];
        interf += cfg.p_m * ctx.expo() * ctx.g2g(dist2d(dev.pos, pos));
      }
    }
    out.ue_dl_sir.push_back(interf > 0.0
                                ? sig_dl / interf
                                : std::numeric_limits<double>::infinity());
    const double sinr_dl = sig_dl / (interf + dl_noise);
    const std::size_t n_dl = real.bs_ues[tagged].size();
    const double beta_dl =
        std::min(w_ue_band * cfg.proto.t2 * cfg.proto.u_b / double(n_dl),
                 w_ue_band * cfg.proto.t2);
    out.ue_dl_se.push_back(beta_dl * rate_bracket(sinr_dl, cfg.tau_ue));

    // UL slot: desired at the tagged BS; other cells' UL snapshots interfere.
    const Point2& rx = real.bs[tagged];
    const double sig_ul = cfg.p_u * ctx.gamma_gain(cfg.chan.delta_b()) *
                          ctx.g2g(dist2d(pos, rx));
    double interf_ul = cfg.include_noise ? cfg.noise_density * w_ue_band : 0.0;
    for (std::size_t c = 0; c < real.bs.size(); ++c) {
      if (c == tagged) continue;
      for (std::size_t dev_id : ctx.ul_sets[c])
        interf_ul += ul_interferer_power_at(ctx, dev_id, rx);
    }
    const double sinr_ul = sig_ul / interf_ul;
    std::size_t n_ul = real.bs_ues[tagged].size();
    if (agg) n_ul += real.bs_drones[tagged].size();
    if (cfg.proto.kind == Protocol::kSharing)
      for (auto m : real.bs_iot[tagged])
        if (ctx.admitted[m]) ++n_ul;
    const double beta_ul =
        std::min(w_ue_band * cfg.proto.t1 * cfg.proto.u_b / double(n_ul),
                 w_ue_band * cfg.proto.t1);
    out.ue_ul_se.push_back(beta_ul * rate_bracket(sinr_ul, cfg.tau_ue));
  }

  // ---- IoT devices ----
  PointSet iot_pos;
  if (cfg.eval_iot) {
    iot_pos.reserve(real.iot.size());
    for (const auto& d : real.iot) iot_pos.push_back(d.pos);
  }
  const auto iot_eval = eval_subset(iot_pos, real.window, cfg.core_fraction,
                                    cfg.max_eval_iot, rng);
  const double iot_noise =
      cfg.include_noise ? cfg.noise_density * w_iot_band : 0.0;
  for (std::size_t i : iot_eval) {
    const auto& dev = real.iot[i];
    const double p_dev = ctx.iot_tx_power(dev);
    double sinr = 0.0;
    double share = 0.0;
    if (agg) {
      const double h = real.drones.altitude;
      const Point2& stop = real.drones.stops[dev.serving];
      const double sig = p_dev * ctx.m2d(dist3d(dev.pos, stop, h), h);
      sinr = sig / ctx.drone_interference[dev.serving];
      const std::size_t n_cluster =
          real.clusters.daughters[dev.cluster].size();
      share = std::min(cfg.proto.w * cfg.proto.t2 / double(n_cluster),
                       cfg.proto.w * cfg.proto.t2);
    } else if (cfg.proto.kind == Protocol::kSharing) {
      if (ctx.admitted[i]) {
        const Point2& rx = real.bs[dev.serving];
        const double sig = p_dev * ctx.gamma_gain(cfg.chan.delta_b()) *
                           ctx.g2g(dist2d(dev.pos, rx));
        double interf = cfg.include_noise ? cfg.noise_density * cfg.proto.w : 0.0;
        for (std::size_t c = 0; c < real.bs.size(); ++c) {
          if (c == dev.serving) continue;
          for (std::size_t dev_id : ctx.ul_sets[c])
            interf += ul_interferer_power_at(ctx, dev_id, rx);
        }
        sinr = sig / interf;
        std::size_t n_ul = real.bs_ues[dev.serving].size();
        for (auto m : real.bs_iot[dev.serving])
          if (ctx.admitted[m]) ++n_ul;
        share = std::min(cfg.proto.w * cfg.proto.t1 * cfg.proto.u_b / double(n_ul),
                         cfg.proto.w * cfg.proto.t1);
      }
    } else {  // orthogonal: IoT band, IoT-only interference
      const Point2& rx = real.bs[dev.serving];
      const double sig = p_dev * ctx.gamma_gain(cfg.chan.delta_b()) *
                         ctx.g2g(dist2d(dev.pos, rx));
      double interf = iot_noise;
      for (std::size_t c = 0; c < real.bs.size(); ++c) {
        if (c == dev.serving) continue;
        for (std::size_t m : ctx.iot_sets[c])
          interf += cfg.p_m * ctx.expo() * ctx.g2g(dist2d(real.iot[m].pos, rx));
      }
      sinr = sig / interf;
      const std::size_t n_iot =
          std::max<std::size_t>(real.bs_iot[dev.serving].size(), 1);
      share = std::min(w_iot_band * cfg.proto.t1 * cfg.proto.u_b / double(n_iot),
                       w_iot_band * cfg.proto.t1);
    }
    const double rate = share * rate_bracket(sinr, cfg.tau_iot);
    out.iot_sinr.push_back(sinr);
    out.iot_share.push_back(share);
    out.iot_power.push_back(p_dev);
    out.iot_ee.push_back(rate / (cfg.p_cp + p_dev / cfg.eta));
  }

  // ---- ISR at the nearest UE of each scheduled IoT transmitter ----
  if (cfg.eval_isr && agg && !real.ue.empty()) {
    for (std::size_t d = 0; d < real.drones.stops.size(); ++d) {
      if (ctx.scheduled_iot[d] == TrialContext::npos) continue;
      const auto& dev = real.iot[ctx.scheduled_iot[d]];
      if (!real.window.in_core(dev.pos, cfg.core_fraction)) continue;
      const auto [u, z_m] = nearest(dev.pos, real.ue);
      const double z_b = dist2d(real.ue[u], real.bs[real.ue_bs[u]]);
      const double num =
          cfg.p_m * std::pow(std::max(z_m, 1.0), -cfg.chan.alpha_g);
      const double den = (cfg.chan.delta_b() * cfg.p_b / cfg.proto.u_b) *
                         std::pow(std::max(z_b, 1.0), -cfg.chan.alpha_g);
      out.ue_isr.push_back(num / den);
    }
  }
  return out;
}

MetricSummary summarize(const std::vector<std::vector<double>>& per_trial) {
  MetricSummary s;
  std::vector<double> trial_means;
  for (const auto& t : per_trial) {
    if (t.empty()) continue;
    s.samples.insert(s.samples.end(), t.begin(), t.end());
    trial_means.push_back(std::accumulate(t.begin(), t.end(), 0.0) /
                          double(t.size()));
  }
  if (s.samples.empty()) return s;
  s.mean = std::accumulate(s.samples.begin(), s.samples.end(), 0.0) /
           double(s.samples.size());
  std::vector<double> sorted = s.samples;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                   sorted.end());
  s.median = sorted[sorted.size() / 2];
  if (trial_means.size() > 1) {
    double var = 0.0;
    const double m = std::accumulate(trial_means.begin(), trial_means.end(), 0.0) /
                     double(trial_means.size());
    for (double x : trial_means) var += (x - m) * (x - m);
    var /= double(trial_means.size() - 1);
    s.ci95 = 1.96 * std::sqrt(var / double(trial_means.size()));
  }
  return s;
}

namespace {

std::vector<TrialMetrics> run_trials(const ScenarioConfig& cfg, int n_trials,
                                     std::uint64_t seed, int n_threads) {
  if (n_trials < 1) throw std::invalid_argument("run_campaign: n_trials >= 1");
  if (n_threads <= 0)
    n_threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<TrialMetrics> results(n_trials);
  RngStreams streams(seed);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= n_trials) return;
      auto rng = streams.stream(streams::kTrial, static_cast<std::uint64_t>(t));
      const auto real = realize(cfg, rng);
      results[t] = evaluate_trial(real, cfg, rng);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

CampaignSummary run_campaign(const ScenarioConfig& cfg, int n_trials,
                             std::uint64_t seed, int n_threads) {
  ScenarioConfig sc = cfg;
  sc.eval_isr = false;
  const auto trials = run_trials(sc, n_trials, seed, n_threads);
  CampaignSummary sum;
  sum.n_trials = n_trials;
  std::vector<std::vector<double>> dl, ul, ee, sinr;
  for (const auto& t : trials) {
    dl.push_back(t.ue_dl_se);
    ul.push_back(t.ue_ul_se);
    ee.push_back(t.iot_ee);
    sinr.push_back(t.iot_sinr);
  }
  sum.ue_dl_se = summarize(dl);
  sum.ue_ul_se = summarize(ul);
  sum.iot_ee = summarize(ee);
  sum.iot_sinr = summarize(sinr);
  return sum;
}

CoverageEstimate estimate_coverage(const ScenarioConfig& cfg,
                                   const std::vector<double>& tau_grid,
                                   int n_trials, std::uint64_t seed,
                                   int n_threads) {
  ScenarioConfig sc = cfg;
  sc.eval_iot = false;
  sc.eval_isr = false;
  const auto trials = run_trials(sc, n_trials, seed, n_threads);
  CoverageEstimate est;
  est.tau = tau_grid;
  est.ccdf.resize(tau_grid.size());
  est.ci95.resize(tau_grid.size());
  for (std::size_t k = 0; k < tau_grid.size(); ++k) {
    std::vector<double> props;
    for (const auto& t : trials) {
      if (t.ue_dl_sir.empty()) continue;
      int hit = 0;
      for (double s : t.ue_dl_sir)
        if (s >= tau_grid[k]) ++hit;
      props.push_back(double(hit) / double(t.ue_dl_sir.size()));
    }
    if (props.empty()) continue;
    const double m =
        std::accumulate(props.begin(), props.end(), 0.0) / double(props.size());
    double var = 0.0;
    for (double p : props) var += (p - m) * (p - m);
    var /= props.size() > 1 ? double(props.size() - 1) : 1.0;
    est.ccdf[k] = m;
    est.ci95[k] = 1.96 * std::sqrt(var / double(props.size()));
  }
  return est;
}

double mc_isr_tail(const ScenarioConfig& cfg, double rho, int n_trials,
                   std::uint64_t seed) {
  ScenarioConfig sc = cfg;
  sc.eval_ue = false;
  sc.eval_iot = false;
  const auto trials = run_trials(sc, n_trials, seed, 0);
  long long hit = 0, total = 0;
  for (const auto& t : trials)
    for (double v : t.ue_isr) {
      ++total;
      if (v >= rho) ++hit;
    }
  if (total == 0) throw std::runtime_error("mc_isr_tail: no ISR samples");
  return double(hit) / double(total);
}

CampaignDeviceData run_device_campaign(const ScenarioConfig& cfg, int n_trials,
                                       std::uint64_t seed, int n_threads) {
  ScenarioConfig sc = cfg;
  sc.eval_ue = false;
  sc.eval_isr = false;
  const auto trials = run_trials(sc, n_trials, seed, n_threads);
  CampaignDeviceData data;
  for (const auto& t : trials) {
    data.iot_sinr.insert(data.iot_sinr.end(), t.iot_sinr.begin(),
                         t.iot_sinr.end());
    data.iot_share.insert(data.iot_share.end(), t.iot_share.begin(),
                          t.iot_share.end());
    data.iot_power.insert(data.iot_power.end(), t.iot_power.begin(),
                          t.iot_power.end());
  }
  return data;
}

}  // namespace uavsim
