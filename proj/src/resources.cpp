#include "uavsim/resources.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "uavsim/montecarlo.hpp"

namespace uavsim {

namespace {

void check(const Densities& d, const ProtocolConfig& cfg) {
  cfg.validate();
  if (d.lambda_b <= 0.0) throw std::invalid_argument("shares: lambda_b must be > 0");
  if (d.lambda_u <= 0.0)
    throw std::invalid_argument("shares: lambda_u = 0 leaves the typical UE undefined");
  if (d.lambda_m <= 0.0)
    throw std::invalid_argument("shares: lambda_m = 0 leaves the typical IoT device undefined");
}

}  // namespace

ResourceShares shares_proposed(const Densities& d, const ProtocolConfig& cfg) {
  check(d, cfg);
  ResourceShares s;
  s.ue_ul = cfg.w * cfg.u_b * cfg.t1 * d.lambda_b / (d.lambda_u + d.lambda_d);
  s.ue_dl = cfg.w * cfg.u_b * cfg.t2 * d.lambda_b / d.lambda_u;
  s.iot = cfg.w * cfg.t2 / d.lambda_m;
  return s;
}

ResourceShares shares_sharing(const Densities& d, const ProtocolConfig& cfg) {
  check(d, cfg);
  const double ul_load = d.lambda_u + cfg.kappa * d.lambda_m * d.lambda_cl;
  ResourceShares s;
  s.ue_ul = cfg.w * cfg.u_b * cfg.t1 * d.lambda_b / ul_load;
  s.ue_dl = cfg.w * cfg.u_b * cfg.t2 * d.lambda_b / d.lambda_u;
  s.iot = cfg.w * cfg.u_b * cfg.kappa * cfg.t1 * d.lambda_b / ul_load;
  return s;
}

ResourceShares shares_orthogonal(const Densities& d, const ProtocolConfig& cfg) {
  check(d, cfg);
  if (d.lambda_cl <= 0.0)
    throw std::invalid_argument("shares_orthogonal: lambda_cl must be > 0");
  ResourceShares s;
  s.ue_ul = cfg.w_ue * cfg.u_b * cfg.t1 * d.lambda_b / d.lambda_u;
  s.ue_dl = cfg.w_ue * cfg.u_b * cfg.t2 * d.lambda_b / d.lambda_u;
  s.iot = (cfg.w - cfg.w_ue) * cfg.u_b * cfg.t1 * d.lambda_b /
          (d.lambda_m * d.lambda_cl);
  return s;
}

ResourceShares mean_shares(const Densities& d, const ProtocolConfig& cfg) {
  switch (cfg.kind) {
    case Protocol::kSharing:
      return shares_sharing(d, cfg);
    case Protocol::kOrthogonal:
      return shares_orthogonal(d, cfg);
    default:
      return shares_proposed(d, cfg);
  }
}

namespace {

/// Per-cell round-robin queue; schedules up to u_b eligible entries a frame.
struct CellQueue {
  std::vector<std::size_t> order;
  std::size_t next = 0;

  template <typename Eligible, typename Grant>
  void run_frame(int u_b, const Eligible& eligible, const Grant& grant) {
    if (order.empty()) return;
    int granted = 0;
    for (std::size_t step = 0; step < order.size() && granted < u_b; ++step) {
      const std::size_t dev = order[next];
      next = (next + 1) % order.size();
      if (eligible(dev)) {
        grant(dev);
        ++granted;
      }
    }
  }
};

}  // namespace

ResourceShares scheduler_oracle(const NetworkRealization& real,
                                const ProtocolConfig& cfg, int n_frames,
                                std::uint64_t seed) {
  cfg.validate();
  if (real.bs.empty()) throw std::invalid_argument("scheduler_oracle: no BSs");
  if (n_frames < 1) throw std::invalid_argument("scheduler_oracle: n_frames >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution acb(cfg.kappa);

  const bool aggregated = cfg.kind == Protocol::kProposed ||
                          cfg.kind == Protocol::kTerrestrial;
  const double w_ue_band = cfg.kind == Protocol::kOrthogonal ? cfg.w_ue : cfg.w;
  const double w_iot_band =
      cfg.kind == Protocol::kOrthogonal ? cfg.w - cfg.w_ue : cfg.w;

  const std::size_t n_ue = real.ue.size();
  const std::size_t n_iot = real.iot.size();
  std::vector<double> ue_ul_acc(n_ue, 0.0), ue_dl_acc(n_ue, 0.0),
      iot_acc(n_iot, 0.0);

  // UL queues: UEs (+ drones when aggregated, + IoT when sharing).
  // Device ids: [0, n_ue) UEs, [n_ue, n_ue+n_drones) drones,
  // [n_ue+n_drones, ...) IoT.
  const std::size_t drone_base = n_ue;
  const std::size_t iot_base = n_ue + real.drones.stops.size();
  std::vector<CellQueue> ul(real.bs.size()), dl(real.bs.size());
  std::vector<CellQueue> iot_direct(real.bs.size());
  for (std::size_t c = 0; c < real.bs.size(); ++c) {
    for (auto u : real.bs_ues[c]) {
      ul[c].order.push_back(u);
      dl[c].order.push_back(u);
    }
    if (aggregated)
      for (auto dr : real.bs_drones[c]) ul[c].order.push_back(drone_base + dr);
    if (cfg.kind == Protocol::kSharing)
      for (auto m : real.bs_iot[c]) ul[c].order.push_back(iot_base + m);
    if (cfg.kind == Protocol::kOrthogonal)
      for (auto m : real.bs_iot[c]) iot_direct[c].order.push_back(m);
  }
  // aggregated IoT: one device per drone per frame
  std::vector<CellQueue> per_drone(real.drones.stops.size());
  if (aggregated)
    for (std::size_t i = 0; i < n_iot; ++i)
      per_drone[real.iot[i].serving].order.push_back(i);

  for (int frame = 0; frame < n_frames; ++frame) {
    // ACB redraw per frame (sharing only)
    std::vector<char> admitted;
    if (cfg.kind == Protocol::kSharing) {
      admitted.resize(n_iot);
      for (std::size_t i = 0; i < n_iot; ++i) admitted[i] = acb(rng) ? 1 : 0;
    }
    for (std::size_t c = 0; c < real.bs.size(); ++c) {
      double cell_ul_budget = 0.0;
      ul[c].run_frame(
          cfg.u_b,
          [&](std::size_t dev) {
            return dev < iot_base || admitted[dev - iot_base];
          },
          [&](std::size_t dev) {
            const double grant = w_ue_band * cfg.t1;
            cell_ul_budget += grant;
            if (dev < drone_base)
              ue_ul_acc[dev] += grant;
            else if (dev >= iot_base)
              iot_acc[dev - iot_base] += grant;
            // drone grants tracked only through the budget
          });
      if (cell_ul_budget > w_ue_band * cfg.u_b * cfg.t1 + 1e-6)
        throw std::runtime_error("scheduler_oracle: UL conservation violated");
      dl[c].run_frame(
          cfg.u_b, [](std::size_t) { return true; },
          [&](std::size_t dev) { ue_dl_acc[dev] += w_ue_band * cfg.t2; });
      if (cfg.kind == Protocol::kOrthogonal)
        iot_direct[c].run_frame(
            cfg.u_b, [](std::size_t) { return true; },
            [&](std::size_t dev) { iot_acc[dev] += w_iot_band * cfg.t1; });
    }
    if (aggregated)
      for (auto& q : per_drone)
        q.run_frame(1, [](std::size_t) { return true; },
                    [&](std::size_t dev) { iot_acc[dev] += cfg.w * cfg.t2; });
  }

  // typical-device share: average over devices in the core sub-window
  ResourceShares out;
  double n_core_ue = 0.0, n_core_iot = 0.0;
  for (std::size_t u = 0; u < n_ue; ++u) {
    if (!real.window.in_core(real.ue[u])) continue;
    out.ue_ul += ue_ul_acc[u];
    out.ue_dl += ue_dl_acc[u];
    n_core_ue += 1.0;
  }
  for (std::size_t i = 0; i < n_iot; ++i) {
    if (!real.window.in_core(real.iot[i].pos)) continue;
    out.iot += iot_acc[i];
    n_core_iot += 1.0;
  }
  const double frames = static_cast<double>(n_frames);
  if (n_core_ue > 0.0) {
    out.ue_ul /= frames * n_core_ue;
    out.ue_dl /= frames * n_core_ue;
  }
  if (n_core_iot > 0.0) out.iot /= frames * n_core_iot;
  return out;
}

}  // namespace uavsim
