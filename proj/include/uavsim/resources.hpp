#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace uavsim {

enum class Protocol { kProposed, kSharing, kOrthogonal, kTerrestrial };

/// Protocol selection plus the TDD frame split and bandwidth budget.
struct ProtocolConfig {
  Protocol kind = Protocol::kProposed;
  double kappa = 1.0;    // ACB admission probability (sharing only)
  double w_ue = 0.0;     // Hz reserved for UEs (orthogonal only)
  double t1 = 0.5;       // UL slot fraction
  double t2 = 0.5;       // DL slot fraction
  double w = 20e6;       // Hz
  int u_b = 4;           // spatial multiplexing order

  void validate() const {
    if (t1 < 0.0 || t2 < 0.0 || std::abs(t1 + t2 - 1.0) > 1e-12)
      throw std::invalid_argument("protocol: T1, T2 must be >= 0 and sum to 1");
    if (kappa < 0.0 || kappa > 1.0)
      throw std::invalid_argument("protocol: kappa must be in [0, 1]");
    if (w <= 0.0) throw std::invalid_argument("protocol: bandwidth must be > 0");
    if (w_ue < 0.0 || w_ue > w)
      throw std::invalid_argument("protocol: w_ue must be in [0, W]");
    if (u_b < 1) throw std::invalid_argument("protocol: u_b must be >= 1");
  }
};

struct Densities {
  double lambda_b = 0.0;   // BSs / m^2
  double lambda_u = 0.0;   // UEs / m^2
  double lambda_d = 0.0;   // drones / m^2 (= lambda_cl when one per cluster)
  double lambda_cl = 0.0;  // clusters / m^2
  double lambda_m = 0.0;   // mean IoT devices per cluster
};

/// Long-term time-frequency-space resource per typical device, in Hz.
struct ResourceShares {
  double ue_ul = 0.0;
  double ue_dl = 0.0;
  double iot = 0.0;
};

ResourceShares shares_proposed(const Densities& d, const ProtocolConfig& cfg);
ResourceShares shares_sharing(const Densities& d, const ProtocolConfig& cfg);
ResourceShares shares_orthogonal(const Densities& d, const ProtocolConfig& cfg);

/// Mean shares for the configured protocol (terrestrial aggregation uses
/// the proposed-protocol arithmetic).
ResourceShares mean_shares(const Densities& d, const ProtocolConfig& cfg);

struct NetworkRealization;

/// Frame-by-frame round-robin scheduling with the actual per-cell
/// populations; long-run average share per device in the core window.
/// Checks per-cell conservation (sum of UL grants <= W*U_B*T1) as it goes.
ResourceShares scheduler_oracle(const NetworkRealization& real,
                                const ProtocolConfig& cfg, int n_frames,
                                std::uint64_t seed);

}  // namespace uavsim
