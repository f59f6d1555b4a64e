#pragma once

#include <cmath>
#include <random>

namespace uavsim {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Propagation constants and fading shapes. All gains linear.
struct ChannelParams {
  double alpha_g = 3.5;    // ground-to-ground path loss exponent
  double alpha_a = 2.2;    // ground-to-air path loss exponent
  double l0 = 1.58489e-4;  // gain at 1 m (-38 dB)
  double l_nlos = 0.01;    // excess NLOS loss (-20 dB)
  double l_str = 0.001;    // BS array steering loss toward the air (-30 dB)
  double xi1 = 18.0;       // m, LOS model constant
  double xi2 = 63.0;       // m, LOS model constant
  int m_b = 32;            // BS antennas
  int u_b = 4;             // spatially multiplexed users

  int delta_b() const { return m_b - u_b + 1; }  // desired-link Gamma shape
  int psi_b() const { return u_b; }              // interferer Gamma shape
  double delta_g() const { return 2.0 / alpha_g; }
  double delta_a() const { return 2.0 / alpha_a; }

  void validate() const;
};

/// Mean-LOS prefactors entering the single-cell analytics.
struct DerivedConstants {
  double l_m = 0.0;        // device->aggregator mean-LOS prefactor
  double l_b = 0.0;        // BS->aggregator mean-LOS prefactor (incl. steering)
  double l_m_median = 0.0; // median-signal prefactor: l_m*(R^2/2+h^2)^(-1/delta_a)
  double delta_g = 0.0;
  double delta_a = 0.0;
};

enum class LosMode { kExpected, kSampled };

/// 3GPP-style LOS probability as a function of the 2D distance.
double los_probability(double r_2d, double h_d, const ChannelParams& p);

/// L0 * d^(-alpha_g); d clamped below at 1 m.
double pathloss_g2g(double d, const ChannelParams& p);

/// Device-to-aggregator ground-to-air loss. In expected mode the LOS and
/// NLOS branches are mixed by the LOS probability; in sampled mode one
/// branch is drawn per call.
double pathloss_m2d(double d_3d, double h_d, const ChannelParams& p,
                    LosMode mode, std::mt19937_64* rng = nullptr);

/// BS-to-aggregator loss: pathloss_m2d scaled by the steering loss.
double pathloss_b2d(double d_3d, double h_d, const ChannelParams& p,
                    LosMode mode, std::mt19937_64* rng = nullptr);

/// E[P_LOS] over a device area-uniform on the disk of radius r around the
/// aggregator (numerical quadrature, 1e-6 absolute).
double mean_los_m2d(double r, double h_d, const ChannelParams& p);

/// E[P_LOS] over the nearest-BS 2D distance, density 2*pi*lam*y*exp(-pi*lam*y^2).
double mean_los_b2d(double lambda_b, double h_d, const ChannelParams& p);

/// Gamma(shape, 1) channel power gain; shape 1 is Exponential(1).
double sample_gamma_gain(int shape, std::mt19937_64& rng);

/// Assemble the mean-LOS prefactors for a cluster of radius r served from
/// altitude h_d in a network of BS density lambda_b.
DerivedConstants derive_constants(const ChannelParams& p, double r, double h_d,
                                  double lambda_b);

}  // namespace uavsim
