#include "uavsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavsim/quadrature.hpp"

namespace uavsim {

void ChannelParams::validate() const {
  if (alpha_g <= 2.0) throw std::invalid_argument("channel: alpha_g must be > 2");
  if (alpha_a < 2.0) throw std::invalid_argument("channel: alpha_a must be >= 2");
  if (l0 <= 0.0) throw std::invalid_argument("channel: l0 must be > 0");
  if (l_nlos <= 0.0 || l_nlos > 1.0)
    throw std::invalid_argument("channel: l_nlos must be in (0, 1]");
  if (l_str <= 0.0 || l_str > 1.0)
    throw std::invalid_argument("channel: l_str must be in (0, 1]");
  if (xi1 <= 0.0 || xi2 <= 0.0)
    throw std::invalid_argument("channel: xi1, xi2 must be > 0");
  if (m_b < 1 || u_b < 1 || u_b > m_b)
    throw std::invalid_argument("channel: need 1 <= u_b <= m_b");
}

double los_probability(double r_2d, double h_d, const ChannelParams& p) {
  if (r_2d < 0.0) throw std::invalid_argument("los_probability: negative distance");
  if (h_d <= 0.0) throw std::invalid_argument("los_probability: altitude must be > 0");
  if (r_2d == 0.0) return 1.0;
  // clearance scales with receiver altitude; the configured constants are
  // referenced at 50 m
  const double s = h_d / 50.0;
  const double xi1 = p.xi1 * s;
  const double xi2 = p.xi2 * s;
  const double e = std::exp(-r_2d / xi2);
  const double v = std::min(xi1 / r_2d, 1.0) * (1.0 - e) + e;
  return std::clamp(v, 0.0, 1.0);
}

double pathloss_g2g(double d, const ChannelParams& p) {
  const double dc = std::max(d, 1.0);  // L0 is referenced at 1 m
  return p.l0 * std::pow(dc, -p.alpha_g);
}

namespace {

double g2a_mix(double d_3d, double h_d, const ChannelParams& p, LosMode mode,
               std::mt19937_64* rng) {
  if (d_3d < h_d)
    throw std::invalid_argument("pathloss: 3D distance below altitude");
  const double d = std::max(d_3d, 1.0);
  const double r_2d = std::sqrt(std::max(d_3d * d_3d - h_d * h_d, 0.0));
  const double p_los = los_probability(r_2d, h_d, p);
  const double base = p.l0 * std::pow(d, -p.alpha_a);
  if (mode == LosMode::kExpected)
    return (p_los + (1.0 - p_los) * p.l_nlos) * base;
  if (rng == nullptr)
    throw std::invalid_argument("pathloss: sampled-LOS mode needs an rng");
  std::bernoulli_distribution los(p_los);
  return los(*rng) ? base : p.l_nlos * base;
}

}  // namespace

double pathloss_m2d(double d_3d, double h_d, const ChannelParams& p,
                    LosMode mode, std::mt19937_64* rng) {
  return g2a_mix(d_3d, h_d, p, mode, rng);
}

double pathloss_b2d(double d_3d, double h_d, const ChannelParams& p,
                    LosMode mode, std::mt19937_64* rng) {
  return p.l_str * g2a_mix(d_3d, h_d, p, mode, rng);
}

double mean_los_m2d(double r, double h_d, const ChannelParams& p) {
  if (r <= 0.0) throw std::invalid_argument("mean_los_m2d: radius must be > 0");
  // area-uniform disk: density 2*rho/R^2 on [0, R]
  const double v = integrate(
      [&](double rho) { return los_probability(rho, h_d, p) * 2.0 * rho / (r * r); },
      0.0, r, 1e-7);
  return std::clamp(v, 0.0, 1.0);
}

double mean_los_b2d(double lambda_b, double h_d, const ChannelParams& p) {
  if (lambda_b <= 0.0)
    throw std::invalid_argument("mean_los_b2d: lambda_b must be > 0");
  // substitute u = pi*lam*y^2: E[P_LOS] = int_0^inf P_LOS(sqrt(u/(pi lam))) e^-u du
  const double c = std::numbers::pi * lambda_b;
  const double v = integrate(
      [&](double u) {
        return los_probability(std::sqrt(u / c), h_d, p) * std::exp(-u);
      },
      0.0, 40.0, 1e-7);
  return std::clamp(v, 0.0, 1.0);
}

double sample_gamma_gain(int shape, std::mt19937_64& rng) {
  if (shape < 1) throw std::invalid_argument("sample_gamma_gain: shape must be >= 1");
  std::gamma_distribution<double> g(static_cast<double>(shape), 1.0);
  return g(rng);
}

DerivedConstants derive_constants(const ChannelParams& p, double r, double h_d,
                                  double lambda_b) {
  p.validate();
  DerivedConstants d;
  d.delta_g = p.delta_g();
  d.delta_a = p.delta_a();
  const double p_los_m = mean_los_m2d(r, h_d, p);
  const double p_los_b = mean_los_b2d(lambda_b, h_d, p);
  d.l_m = p.l0 * ((1.0 - p.l_nlos) * p_los_m + p.l_nlos);
  // steering loss applies to both branches of the BS->aggregator link
  d.l_b = p.l0 * p.l_str * ((1.0 - p.l_nlos) * p_los_b + p.l_nlos);
  d.l_m_median = d.l_m * std::pow(r * r / 2.0 + h_d * h_d, -1.0 / d.delta_a);
  return d;
}

}  // namespace uavsim
