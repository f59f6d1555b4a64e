#pragma once

#include <complex>
#include <functional>

#include "uavsim/quadrature.hpp"

namespace uavsim {

/// Inputs of the UE downlink coverage evaluation. Interference-limited:
/// the metric is SIR, so no noise term appears here.
struct CoverageQuery {
  double tau = 1.0;        // linear SIR threshold
  double lambda_b = 0.0;   // BS density
  double lambda_d = 0.0;   // drone density (0 recovers the no-IoT baseline)
  double p_b = 0.0;        // W
  double p_m = 0.0;        // W, IoT nominal power
  int u_b = 4;
  int delta_b = 29;        // desired-link Gamma shape
  int psi_b = 4;           // interferer Gamma shape
  double alpha_g = 3.5;

  double delta_g() const { return 2.0 / alpha_g; }
  /// sinc^-1(delta_g) * P_M U_B / P_B with sinc(x) = sin(pi x)/(pi x).
  double p_hat() const;
};

/// E over f ~ Gamma(psi, 1) of 1F1(-delta; 1-delta; j t f), evaluated as
/// 1 + delta * int_0^1 (1 - (1 - j t u)^-psi) u^(-delta-1) du after
/// swapping the Gamma expectation with the Kummer-type integral.
std::complex<double> interferer_cf_factor(double t, double delta_g, int psi_b,
                                          const QuadratureCfg& quad = {});

/// Gil-Pelaez inversion: F(x) = 1/2 - (1/pi) int_0^inf Im{cf(t) e^-jtx}/t dt.
double gil_pelaez_cdf(const std::function<std::complex<double>(double)>& cf,
                      double x, const QuadratureCfg& quad = {});

/// UE DL coverage under the proposed protocol (IoT interference present).
double ue_coverage_proposed(const CoverageQuery& q, const QuadratureCfg& quad = {});

/// UE DL coverage with the drone term removed.
double ue_coverage_no_iot(const CoverageQuery& q, const QuadratureCfg& quad = {});

/// Median SIR in dB of tau -> coverage(tau), found by bisection on a dB grid.
double median_sir_db(const std::function<double(double)>& coverage_of_tau,
                     double lo_db = -30.0, double hi_db = 60.0, double tol_db = 1e-3);

}  // namespace uavsim
