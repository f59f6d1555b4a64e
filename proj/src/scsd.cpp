#include "uavsim/scsd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavsim {

void ScSdProblem::validate() const {
  if (lambda_b <= 0.0 || lambda_u <= 0.0)
    throw std::invalid_argument("scsd: densities must be > 0");
  if (p_b <= 0.0) throw std::invalid_argument("scsd: p_b must be > 0");
  if (u_b < 1 || delta_b < 1)
    throw std::invalid_argument("scsd: u_b and delta_b must be >= 1");
  if (r <= 0.0 || h_d <= 0.0)
    throw std::invalid_argument("scsd: r and h_d must be > 0");
  if (tau.empty()) throw std::invalid_argument("scsd: need at least one threshold");
  for (std::size_t k = 0; k < tau.size(); ++k) {
    if (tau[k] <= 0.0) throw std::invalid_argument("scsd: thresholds must be > 0");
    if (k > 0 && tau[k] <= tau[k - 1])
      throw std::invalid_argument("scsd: thresholds must be strictly increasing");
  }
  if (eta <= 0.0 || eta > 1.0) throw std::invalid_argument("scsd: eta must be in (0,1]");
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("scsd: eps must be in (0,1)");
  if (rho <= 0.0) throw std::invalid_argument("scsd: rho must be > 0");
  if (p_min <= 0.0 || p_min > p_max)
    throw std::invalid_argument("scsd: need 0 < p_min <= p_max");
  if (p_cp < 0.0 || p_n < 0.0 || beta_iot < 0.0)
    throw std::invalid_argument("scsd: p_cp, p_n, beta_iot must be >= 0");
}

std::vector<double> ScSdProblem::mu() const {
  std::vector<double> m(tau.size());
  m[0] = std::log2(1.0 + tau[0]);
  for (std::size_t k = 1; k < tau.size(); ++k)
    m[k] = std::log2(1.0 + tau[k]) - std::log2(1.0 + tau[k - 1]);
  return m;
}

double iot_signal_cdf(double tau, double p, const ScSdProblem& pb) {
  if (p <= 0.0 || tau <= 0.0) throw std::invalid_argument("iot_signal_cdf: p, tau > 0");
  const double lo = p * pb.ch.l_m * std::pow(pb.r * pb.r + pb.h_d * pb.h_d,
                                             -1.0 / pb.ch.delta_a);
  const double hi = p * pb.ch.l_m * std::pow(pb.h_d, -2.0 / pb.ch.delta_a);
  if (tau <= lo) return 0.0;
  if (tau >= hi) return 1.0;
  const double q = std::pow(p * pb.ch.l_m / tau, pb.ch.delta_a);
  return 1.0 - (q - pb.h_d * pb.h_d) / (pb.r * pb.r);
}

double iot_signal_median(double p, const ScSdProblem& pb) {
  return p * pb.ch.l_m_median;
}

double bs_interference_cdf(double tau, const ScSdProblem& pb) {
  if (tau < 0.0) throw std::invalid_argument("bs_interference_cdf: tau >= 0");
  const double hi = pb.p_b * pb.ch.l_b * std::pow(pb.h_d, -2.0 / pb.ch.delta_a);
  if (tau <= 0.0) return 0.0;
  if (tau >= hi) return 1.0;
  const double pi = std::numbers::pi;
  return std::exp(pi * pb.lambda_b * pb.h_d * pb.h_d) *
         std::exp(-pi * pb.lambda_b * std::pow(pb.p_b * pb.ch.l_b / tau, pb.ch.delta_a));
}

double iot_coverage(double p, double tau, const ScSdProblem& pb, ClampStats* clamp) {
  if (p <= 0.0 || tau <= 0.0) throw std::invalid_argument("iot_coverage: p, tau > 0");
  const double margin = p * pb.ch.l_m_median / tau - pb.p_n;
  if (clamp) ++clamp->evals;
  if (margin <= 0.0) return 0.0;
  // above the interference support the CDF is exactly 1 (the tagged BS is
  // never closer than h_d), so this is the support rule, not a clamp
  const double i_max = pb.p_b * pb.ch.l_b * std::pow(pb.h_d, -2.0 / pb.ch.delta_a);
  if (margin >= i_max) return 1.0;
  const double pi = std::numbers::pi;
  const double v = std::exp(pi * pb.lambda_b * pb.h_d * pb.h_d) *
                   std::exp(-pi * pb.lambda_b *
                            std::pow(margin / (pb.p_b * pb.ch.l_b), -pb.ch.delta_a));
  if (v > 1.0) {
    if (clamp) ++clamp->clamped;
    return 1.0;
  }
  return v;
}

double avg_ee(double p, const ScSdProblem& pb, ClampStats* clamp) {
  const auto mu = pb.mu();
  double cov_sum = 0.0;
  for (std::size_t k = 0; k < pb.tau.size(); ++k)
    cov_sum += mu[k] * iot_coverage(p, pb.tau[k], pb, clamp);
  return pb.beta_iot * cov_sum / (pb.p_cp + p / pb.eta);
}

double isr_tail(double rho, double p, const ScSdProblem& pb) {
  if (rho <= 0.0 || p <= 0.0) throw std::invalid_argument("isr_tail: rho, p > 0");
  const double a = (pb.lambda_b / pb.lambda_u) *
                   std::pow(rho * pb.delta_b * pb.p_b / (pb.u_b * p), pb.ch.delta_g);
  return 1.0 / (1.0 + a);
}

double isr_power_cap(const ScSdProblem& pb) {
  const double cap =
      pb.rho * (pb.delta_b * pb.p_b / pb.u_b) *
      std::pow(pb.lambda_b / pb.lambda_u * pb.eps / (1.0 - pb.eps), 1.0 / pb.ch.delta_g);
  if (std::abs(isr_tail(pb.rho, cap, pb) - pb.eps) > 1e-9)
    throw std::runtime_error("isr_power_cap: closed form does not invert the tail");
  if (cap < pb.p_min)
    throw std::runtime_error(
        "isr_power_cap: protection cap below p_min; problem infeasible");
  return cap;
}

EeSolution solve_sc_sd(const ScSdProblem& pb, double rel_tol) {
  pb.validate();
  const double cap = isr_power_cap(pb);
  const double hi = std::min(pb.p_max, cap);
  const double lo = pb.p_min;
  if (hi < lo) throw std::runtime_error("solve_sc_sd: infeasible power interval");

  // with several thresholds the EE can carry secondary modes (a tier can
  // saturate before the next one activates), so bracket the global mode on
  // a coarse log grid first, then refine by golden section inside it
  auto f = [&](double lp) { return avg_ee(std::exp(lp), pb); };
  const double full_a = std::log(lo), full_b = std::log(hi);
  double a = full_a, b = full_b;
  if (pb.tau.size() > 1) {
    const int n = 64;
    int best = 0;
    double best_v = f(full_a);
    for (int i = 1; i <= n; ++i) {
      const double v = f(full_a + (full_b - full_a) * i / n);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    a = full_a + (full_b - full_a) * std::max(0, best - 1) / n;
    b = full_a + (full_b - full_a) * std::min(n, best + 1) / n;
  }
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > rel_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  EeSolution sol;
  sol.p_star = std::exp(0.5 * (a + b));
  sol.ee_star = avg_ee(sol.p_star, pb);

  const double edge_tol = 4.0 * rel_tol;
  if (std::log(hi) - 0.5 * (a + b) < edge_tol)
    sol.binding = (cap < pb.p_max) ? Binding::kIsrCap : Binding::kPMax;
  else if (0.5 * (a + b) - std::log(lo) < edge_tol)
    sol.binding = Binding::kPMin;
  else
    sol.binding = Binding::kInterior;
  if (sol.binding == Binding::kIsrCap) sol.p_star = std::min(sol.p_star, cap);
  return sol;
}

double closed_form_pstar_unconstrained(const ScSdProblem& pb) {
  if (pb.tau.size() != 1 || std::abs(pb.ch.delta_a - 1.0) > 1e-12)
    throw std::invalid_argument("closed_form_pstar: needs K=1 and alpha_a=2");
  // stationarity of ln EE with margin m = u p - p_n, u = l_m_median / tau_1,
  // and c = pi lambda_b P_B L_B: c u (eta p_cp + p) = m^2; the larger root
  // of the quadratic is the maximizer
  const double pi = std::numbers::pi;
  const double u = pb.ch.l_m_median / pb.tau[0];
  const double c = pi * pb.lambda_b * pb.p_b * pb.ch.l_b;
  const double root =
      (2.0 * pb.p_n + c +
       std::sqrt(c * (c + 4.0 * pb.p_n + 4.0 * u * pb.eta * pb.p_cp))) /
      (2.0 * u);
  // past the interference support the coverage is flat at 1 and the EE
  // strictly decreasing, so the true maximizer never exceeds that kink
  const double i_max = pb.p_b * pb.ch.l_b / (pb.h_d * pb.h_d);
  const double kink = (i_max + pb.p_n) / u;
  return std::min(root, kink);
}

double closed_form_pstar(const ScSdProblem& pb) {
  const double cap = isr_power_cap(pb);
  const double p = std::min({pb.p_max, cap, closed_form_pstar_unconstrained(pb)});
  return std::max(p, pb.p_min);
}

BsOptResult optimize_bs_power(ScSdProblem pb, double p_b_min, double p_b_max,
                              double zeta, int max_iters) {
  if (zeta <= 0.0) throw std::invalid_argument("optimize_bs_power: zeta must be > 0");
  if (p_b_min <= 0.0 || p_b_min > p_b_max)
    throw std::invalid_argument("optimize_bs_power: bad BS power range");
  const double cap_factor =
      pb.rho * (double(pb.delta_b) / pb.u_b) *
      std::pow(pb.lambda_b / pb.lambda_u * pb.eps / (1.0 - pb.eps), 1.0 / pb.ch.delta_g);

  BsOptResult res;
  pb.p_b = p_b_max;
  double prev_ee = -1.0;
  for (int i = 0; i < max_iters; ++i) {
    const EeSolution sol = solve_sc_sd(pb);
    res.trace.p_m.push_back(sol.p_star);
    res.trace.p_b.push_back(pb.p_b);
    res.trace.ee.push_back(sol.ee_star);
    res.p_m_star = sol.p_star;
    res.p_b_star = pb.p_b;
    res.ee_star = sol.ee_star;
    if (prev_ee >= 0.0 && std::abs(sol.ee_star - prev_ee) <= zeta) return res;
    prev_ee = sol.ee_star;
    // set P_B so the ISR cap sits exactly at the current P_M
    pb.p_b = std::clamp(sol.p_star / cap_factor, p_b_min, p_b_max);
  }
  throw std::runtime_error("optimize_bs_power: no convergence within iteration cap");
}

}  // namespace uavsim
