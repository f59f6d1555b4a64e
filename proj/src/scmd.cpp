#include "uavsim/scmd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace uavsim {

void ScMdProblem::validate() const {
  base.validate();
  if (tiers.empty()) throw std::invalid_argument("scmd: need at least one tier");
  for (const auto& t : tiers) {
    if (t.h_d <= 0.0 || t.r <= 0.0)
      throw std::invalid_argument("scmd: tier h_d and r must be > 0");
    for (std::size_t k = 0; k < t.tau.size(); ++k) {
      if (t.tau[k] <= 0.0)
        throw std::invalid_argument("scmd: tier thresholds must be > 0");
      if (k > 0 && t.tau[k] <= t.tau[k - 1])
        throw std::invalid_argument("scmd: tier thresholds must increase");
    }
  }
}

namespace {

double median_loss(const ScMdProblem& pb, const DroneTier& t) {
  return pb.base.ch.l_m *
         std::pow(t.r * t.r / 2.0 + t.h_d * t.h_d, -1.0 / pb.base.ch.delta_a);
}

const std::vector<double>& tier_tau(const ScMdProblem& pb, std::size_t l) {
  return pb.tiers[l].tau.empty() ? pb.base.tau : pb.tiers[l].tau;
}

std::vector<double> tier_mu(const std::vector<double>& tau) {
  std::vector<double> m(tau.size());
  m[0] = std::log2(1.0 + tau[0]);
  for (std::size_t k = 1; k < tau.size(); ++k)
    m[k] = std::log2(1.0 + tau[k]) - std::log2(1.0 + tau[k - 1]);
  return m;
}

/// Coverage of tier l at threshold tau: the tagged drone hears the BS
/// field plus the active transmitter of every other tier, all through
/// their median losses.
double tier_coverage(std::size_t l, double tau, const std::vector<double>& p,
                     const ScMdProblem& pb, ClampStats* clamp) {
  const auto& t = pb.tiers[l];
  const double margin = p[l] * median_loss(pb, t) / tau - pb.base.p_n;
  if (clamp) ++clamp->evals;
  if (margin <= 0.0) return 0.0;
  double prefactor = pb.base.p_b * pb.base.ch.l_b;
  for (std::size_t n = 0; n < pb.tiers.size(); ++n)
    if (n != l) prefactor += p[n] * median_loss(pb, pb.tiers[n]);
  const double pi = std::numbers::pi;
  const double v =
      std::exp(pi * pb.base.lambda_b * t.h_d * t.h_d) *
      std::exp(-pi * pb.base.lambda_b *
               std::pow(margin / prefactor, -pb.base.ch.delta_a));
  if (v > 1.0) {
    if (clamp) ++clamp->clamped;
    return 1.0;
  }
  return v;
}

double tier_rate(std::size_t l, const std::vector<double>& p,
                 const ScMdProblem& pb, ClampStats* clamp) {
  const auto& tau = tier_tau(pb, l);
  const auto mu = tier_mu(tau);
  double acc = 0.0;
  for (std::size_t k = 0; k < tau.size(); ++k)
    acc += mu[k] * tier_coverage(l, tau[k], p, pb, clamp);
  return pb.base.beta_iot * acc;
}

double tier_cost(std::size_t l, const std::vector<double>& p,
                 const ScMdProblem& pb) {
  return pb.base.p_cp + p[l] / pb.base.eta;
}

/// Multi-start coordinate ascent on a log-power grid with two halving
/// refinements; the inner Dinkelbach subproblem is nonconvex, so this is
/// a stationary point finder, not a global certificate.
std::vector<double> maximize_inner(
    const ScMdProblem& pb, double lo, double hi,
    const std::function<double(const std::vector<double>&)>& obj) {
  const std::size_t n = pb.tiers.size();
  const double la = std::log(lo), lb = std::log(hi);
  std::mt19937_64 rng(0x5cd0u);
  std::uniform_real_distribution<double> uni(la, lb);

  std::vector<double> best;
  double best_val = -std::numeric_limits<double>::infinity();

  for (int start = 0; start < 8; ++start) {
    std::vector<double> lp(n);
    if (start == 0)
      std::fill(lp.begin(), lp.end(), lb);
    else if (start == 1)
      std::fill(lp.begin(), lp.end(), la);
    else if (start == 2)
      std::fill(lp.begin(), lp.end(), 0.5 * (la + lb));
    else
      for (auto& x : lp) x = uni(rng);

    double span = lb - la;
    for (int refine = 0; refine < 3; ++refine) {
      bool moved = true;
      int sweeps = 0;
      while (moved && sweeps < 40) {
        moved = false;
        ++sweeps;
        for (std::size_t d = 0; d < n; ++d) {
          const double keep = lp[d];
          double cbest = keep;
          std::vector<double> p(n);
          for (std::size_t i = 0; i < n; ++i) p[i] = std::exp(lp[i]);
          double vbest = obj(p);
          for (int g = 0; g <= 24; ++g) {
            const double cand = std::clamp(
                keep - span / 2.0 + span * double(g) / 24.0, la, lb);
            lp[d] = cand;
            for (std::size_t i = 0; i < n; ++i) p[i] = std::exp(lp[i]);
            const double v = obj(p);
            if (v > vbest + 1e-15) {
              vbest = v;
              cbest = cand;
            }
          }
          if (cbest != keep) moved = true;
          lp[d] = cbest;
        }
      }
      span /= 4.0;
    }
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = std::exp(lp[i]);
    const double v = obj(p);
    if (v > best_val) {
      best_val = v;
      best = p;
    }
  }
  return best;
}

std::pair<double, double> power_box(const ScMdProblem& pb) {
  const double cap = isr_power_cap(pb.base);
  const double hi = std::min(pb.base.p_max, cap);
  if (hi < pb.base.p_min)
    throw std::runtime_error("scmd: infeasible power interval");
  return {pb.base.p_min, hi};
}

}  // namespace

double ee_tier(std::size_t l, const std::vector<double>& p,
               const ScMdProblem& pb, ClampStats* clamp) {
  if (l >= pb.tiers.size() || p.size() != pb.tiers.size())
    throw std::invalid_argument("ee_tier: bad tier index or power vector");
  return tier_rate(l, p, pb, clamp) / tier_cost(l, p, pb);
}

MdSolution solve_max_min(const ScMdProblem& pb, double tol, int max_iters) {
  pb.validate();
  const auto [lo, hi] = power_box(pb);
  const std::size_t n = pb.tiers.size();

  MdSolution sol;
  double lambda = 0.0;
  std::vector<double> p(n, hi);
  for (int it = 0; it < max_iters; ++it) {
    auto obj = [&](const std::vector<double>& q) {
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < n; ++l)
        worst = std::min(worst,
                         tier_rate(l, q, pb, nullptr) - lambda * tier_cost(l, q, pb));
      return worst;
    };
    p = maximize_inner(pb, lo, hi, obj);
    double next = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < n; ++l)
      next = std::min(next, ee_tier(l, p, pb));
    sol.lambda_trace.push_back(next);
    sol.dinkelbach_iters = it + 1;
    if (std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  sol.p_star = p;
  sol.objective = lambda;
  for (std::size_t l = 0; l < n; ++l) sol.ee.push_back(ee_tier(l, p, pb));
  sol.certified_global = false;
  return sol;
}

MdSolution solve_sum_ee(const ScMdProblem& pb, double tol, int max_iters) {
  pb.validate();
  const auto [lo, hi] = power_box(pb);
  const std::size_t n = pb.tiers.size();

  MdSolution sol;
  std::vector<double> lambda(n, 0.0);
  std::vector<double> p(n, hi);
  for (int it = 0; it < max_iters; ++it) {
    auto obj = [&](const std::vector<double>& q) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        acc += tier_rate(l, q, pb, nullptr) - lambda[l] * tier_cost(l, q, pb);
      return acc;
    };
    p = maximize_inner(pb, lo, hi, obj);
    double shift = 0.0;
    double total = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double r = ee_tier(l, p, pb);
      shift += std::abs(r - lambda[l]);
      lambda[l] = r;
      total += r;
    }
    sol.lambda_trace.push_back(total);
    sol.dinkelbach_iters = it + 1;
    if (shift <= tol * std::max(1.0, total)) break;
  }
  sol.p_star = p;
  sol.objective = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    sol.ee.push_back(ee_tier(l, p, pb));
    sol.objective += sol.ee.back();
  }
  sol.certified_global = false;
  return sol;
}

}  // namespace uavsim
