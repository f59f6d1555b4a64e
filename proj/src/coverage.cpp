#include "uavsim/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavsim/channel.hpp"

namespace uavsim {

namespace {

using cplx = std::complex<double>;
constexpr cplx kJ{0.0, 1.0};

/// Integral over (0, b] with an integrable endpoint at 0: dyadic panels
/// shrinking toward 0 until three in a row are negligible.
double integrate_to_zero(const std::function<double(double)>& f, double b,
                         double tol) {
  double total = 0.0;
  double hi = b;
  int quiet = 0;
  for (int k = 0; k < 200 && quiet < 3; ++k) {
    const double c = integrate(f, hi / 2.0, hi, tol / 8.0);
    total += c;
    quiet = std::abs(c) < tol / 8.0 ? quiet + 1 : 0;
    hi /= 2.0;
  }
  return total;
}

}  // namespace

double CoverageQuery::p_hat() const {
  const double d = delta_g();
  const double sinc = std::sin(std::numbers::pi * d) / (std::numbers::pi * d);
  return (1.0 / sinc) * p_m * u_b / p_b;
}

std::complex<double> interferer_cf_factor(double t, double delta_g, int psi_b,
                                          const QuadratureCfg& quad) {
  if (delta_g <= 0.0 || delta_g >= 1.0)
    throw std::invalid_argument("interferer_cf_factor: delta_g must be in (0,1)");
  if (psi_b < 1)
    throw std::invalid_argument("interferer_cf_factor: psi_b must be >= 1");
  if (t == 0.0) return {1.0, 0.0};

  auto branch = [&](auto part) {
    return integrate_to_zero(
        [&](double u) {
          const cplx term = 1.0 - std::pow(1.0 - kJ * t * u, -double(psi_b));
          return part(term) * std::pow(u, -delta_g - 1.0);
        },
        1.0, quad.abs_tol);
  };
  const double re = branch([](const cplx& z) { return z.real(); });
  const double im = branch([](const cplx& z) { return z.imag(); });
  return 1.0 + delta_g * cplx{re, im};
}

double gil_pelaez_cdf(const std::function<std::complex<double>(double)>& cf,
                      double x, const QuadratureCfg& quad) {
  const double v = integrate_semi_infinite(
      [&](double t) { return std::imag(cf(t) * std::exp(-kJ * t * x)) / t; },
      quad);
  return std::clamp(0.5 - v / std::numbers::pi, 0.0, 1.0);
}

namespace {

double coverage_impl(const CoverageQuery& q, double drone_coeff,
                     const QuadratureCfg& quad) {
  const double delta = q.delta_g();
  const cplx rot = std::exp(-kJ * (std::numbers::pi * delta / 2.0));  // (-j)^delta

  QuadratureCfg inner = quad;
  inner.abs_tol = std::max(quad.abs_tol / 10.0, 1e-12);
  QuadratureCfg outer = quad;
  outer.seed_scale = std::min(q.tau, 1.0);

  const double integral = integrate_semi_infinite(
      [&](double t) {
        const cplx numer = std::pow(1.0 + kJ * t / q.tau, -double(q.delta_b));
        cplx denom = interferer_cf_factor(t, delta, q.psi_b, inner);
        if (drone_coeff > 0.0)
          denom += drone_coeff * std::pow(t, delta) * rot;
        return std::imag(numer / denom) / t;
      },
      outer);
  return std::clamp(0.5 - integral / std::numbers::pi, 0.0, 1.0);
}

}  // namespace

double ue_coverage_proposed(const CoverageQuery& q, const QuadratureCfg& quad) {
  if (q.tau <= 0.0 || q.lambda_b <= 0.0 || q.lambda_d < 0.0)
    throw std::invalid_argument("ue_coverage: bad query");
  const double coeff =
      q.lambda_d / q.lambda_b * std::pow(q.p_hat(), q.delta_g());
  return coverage_impl(q, coeff, quad);
}

double ue_coverage_no_iot(const CoverageQuery& q, const QuadratureCfg& quad) {
  if (q.tau <= 0.0 || q.lambda_b <= 0.0)
    throw std::invalid_argument("ue_coverage: bad query");
  return coverage_impl(q, 0.0, quad);
}

double median_sir_db(const std::function<double(double)>& coverage_of_tau,
                     double lo_db, double hi_db, double tol_db) {
  double lo = lo_db, hi = hi_db;
  if (coverage_of_tau(db_to_linear(lo)) < 0.5 ||
      coverage_of_tau(db_to_linear(hi)) > 0.5)
    throw std::runtime_error("median_sir_db: median outside bracket");
  while (hi - lo > tol_db) {
    const double mid = 0.5 * (lo + hi);
    if (coverage_of_tau(db_to_linear(mid)) >= 0.5)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace uavsim
