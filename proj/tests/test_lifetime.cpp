#include <cmath>
#include <vector>

#include "doctest.h"
#include "uavsim/channel.hpp"
#include "uavsim/lifetime.hpp"

using namespace uavsim;

namespace {

ScenarioConfig small_scenario() {
  ScenarioConfig sc;
  sc.dens.lambda_b = 2e-6;
  sc.dens.lambda_u = 5e-5;
  sc.dens.lambda_cl = 1e-5;
  sc.dens.lambda_d = 1e-5;
  sc.dens.lambda_m = 10.0;
  sc.window_half = 800.0;
  sc.proto.w = 180e3;
  for (double db = -10.0; db <= 10.0; db += 2.5) {
    sc.tau_ue.push_back(db_to_linear(db));
    sc.tau_iot.push_back(db_to_linear(db));
  }
  return sc;
}

}  // namespace

TEST_SUITE_BEGIN("lifetime");

TEST_CASE("parameter validation catches broken constants") {
  LifetimeParams lp;
  CHECK_NOTHROW(lp.validate());
  lp.n_rep = 0;
  CHECK_THROWS(lp.validate());
  lp = LifetimeParams{};
  lp.eta = 0.0;
  CHECK_THROWS(lp.validate());
}

TEST_CASE("transmit duration is the payload-rate quotient") {
  LifetimeParams lp;
  // 229-byte payload: 1832 bits on air
  CHECK(lp.payload_bits == doctest::Approx(1832.0));
  const auto t = tx_duration(1832.0, lp);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(1.0).epsilon(1e-12));
  const auto t2 = tx_duration(3664.0, lp);
  REQUIRE(t2.has_value());
  CHECK(*t2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zero rate and over-long transfers are censored") {
  LifetimeParams lp;
  CHECK_FALSE(tx_duration(0.0, lp).has_value());
  CHECK_FALSE(tx_duration(-5.0, lp).has_value());
  // slower than payload / max_tx_s cannot finish within the cycle
  const double just_too_slow = lp.payload_bits / lp.max_tx_s * 0.99;
  CHECK_FALSE(tx_duration(just_too_slow, lp).has_value());
  CHECK(tx_duration(just_too_slow / 0.99 * 1.01, lp).has_value());
}

TEST_CASE("daily energy floor matches the sleep, rx, and idle arithmetic") {
  LifetimeParams lp;
  // at zero time on air only the fixed stages drain the battery
  const double want = lp.n_rep * (lp.t_rx * lp.p_rx + lp.t_idle * lp.p_idle) +
                      lp.t_sleep * lp.p_sleep;
  CHECK(daily_energy(0.0, 0.1, lp) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("transmit stage drains 543.5 mW at full nb-iot power") {
  LifetimeParams lp;
  const double p23 = dbm_to_watts(23.0);
  const double p_stage = lp.p_cp + p23 / lp.eta;
  CHECK(p_stage == doctest::Approx(0.5435).epsilon(1e-3));
  // one extra on-air second per report costs n_rep * p_stage joules a day
  const double d = daily_energy(2.0, p23, lp) - daily_energy(1.0, p23, lp);
  CHECK(d == doctest::Approx(lp.n_rep * p_stage).epsilon(1e-12));
}

TEST_CASE("daily energy is linear in the report count") {
  LifetimeParams a;
  LifetimeParams b;
  b.n_rep = 24;
  const double sleep = a.t_sleep * a.p_sleep;
  CHECK(daily_energy(1.0, 0.1, b) - sleep ==
        doctest::Approx(2.0 * (daily_energy(1.0, 0.1, a) - sleep)).epsilon(1e-12));
}

TEST_CASE("battery life shrinks with on-air time and transmit power") {
  LifetimeParams lp;
  CHECK(lifetime_years(1.0, 0.1, lp) > lifetime_years(2.0, 0.1, lp));
  CHECK(lifetime_years(1.0, 0.05, lp) > lifetime_years(1.0, 0.2, lp));
  // a doubled battery doubles the life exactly
  LifetimeParams big = lp;
  big.battery_j *= 2.0;
  CHECK(lifetime_years(1.0, 0.1, big) ==
        doctest::Approx(2.0 * lifetime_years(1.0, 0.1, lp)).epsilon(1e-12));
}

TEST_CASE("distribution quantiles interpolate the sorted sample") {
  LifetimeDistribution d;
  d.years = {1.0, 2.0, 4.0, 8.0};
  d.total = 4;
  CHECK(d.quantile(0.0) == doctest::Approx(1.0));
  CHECK(d.quantile(1.0) == doctest::Approx(8.0));
  CHECK(d.quantile(0.5) == doctest::Approx(3.0));  // midway between 2 and 4
  CHECK(d.mean() == doctest::Approx(3.75));
  d.censored = 1;
  d.total = 5;
  CHECK(d.censored_rate() == doctest::Approx(0.2));
  LifetimeDistribution empty;
  CHECK_THROWS(empty.quantile(0.5));
  CHECK(empty.mean() == 0.0);
}

TEST_CASE("campaign lifetimes reproduce the per-device arithmetic") {
  const auto sc = small_scenario();
  LifetimeParams lp;
  const auto dist = lifetime_campaign(sc, lp, 6, 88);
  const auto data = run_device_campaign(sc, 6, 88);
  REQUIRE(dist.total == static_cast<long long>(data.iot_sinr.size()));
  // rebuild the distribution independently from the raw device data
  std::vector<double> want;
  long long censored = 0;
  for (std::size_t i = 0; i < data.iot_sinr.size(); ++i) {
    double rate = 0.0;
    for (double t : sc.tau_iot) {
      if (data.iot_sinr[i] >= t) rate = std::log2(1.0 + t);
    }
    rate *= data.iot_share[i];
    const auto t_tx = tx_duration(rate, lp);
    if (!t_tx) {
      ++censored;
      continue;
    }
    want.push_back(lifetime_years(*t_tx, data.iot_power[i], lp));
  }
  std::sort(want.begin(), want.end());
  CHECK(dist.censored == censored);
  REQUIRE(dist.years.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(dist.years[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("devices below the lowest mcs threshold are censored") {
  auto sc = small_scenario();
  // an absurdly high first threshold censors everything
  sc.tau_iot = {db_to_linear(80.0)};
  LifetimeParams lp;
  const auto dist = lifetime_campaign(sc, lp, 4, 90);
  CHECK(dist.total > 0);
  CHECK(dist.censored == dist.total);
  CHECK(dist.years.empty());
}

TEST_SUITE_END();
