#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavsim/config.hpp"
#include "uavsim/coverage.hpp"
#include "uavsim/lifetime.hpp"
#include "uavsim/montecarlo.hpp"
#include "uavsim/rng.hpp"
#include "uavsim/scmd.hpp"
#include "uavsim/scsd.hpp"

namespace {

using namespace uavsim;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::uint64_t seed = 1;
  int trials = 200;
  std::string out = "run";
};

void add_common(CLI::App* app, CommonOpts& opt) {
  app->add_option("--config", opt.config_path, "key=value config file");
  app->add_option("--set", opt.overrides, "override, key=value (repeatable)");
  app->add_option("--seed", opt.seed, "master RNG seed");
  app->add_option("--trials", opt.trials, "Monte Carlo trials");
  app->add_option("--out", opt.out, "output path prefix");
}

Config load_config(const CommonOpts& opt) {
  Config cfg = opt.config_path.empty() ? Config{} : Config::load(opt.config_path);
  for (const auto& o : opt.overrides) cfg.set(o);
  return cfg;
}

ScSdProblem scsd_from(const ScenarioConfig& sc, const Config& cfg) {
  return scsd_problem(sc, db_to_linear(cfg.get_double("opt.rho_db", -6.0)),
                      cfg.get_double("opt.eps", 0.5));
}

CoverageQuery coverage_query(const ScenarioConfig& sc, double tau) {
  CoverageQuery q;
  q.tau = tau;
  q.lambda_b = sc.dens.lambda_b;
  q.lambda_d = sc.dens.lambda_d;
  q.p_b = sc.p_b;
  q.p_m = sc.p_m;
  q.u_b = sc.proto.u_b;
  q.delta_b = sc.chan.delta_b();
  q.psi_b = sc.chan.psi_b();
  q.alpha_g = sc.chan.alpha_g;
  return q;
}

int cmd_coverage(const CommonOpts& opt, bool with_mc) {
  const Config cfg = load_config(opt);
  const ScenarioConfig sc = scenario_from_config(cfg);
  const auto tau_db = cfg.get_list("coverage.tau_grid_db",
                                   {-10, -5, 0, 5, 10, 15, 20, 25, 30});

  std::vector<double> tau_lin;
  for (double d : tau_db) tau_lin.push_back(db_to_linear(d));

  CoverageEstimate mc;
  if (with_mc) {
    ScenarioConfig mc_sc = sc;
    mc_sc.include_noise = false;  // coverage is an SIR metric
    mc = estimate_coverage(mc_sc, tau_lin, opt.trials, opt.seed);
  }

  CsvWriter csv(opt.out + "_coverage.csv");
  csv.header({"tau_db", "coverage", "coverage_no_iot", "mc_ccdf", "mc_ci95"});
  for (std::size_t k = 0; k < tau_db.size(); ++k) {
    const auto q = coverage_query(sc, tau_lin[k]);
    const double cov = ue_coverage_proposed(q);
    const double cov0 = ue_coverage_no_iot(q);
    const double est = with_mc ? mc.ccdf[k] : 0.0;
    const double ci = with_mc ? mc.ci95[k] : 0.0;
    csv.row({tau_db[k], cov, cov0, est, ci});
    std::printf("tau %6.1f dB  coverage %.4f  no-IoT %.4f", tau_db[k], cov, cov0);
    if (with_mc) std::printf("  MC %.4f +- %.4f", est, ci);
    std::printf("\n");
  }
  write_manifest(opt.out + "_coverage.manifest", cfg, opt.seed, "coverage");
  return 0;
}

int cmd_ee(const CommonOpts& opt, int multi) {
  const Config cfg = load_config(opt);
  const ScenarioConfig sc = scenario_from_config(cfg);
  const ScSdProblem pb = scsd_from(sc, cfg);

  if (multi > 1) {
    ScMdProblem md;
    md.base = pb;
    for (int l = 0; l < multi; ++l) {
      DroneTier t;
      t.h_d = sc.h_d * (1.0 + 0.2 * l);  // staggered altitudes
      t.r = sc.r_cluster;
      md.tiers.push_back(t);
    }
    const auto mm = solve_max_min(md);
    const auto sum = solve_sum_ee(md);
    CsvWriter csv(opt.out + "_ee_multi.csv");
    csv.header({"tier", "h_d_m", "p_maxmin_w", "ee_maxmin", "p_sum_w", "ee_sum"});
    for (int l = 0; l < multi; ++l)
      csv.row({double(l), md.tiers[l].h_d, mm.p_star[l], mm.ee[l],
               sum.p_star[l], sum.ee[l]});
    std::printf("max-min EE %.4g bits/J in %d iterations\n", mm.objective,
                mm.dinkelbach_iters);
    std::printf("sum EE %.4g bits/J in %d iterations (stationary point)\n",
                sum.objective, sum.dinkelbach_iters);
    write_manifest(opt.out + "_ee_multi.manifest", cfg, opt.seed, "ee --multi");
    return 0;
  }

  const auto sol = solve_sc_sd(pb);
  std::printf("P* = %.4g W (%.2f dBm), EE* = %.4g bits/J\n", sol.p_star,
              watts_to_dbm(sol.p_star), sol.ee_star);
  const char* binding = "interior";
  if (sol.binding == Binding::kIsrCap) binding = "isr_cap";
  if (sol.binding == Binding::kPMax) binding = "p_max";
  if (sol.binding == Binding::kPMin) binding = "p_min";
  std::printf("binding constraint: %s\n", binding);

  CsvWriter csv(opt.out + "_ee.csv");
  csv.header({"p_dbm", "ee_bits_per_joule", "coverage_tau1"});
  for (double p_dbm = watts_to_dbm(pb.p_min); p_dbm <= watts_to_dbm(pb.p_max) + 1e-9;
       p_dbm += 0.5) {
    const double p = dbm_to_watts(p_dbm);
    csv.row({p_dbm, avg_ee(p, pb), iot_coverage(p, pb.tau.front(), pb)});
  }
  write_manifest(opt.out + "_ee.manifest", cfg, opt.seed, "ee");
  return 0;
}

int cmd_compare(const CommonOpts& opt) {
  const Config cfg = load_config(opt);
  CsvWriter csv(opt.out + "_compare.csv");
  csv.header({"protocol", "ue_dl_se", "ue_dl_ci", "ue_ul_se", "ue_ul_ci",
              "iot_ee", "iot_ee_ci", "iot_sinr_median_db"});
  const std::vector<std::pair<std::string, Protocol>> protos = {
      {"benchmark", Protocol::kProposed},
      {"proposed", Protocol::kProposed},
      {"sharing", Protocol::kSharing},
      {"orthogonal", Protocol::kOrthogonal},
      {"terrestrial", Protocol::kTerrestrial},
  };
  for (const auto& [name, kind] : protos) {
    ScenarioConfig sc = scenario_from_config(cfg);
    sc.proto.kind = kind;
    if (name == "benchmark") {
      // IoT-free reference network for the degradation columns
      sc.dens.lambda_cl = 0.0;
      sc.dens.lambda_d = 0.0;
    } else if (kind == Protocol::kProposed) {
      // the aerial scheme runs its devices at the optimized nominal power
      sc.p_m = solve_sc_sd(scsd_from(sc, cfg)).p_star;
    }
    const auto sum = run_campaign(sc, opt.trials, opt.seed);
    std::vector<std::string> fields = {name};
    auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return std::string(buf);
    };
    fields.push_back(num(sum.ue_dl_se.mean));
    fields.push_back(num(sum.ue_dl_se.ci95));
    fields.push_back(num(sum.ue_ul_se.mean));
    fields.push_back(num(sum.ue_ul_se.ci95));
    fields.push_back(num(sum.iot_ee.mean));
    fields.push_back(num(sum.iot_ee.ci95));
    fields.push_back(num(linear_to_db(sum.iot_sinr.median)));
    csv.raw_row(fields);
    std::printf("%-12s UE DL %.3g bps  UE UL %.3g bps  IoT EE %.3g bits/J\n",
                name.c_str(), sum.ue_dl_se.mean, sum.ue_ul_se.mean,
                sum.iot_ee.mean);
  }
  write_manifest(opt.out + "_compare.manifest", cfg, opt.seed, "compare");
  return 0;
}

int cmd_lifetime(const CommonOpts& opt) {
  const Config cfg = load_config(opt);
  const LifetimeParams lp = lifetime_from_config(cfg);
  CsvWriter csv(opt.out + "_lifetime.csv");
  csv.header({"protocol_id", "quantile", "years"});
  const std::vector<std::pair<std::string, Protocol>> protos = {
      {"proposed", Protocol::kProposed},
      {"sharing", Protocol::kSharing},
      {"orthogonal", Protocol::kOrthogonal},
      {"terrestrial", Protocol::kTerrestrial},
  };
  int pid = 0;
  for (const auto& [name, kind] : protos) {
    ScenarioConfig sc = nbiot_lifetime_scenario(cfg, kind);
    if (kind == Protocol::kProposed || kind == Protocol::kTerrestrial) {
      // aggregated schemes set the nominal power to the single-cell EE
      // optimum at their aggregator height; direct schemes stay at max
      ScenarioConfig agg = sc;
      if (kind == Protocol::kTerrestrial) agg.h_d = sc.h_terrestrial;
      sc.p_m = solve_sc_sd(scsd_from(agg, cfg)).p_star;
    }
    const auto dist = lifetime_campaign(sc, lp, opt.trials, opt.seed);
    for (int q = 0; q <= 100; ++q)
      csv.row({double(pid), q / 100.0, dist.quantile(q / 100.0)});
    std::printf("%-11s median %.2f y  mean %.2f y  iqr %.2f y  censored %.2f%%\n",
                name.c_str(), dist.quantile(0.5), dist.mean(),
                dist.quantile(0.75) - dist.quantile(0.25),
                100.0 * dist.censored_rate());
    ++pid;
  }
  write_manifest(opt.out + "_lifetime.manifest", cfg, opt.seed, "lifetime");
  return 0;
}

int cmd_validate(const CommonOpts& opt) {
  const Config cfg = load_config(opt);
  const ScenarioConfig sc = scenario_from_config(cfg);
  int failures = 0;
  auto report = [&](const char* name, bool ok, double a, double b) {
    std::printf("%-34s %s  (analytic %.4g, simulated %.4g)\n", name,
                ok ? "pass" : "FAIL", a, b);
    if (!ok) ++failures;
  };

  {
    ScenarioConfig mc_sc = sc;
    mc_sc.include_noise = false;
    const std::vector<double> taus = {db_to_linear(0.0), db_to_linear(10.0)};
    const auto est = estimate_coverage(mc_sc, taus, opt.trials, opt.seed);
    for (std::size_t k = 0; k < taus.size(); ++k) {
      const double cov = ue_coverage_proposed(coverage_query(sc, taus[k]));
      const double slack = 3.0 * est.ci95[k] + 0.02;
      report(k == 0 ? "UE coverage at 0 dB" : "UE coverage at 10 dB",
             std::abs(cov - est.ccdf[k]) <= slack, cov, est.ccdf[k]);
    }
  }
  {
    const auto analytic = mean_shares(sc.dens, sc.proto);
    // average over realizations: one PPP draw has ~14% BS-count noise
    RngStreams streams(opt.seed);
    ResourceShares sim;
    const int reps = 12;
    for (int i = 0; i < reps; ++i) {
      auto rng = streams.stream(streams::kSchedule, i);
      const auto real = realize(sc, rng);
      const auto one = scheduler_oracle(real, sc.proto, 200, opt.seed + i);
      sim.ue_ul += one.ue_ul / reps;
      sim.ue_dl += one.ue_dl / reps;
      sim.iot += one.iot / reps;
    }
    report("UE UL share vs scheduler",
           std::abs(sim.ue_ul - analytic.ue_ul) <= 0.05 * analytic.ue_ul,
           analytic.ue_ul, sim.ue_ul);
    report("IoT share vs scheduler",
           std::abs(sim.iot - analytic.iot) <= 0.05 * analytic.iot,
           analytic.iot, sim.iot);
  }
  {
    const ScSdProblem pb = scsd_from(sc, cfg);
    const double tail = isr_tail(pb.rho, sc.p_m, pb);
    const double mc = mc_isr_tail(sc, pb.rho, std::max(opt.trials, 100), opt.seed);
    report("ISR tail analytic vs MC", std::abs(tail - mc) <= 0.08, tail, mc);
  }
  std::printf(failures == 0 ? "validate: all checks passed\n"
                            : "validate: %d check(s) failed\n",
              failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-aggregated IoT shared-spectrum simulator"};
  app.require_subcommand(1);

  CommonOpts opt;
  bool with_mc = false;
  int multi = 1;

  auto* cov = app.add_subcommand("coverage", "analytic UE downlink coverage");
  add_common(cov, opt);
  cov->add_flag("--mc", with_mc, "add a Monte Carlo cross-check column");

  auto* ee = app.add_subcommand("ee", "IoT energy efficiency optimization");
  add_common(ee, opt);
  ee->add_option("--multi", multi, "number of aggregator tiers (default 1)");

  auto* cmp = app.add_subcommand("compare", "protocol comparison campaign");
  add_common(cmp, opt);

  auto* life = app.add_subcommand("lifetime", "battery lifetime distribution");
  add_common(life, opt);

  auto* val = app.add_subcommand("validate", "analytic vs simulated cross-checks");
  add_common(val, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cov->parsed()) return cmd_coverage(opt, with_mc);
    if (ee->parsed()) return cmd_ee(opt, multi);
    if (cmp->parsed()) return cmd_compare(opt);
    if (life->parsed()) return cmd_lifetime(opt);
    if (val->parsed()) return cmd_validate(opt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
