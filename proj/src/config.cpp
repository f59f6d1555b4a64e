#include "uavsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uavsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is not key=value: " + line);
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void Config::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("config override must be key=value: " + assignment);
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string& key, const std::string& value) {
  if (key.empty()) throw std::runtime_error("config: empty key");
  kv_[key] = value;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end())
    throw std::runtime_error("config: missing required key '" + key + "'");
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& dflt) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? dflt : it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw std::runtime_error("config: key '" + key + "' is not a number: " + v);
  }
}

double Config::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

int Config::get_int(const std::string& key, int dflt) const {
  if (!has(key)) return dflt;
  const double x = get_double(key);
  const int i = static_cast<int>(x);
  if (double(i) != x)
    throw std::runtime_error("config: key '" + key + "' is not an integer");
  return i;
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  if (!has(key)) return dflt;
  std::string v = get_string(key);
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::runtime_error("config: key '" + key + "' is not a boolean: " + v);
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& dflt) const {
  if (!has(key)) return dflt;
  const std::string v = get_string(key);
  std::vector<double> out;
  std::istringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::runtime_error("config: key '" + key + "' has a bad entry: " + item);
    }
  }
  if (out.empty())
    throw std::runtime_error("config: key '" + key + "' is an empty list");
  return out;
}

std::uint64_t Config::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, v] : kv_) {
    feed(k);
    feed("=");
    feed(v);
    feed("\n");
  }
  return h;
}

std::string Config::dump() const {
  std::ostringstream out;
  for (const auto& [k, v] : kv_) out << k << "=" << v << "\n";
  return out.str();
}

namespace {

std::vector<double> db_list_to_linear(const std::vector<double>& dbs) {
  std::vector<double> out;
  out.reserve(dbs.size());
  for (double d : dbs) out.push_back(db_to_linear(d));
  return out;
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "proposed") return Protocol::kProposed;
  if (name == "sharing") return Protocol::kSharing;
  if (name == "orthogonal") return Protocol::kOrthogonal;
  if (name == "terrestrial") return Protocol::kTerrestrial;
  throw std::runtime_error("config: unknown protocol.kind '" + name + "'");
}

}  // namespace

ScenarioConfig scenario_from_config(const Config& cfg) {
  ScenarioConfig sc;
  sc.chan.alpha_g = cfg.get_double("channel.alpha_g", 3.5);
  sc.chan.alpha_a = cfg.get_double("channel.alpha_a", 2.2);
  sc.chan.l0 = db_to_linear(cfg.get_double("channel.l0_db", -38.0));
  sc.chan.l_nlos = db_to_linear(cfg.get_double("channel.l_nlos_db", -20.0));
  sc.chan.l_str = db_to_linear(cfg.get_double("channel.l_str_db", -30.0));
  sc.chan.xi1 = cfg.get_double("channel.xi1_m", 18.0);
  sc.chan.xi2 = cfg.get_double("channel.xi2_m", 63.0);
  sc.chan.m_b = cfg.get_int("channel.m_b", 32);
  sc.chan.u_b = cfg.get_int("channel.u_b", 4);

  const double lambda_b = cfg.get_double("network.lambda_b", 2e-6);
  sc.dens.lambda_b = lambda_b;
  sc.dens.lambda_u = cfg.get_double("network.lambda_u", 50.0 * lambda_b);
  sc.dens.lambda_cl = cfg.get_double("network.lambda_cl", 5.0 * lambda_b);
  sc.dens.lambda_d = cfg.get_double("network.lambda_d", 5.0 * lambda_b);
  sc.dens.lambda_m = cfg.get_double("network.lambda_m", 20.0);
  sc.r_cluster = cfg.get_double("network.r_cluster_m", 50.0);
  sc.h_d = cfg.get_double("network.h_d_m", 50.0);
  sc.h_terrestrial = cfg.get_double("network.h_terrestrial_m", 10.0);
  sc.window_half = cfg.get_double("network.window_half_m", 0.0);
  sc.core_fraction = cfg.get_double("network.core_fraction", 0.5);
  sc.shadowing_sigma_db = cfg.get_double("network.shadowing_sigma_db", 0.0);
  sc.hex_bs = cfg.get_bool("network.hex_bs", false);

  sc.p_b = dbm_to_watts(cfg.get_double("power.p_b_dbm", 46.0));
  sc.p_u = dbm_to_watts(cfg.get_double("power.p_u_dbm", 23.0));
  sc.p_m = dbm_to_watts(cfg.get_double("power.p_m_dbm", 23.0));
  sc.p_m_min = dbm_to_watts(cfg.get_double("power.p_m_min_dbm", 1.0));
  sc.p_m_max = dbm_to_watts(cfg.get_double("power.p_m_max_dbm", 23.0));
  sc.fpc_factor = cfg.get_double("power.fpc_factor", 0.0);
  sc.p_cp = cfg.get_double("power.p_cp_w", 0.09);
  sc.eta = cfg.get_double("power.eta", 0.44);

  sc.proto.kind = protocol_from_name(cfg.get_string("protocol.kind", "proposed"));
  sc.proto.kappa = cfg.get_double("protocol.kappa", 1.0);
  sc.proto.w = cfg.get_double("protocol.w_hz", 20e6);
  sc.proto.w_ue = cfg.get_double("protocol.w_ue_hz", 0.5 * sc.proto.w);
  sc.proto.t1 = cfg.get_double("protocol.t1", 0.5);
  sc.proto.t2 = cfg.get_double("protocol.t2", 0.5);
  sc.proto.u_b = sc.chan.u_b;

  sc.noise_density = dbm_to_watts(cfg.get_double("noise.density_dbm_hz", -174.0));
  sc.include_noise = cfg.get_bool("noise.enabled", true);

  sc.tau_ue = db_list_to_linear(
      cfg.get_list("thresholds.tau_ue_db", {-5, 0, 5, 10, 15, 20, 25, 30}));
  sc.tau_iot =
      db_list_to_linear(cfg.get_list("thresholds.tau_iot_db", {-5, 0, 5, 10}));

  sc.max_eval_ue = cfg.get_int("mc.max_eval_ue", 200);
  sc.max_eval_iot = cfg.get_int("mc.max_eval_iot", 200);
  return sc;
}

LifetimeParams lifetime_from_config(const Config& cfg) {
  LifetimeParams lp;
  lp.battery_j = cfg.get_double("lifetime.battery_wh", 5.0) * 3600.0;
  lp.payload_bits = cfg.get_double("lifetime.payload_bytes", 229.0) * 8.0;
  lp.n_rep = cfg.get_int("lifetime.reports_per_day", 12);
  lp.p_rx = cfg.get_double("lifetime.p_rx_w", 0.090);
  lp.p_idle = cfg.get_double("lifetime.p_idle_w", 0.003);
  lp.p_sleep = cfg.get_double("lifetime.p_sleep_w", 0.015e-3);
  lp.t_rx = cfg.get_double("lifetime.t_rx_s", 0.565);
  lp.t_idle = cfg.get_double("lifetime.t_idle_s", 22.451);
  lp.t_sleep = cfg.get_double("lifetime.t_sleep_s", 86400.0);
  lp.p_cp = cfg.get_double("power.p_cp_w", 0.09);
  lp.eta = cfg.get_double("power.eta", 0.44);
  return lp;
}

ScenarioConfig nbiot_lifetime_scenario(const Config& cfg, Protocol kind) {
  ScenarioConfig sc = scenario_from_config(cfg);
  sc.proto.kind = kind;
  // NB-IoT carrier: one resource block, reduced BS power, hexagonal
  // layout with shadowing, fractional power control at 0.3
  sc.proto.w = cfg.get_double("lifetime.w_hz", 180e3);
  sc.proto.w_ue = 0.5 * sc.proto.w;
  sc.p_b = dbm_to_watts(cfg.get_double("lifetime.p_b_dbm", 32.0));
  sc.hex_bs = cfg.get_bool("lifetime.hex_bs", true);
  sc.shadowing_sigma_db = cfg.get_double("lifetime.shadowing_sigma_db", 6.0);
  sc.fpc_factor = cfg.get_double("lifetime.fpc_factor", 0.3);
  if (cfg.get_bool("lifetime.expected_los", true))
    sc.los_mode = LosMode::kExpected;
  // repetition-backed low-rate modes reach well below the broadband grid
  std::vector<double> grid;
  for (double t = -40.0; t <= 10.0 + 1e-9; t += 2.5) grid.push_back(t);
  sc.tau_iot = db_list_to_linear(cfg.get_list("lifetime.tau_db", grid));
  return sc;
}

ScSdProblem scsd_problem(const ScenarioConfig& sc, double rho, double eps) {
  ScSdProblem pb;
  pb.lambda_b = sc.dens.lambda_b;
  pb.lambda_u = sc.dens.lambda_u;
  pb.p_b = sc.p_b;
  pb.u_b = sc.proto.u_b;
  pb.delta_b = sc.chan.delta_b();
  pb.r = sc.r_cluster;
  pb.h_d = sc.h_d;
  pb.ch = derive_constants(sc.chan, sc.r_cluster, sc.h_d, sc.dens.lambda_b);
  pb.tau = sc.tau_iot;
  pb.p_cp = sc.p_cp;
  pb.eta = sc.eta;
  pb.p_n = sc.include_noise ? sc.noise_density * sc.proto.w : 0.0;
  pb.rho = rho;
  pb.eps = eps;
  pb.p_min = sc.p_m_min;
  pb.p_max = sc.p_m_max;
  pb.beta_iot = mean_shares(sc.dens, sc.proto).iot;
  return pb;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path) {
  std::ofstream out(path_);  // truncate
  if (!out) throw std::runtime_error("csv: cannot open " + path_);
}

void CsvWriter::header(const std::vector<std::string>& cols) {
  n_cols_ = static_cast<int>(cols.size());
  raw_row(cols);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  std::ostringstream ss;
  ss.precision(10);
  for (double v : values) {
    ss.str("");
    ss << v;
    fields.push_back(ss.str());
  }
  raw_row(fields);
}

void CsvWriter::raw_row(const std::vector<std::string>& fields) {
  if (n_cols_ >= 0 && static_cast<int>(fields.size()) != n_cols_)
    throw std::runtime_error("csv: column count mismatch in " + path_);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    buffer_ += fields[i];
    buffer_ += i + 1 == fields.size() ? '\n' : ',';
  }
  flush();
}

void CsvWriter::flush() {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("csv: cannot append to " + path_);
  out << buffer_;
  buffer_.clear();
}

void write_manifest(const std::string& path, const Config& cfg,
                    std::uint64_t seed, const std::string& command) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("manifest: cannot open " + path);
  out << "command=" << command << "\n";
  out << "seed=" << seed << "\n";
  out << "config_fingerprint=" << std::hex << cfg.fingerprint() << std::dec
      << "\n";
  out << cfg.dump();
}

}  // namespace uavsim
