#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uavsim/lifetime.hpp"
#include "uavsim/montecarlo.hpp"
#include "uavsim/scsd.hpp"

namespace uavsim {

/// Flat key=value store with dotted section names ("channel.alpha_g"),
/// '#' comments, and typed accessors. Unit conventions live in the key
/// suffix: *_db / *_dbm are decibel quantities, *_m meters, *_hz hertz.
class Config {
public:
  static Config load(const std::string& path);
  static Config parse(const std::string& text);

  /// Apply a "key=value" override (CLI --set).
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  int get_int(const std::string& key, int dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;
  /// Comma-separated list of doubles.
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& dflt) const;

  /// FNV-1a over the sorted key=value pairs; stable run identifier.
  std::uint64_t fingerprint() const;
  std::string dump() const;

private:
  std::map<std::string, std::string> kv_;
};

/// Scenario assembled from a config; every key has a baseline default, so
/// an empty config reproduces the reference parameter set.
ScenarioConfig scenario_from_config(const Config& cfg);
LifetimeParams lifetime_from_config(const Config& cfg);

/// Lifetime-evaluation scenario: NB-IoT carrier (180 kHz, 32 dBm BS),
/// hexagonal layout, shadowing, FPC, and a repetition-extended MCS grid.
ScenarioConfig nbiot_lifetime_scenario(const Config& cfg, Protocol kind);

/// Single-cell EE problem assembled from a scenario: derived channel
/// constants, the protocol's long-term IoT share, and the protection pair
/// (rho, eps).
ScSdProblem scsd_problem(const ScenarioConfig& sc, double rho, double eps);

/// Minimal CSV emitter; quotes nothing, callers keep fields clean.
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<double>& values);
  void raw_row(const std::vector<std::string>& fields);

private:
  std::string path_;
  std::string buffer_;
  int n_cols_ = -1;
  void flush();
};

/// key=value manifest describing a run: config dump, seed, fingerprint.
void write_manifest(const std::string& path, const Config& cfg,
                    std::uint64_t seed, const std::string& command);

}  // namespace uavsim
