#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "evio/backend/config.hpp"
#include "evio/eventfilter/filters.hpp"
#include "evio/frontend/types.hpp"
#include "evio/sync/synchronizer.hpp"

namespace evio {

struct EvalConfig {
  double align_window = 5.0;  // s
  double rtf_bucket = 1.0;    // s
};

struct InitConfig {
  bool use_groundtruth = true;  // falls back to static init when GT is absent
};

struct DivergenceConfig {
  double trace_bound = 1e4;
  double position_bound = 1e3;  // m
};

/// Flat `section.key = value` run configuration; every run writes the
/// resolved version beside its outputs.
struct RunConfig {
  TrackerConfig tracker;
  SyncConfig sync;
  BackendConfig backend;
  FilterConfig prefilter;
  EvalConfig eval;
  InitConfig init;
  DivergenceConfig divergence;

  std::string dataset_path;
  std::string output_path;
  std::uint64_t seed = 0;
  int camera_width = 0;   // 0: infer from frames / default
  int camera_height = 0;

  /// Applies `section.key = value` pairs; unknown keys throw ConfigError.
  void apply(const std::string& key, const std::string& value);
  void validate() const;

  std::string serialize() const;
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text);
void write_run_config(const RunConfig& cfg, const std::string& path);

}  // namespace evio
