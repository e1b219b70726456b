#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "evio/core/types.hpp"
#include "evio/frontend/types.hpp"

namespace evio {

struct SyncConfig {
  std::uint64_t ne = 3200;           // event-count trigger
  double max_extrapolation = 0.05;   // s
  double min_update_interval = 0.1;  // s; <= 0 disables the time trigger
  int min_features_for_update = 3;
};

struct MatchEntry {
  int feature_id = -1;
  Vec2 pos_normalized = Vec2::Zero();
  bool is_extrapolated = false;
};

struct MatchSet {
  double t_ref = 0.0;
  std::vector<MatchEntry> entries;
};

/// Converts asynchronous per-feature observations into synchronized match
/// sets. Emission is triggered every ne events or, as a minimum-rate remedy,
/// whenever min_update_interval elapsed since the last emission attempt.
/// Features staler than t_ref are extrapolated with their last linear
/// velocity, capped at max_extrapolation (beyond which they are omitted).
class Synchronizer {
 public:
  struct TickResult {
    bool fired = false;  // trigger condition met; caller resets its counter
    std::optional<MatchSet> match_set;
  };

  Synchronizer(const SyncConfig& cfg, const CameraModel& cam) : cfg_(cfg), cam_(cam) {}

  void observe(const FeatureObservation& obs);
  TickResult tick(std::uint64_t events_since_last, double t_now);

  size_t tracked_features() const { return tracks_.size(); }
  double last_emit_time() const { return t_last_emit_; }

 private:
  struct Track {
    Vec2 pos = Vec2::Zero();
    double t = 0.0;
    Vec2 vel = Vec2::Zero();  // px/s
    bool has_velocity = false;
  };

  SyncConfig cfg_;
  CameraModel cam_;
  std::map<int, Track> tracks_;
  double t_last_emit_ = std::numeric_limits<double>::quiet_NaN();
  double t_last_ref_ = -std::numeric_limits<double>::infinity();
};

}  // namespace evio
