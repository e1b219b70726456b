#pragma once

#include <deque>
#include <vector>

#include "evio/core/types.hpp"
#include "evio/frontend/patch.hpp"
#include "evio/frontend/types.hpp"

namespace evio {

/// Drives detection, template refresh, event accumulation, and per-batch
/// alignment over an interleaved time-ordered frame/event stream.
/// Observations come out time-ordered per feature.
class FeatureTracker {
 public:
  struct Stats {
    std::uint64_t events_fed = 0;
    std::uint64_t batches_ready = 0;
    std::uint64_t optimizations = 0;
    std::uint64_t observations = 0;
    std::uint64_t features_lost = 0;
    std::uint64_t features_outlier = 0;
    std::uint64_t features_spawned = 0;
  };

  explicit FeatureTracker(const TrackerConfig& cfg) : cfg_(cfg) {}

  void process_frame(const Frame& frame);
  void process_event(const Event& e);

  /// Drains observations produced since the last call.
  std::vector<FeatureObservation> take_observations();

  const std::vector<PatchState>& patches() const { return patches_; }
  const Stats& stats() const { return stats_; }
  const TrackerConfig& config() const { return cfg_; }

  /// Per-feature track dump rows: feature_id,t,x_px,y_px,residual.
  const std::vector<FeatureObservation>& track_log() const { return track_log_; }
  void enable_track_log(bool on) { track_log_enabled_ = on; }

 private:
  void check_order(double t);

  TrackerConfig cfg_;
  std::vector<PatchState> patches_;
  std::vector<FeatureObservation> pending_;
  std::vector<FeatureObservation> track_log_;
  bool track_log_enabled_ = false;
  int next_feature_id_ = 0;
  double last_t_ = -std::numeric_limits<double>::infinity();
  bool seen_frame_ = false;
  Stats stats_;
};

}  // namespace evio
