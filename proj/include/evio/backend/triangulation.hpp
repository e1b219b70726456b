#pragma once

#include <vector>

#include "evio/backend/config.hpp"
#include "evio/backend/state.hpp"
#include "evio/core/types.hpp"

namespace evio {

/// One feature measurement tied to a window pose (undistorted normalized
/// image coordinates).
struct TrackObservation {
  std::int64_t pose_id = -1;
  Vec2 z = Vec2::Zero();
};

struct TriangulationResult {
  bool ok = false;
  Vec3 point_w = Vec3::Zero();
  Mat3 cov_w = Mat3::Zero();      // scaled by the normalized measurement noise
  double max_parallax_rad = 0.0;
};

/// DLT-style linear initialization refined by Gauss-Newton on the normalized
/// reprojection error. Fails (InsufficientParallax) when the maximum pairwise
/// ray angle is below cfg.min_parallax_deg or the depth uncertainty exceeds
/// the depth itself.
TriangulationResult triangulate(const std::vector<TrackObservation>& track,
                                const std::vector<WindowPose>& window,
                                const BackendConfig& cfg, double sigma_norm);

}  // namespace evio
