#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "evio/core/types.hpp"

namespace evio {

struct TrackerConfig {
  int patch_size = 25;        // P, odd
  int max_features = 45;
  double harris_k = 0.04;
  int harris_block = 3;
  double harris_quality = 0.01;       // relative response floor vs frame max
  double min_corner_distance = 20.0;  // px
  int gn_max_iters = 10;
  double gn_tol = 1e-4;               // on parameter step norm
  double outlier_residual_threshold = 0.7;  // normalized cost, range [0, 2]
  int batch_floor = 50;
  int batch_ceiling = 2000;
  double contrast = 0.1;      // per-event increment of the measured patch
  int template_margin = 8;    // extra gradient ring sampled around the patch

  int half_patch() const { return patch_size / 2; }
  // Corners closer than this to the border are excluded at detection/init.
  int border_margin() const { return patch_size / 2 + 1; }
};

enum class PatchStatus { Active, Lost, Outlier };

/// Per-feature tracker state: frame-derived gradient template plus the
/// event-measured brightness-increment accumulator it is aligned against.
struct PatchState {
  int feature_id = -1;
  PatchStatus status = PatchStatus::Active;

  Vec2 center = Vec2::Zero();        // current estimate, px
  Vec2 template_pos = Vec2::Zero();  // feature position at template extraction
  Eigen::Vector2i accum_origin;      // integer patch origin for delta_l indexing

  // Gradient template over (P + 2*margin)^2 around template_pos, row-major.
  Eigen::ArrayXXf grad_x, grad_y;

  Eigen::ArrayXXf delta_l;       // P x P accumulated brightness increment
  int events_in_batch = 0;
  int batch_size = 0;

  Eigen::Vector3d warp_p = Eigen::Vector3d::Zero();  // (tx, ty, theta)
  Vec2 flow_v = Vec2(1.0, 0.0);                      // unit flow direction
  double last_residual = 0.0;

  EIGEN_MAKE_ALIGNED_OPERATOR_NEW
};

/// Asynchronous tracker output sample.
struct FeatureObservation {
  int feature_id = -1;
  double t = 0.0;      // timestamp of the last event folded into the batch
  Vec2 pos_px = Vec2::Zero();
  double residual = 0.0;
};

}  // namespace evio
