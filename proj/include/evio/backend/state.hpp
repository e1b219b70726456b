#pragma once

#include <vector>

#include "evio/backend/config.hpp"
#include "evio/core/types.hpp"

namespace evio {

/// IMU mean state. Error-state ordering: [dp dv dtheta dbg dba], dimension 15.
/// Attitude error dtheta is multiplicative on the left of the world->body
/// rotation: C_true = (I + [dtheta]x) C(q_wb).
struct ImuState {
  Vec3 p_w = Vec3::Zero();
  Vec3 v_w = Vec3::Zero();
  Quat q_wb = Quat::Identity();  // world -> body
  Vec3 b_g = Vec3::Zero();
  Vec3 b_a = Vec3::Zero();
};

struct WindowPose {
  std::int64_t pose_id = -1;  // monotone id, stable across window slides
  double t = 0.0;
  Vec3 p_w = Vec3::Zero();    // camera position, world frame
  Quat q_wc = Quat::Identity();  // world -> camera
};

/// Inverse-depth SLAM feature anchored to a window pose:
/// x_cam_anchor = (alpha, beta, 1) / rho.
struct SlamFeature {
  int feature_id = -1;
  std::int64_t anchor_pose_id = -1;
  double alpha = 0.0;
  double beta = 0.0;
  double rho = 1.0;  // 1/m, > 0
  int misses = 0;    // consecutive match sets without an observation
};

/// Full filter state: mean plus the covariance of the error state
/// [imu(15) | window poses 6 each | slam features 3 each].
struct FilterState {
  double t = 0.0;
  ImuState imu;
  std::vector<WindowPose> window;
  std::vector<SlamFeature> slam;
  MatX cov;

  int dim() const { return 15 + 6 * static_cast<int>(window.size()) + 3 * static_cast<int>(slam.size()); }
  static constexpr int kImuDim = 15;
  int pose_offset(int i) const { return kImuDim + 6 * i; }
  int slam_offset(int j) const { return kImuDim + 6 * static_cast<int>(window.size()) + 3 * j; }

  int window_index(std::int64_t pose_id) const {
    for (size_t i = 0; i < window.size(); ++i) {
      if (window[i].pose_id == pose_id) return static_cast<int>(i);
    }
    return -1;
  }
  int slam_index(int feature_id) const {
    for (size_t j = 0; j < slam.size(); ++j) {
      if (slam[j].feature_id == feature_id) return static_cast<int>(j);
    }
    return -1;
  }
};

/// Camera pose derived from the IMU state through the fixed extrinsic.
WindowPose camera_pose_from_imu(const ImuState& imu, double t, const BackendConfig& cfg);

/// Retraction: applies an error vector to the mean state (quaternions via the
/// left-multiplicative exponential). Used for EKF injection and for
/// finite-difference Jacobian checks.
FilterState apply_error(const FilterState& state, const VecX& delta);

/// Symmetrizes in place and returns the most negative eigenvalue ratio
/// (min_eig / trace) for health checks.
void symmetrize(MatX& p);

}  // namespace evio
