#pragma once

#include "evio/core/types.hpp"

namespace evio {

struct BackendConfig {
  int n_slam = 15;        // SLAM feature slots (N)
  int m_window = 10;      // sliding-window poses (M)
  double d_min = 0.3;     // m, minimum scene depth for the semi-infinite prior

  double sigma_px = 2.0;  // measurement noise, pixels (converted by fx at use)
  double gravity = 9.81;  // m/s^2, along world -z

  // IMU noise densities (continuous-time)
  double gyro_noise_std = 2e-3;        // rad/s/sqrt(Hz)
  double accel_noise_std = 2e-2;       // m/s^2/sqrt(Hz)
  double gyro_bias_walk_std = 1e-5;    // rad/s^2/sqrt(Hz)
  double accel_bias_walk_std = 1e-4;   // m/s^3/sqrt(Hz)

  bool use_chi2_gating = true;
  double chi2_confidence = 0.95;
  double min_parallax_deg = 1.0;  // triangulation parallax threshold

  // Body-to-camera extrinsic: C(q_bc) maps body coords into camera coords,
  // p_bc is the camera position in the body frame.
  Quat q_bc = Quat::Identity();
  Vec3 p_bc = Vec3::Zero();

  double rho_clamp = 1e-6;        // 1/m, lower bound after updates
  int promote_min_track_len = 3;  // observations before SLAM promotion
  int slam_stale_drop = 3;        // unmatched match sets before a slot is freed

  // Initial standard deviations of the error state
  double init_std_p = 1e-4;
  double init_std_v = 0.05;
  double init_std_att = 1e-3;  // rad
  double init_std_bg = 5e-3;
  double init_std_ba = 5e-2;

  double gravity_vector_z() const { return -gravity; }
  Vec3 gravity_world() const { return Vec3(0.0, 0.0, -gravity); }
};

}  // namespace evio
