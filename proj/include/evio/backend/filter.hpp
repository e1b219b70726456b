#pragma once

#include <map>
#include <optional>
#include <vector>

#include "evio/backend/config.hpp"
#include "evio/backend/state.hpp"
#include "evio/backend/triangulation.hpp"
#include "evio/core/types.hpp"
#include "evio/sync/synchronizer.hpp"

namespace evio {

/// Inverse-depth to Cartesian transform: feature j expressed in the target
/// camera frame, p_ci = C(q_wc_i) (p_wc_a + (1/rho) C(q_wc_a)^T (a, b, 1)^T - p_wc_i).
Vec3 slam_to_camera(const SlamFeature& f, const WindowPose& anchor, const WindowPose& target);

/// Measurement Jacobian blocks of the normalized-feature model w.r.t. the
/// error state, exposed for finite-difference verification.
struct SlamMeasurementJacobian {
  Vec2 prediction;
  Eigen::Matrix<double, 2, 6> d_anchor;  // [dp dtheta] of the anchor pose
  Eigen::Matrix<double, 2, 6> d_target;  // [dp dtheta] of the target pose
  Eigen::Matrix<double, 2, 3> d_feature; // [dalpha dbeta drho]
};
SlamMeasurementJacobian slam_measurement_jacobian(const SlamFeature& f, const WindowPose& anchor,
                                                  const WindowPose& target);

struct SlamInitRecord {
  int feature_id = -1;
  double rho0 = 0.0;
  double sigma0 = 0.0;   // prior std of rho (untriangulated inits)
  bool triangulated = false;
};

struct UpdateReport {
  int slam_accepted = 0;
  int slam_rejected = 0;
  int msckf_updates = 0;
  int msckf_rejected = 0;
  int slam_initialized = 0;
  int rho_clamps = 0;
  std::vector<std::pair<int, bool>> slam_flags;  // feature_id -> accepted
};

/// Error-state EKF: inertial propagation, pose augmentation, SLAM and MSCKF
/// updates over synchronized match sets.
class Ekf {
 public:
  Ekf(const BackendConfig& cfg, const CameraModel& cam);

  /// Sets the mean IMU state and resets the covariance to the configured
  /// initial uncertainties. Window and SLAM sets start empty.
  void initialize(const ImuState& imu, double t);

  /// Strapdown zero-order-hold propagation over dt with one IMU reading.
  void propagate(const ImuSample& imu, double dt);

  /// Appends the current camera pose to the window; slides out (and
  /// re-anchors from) the oldest pose beyond m_window.
  void augment_pose();

  /// Full visual update for one match set: augmentation, SLAM update, MSCKF
  /// updates of finished tracks, and SLAM promotion of persistent tracks.
  UpdateReport process_matchset(const MatchSet& matches);

  const FilterState& state() const { return state_; }
  FilterState& mutable_state() { return state_; }
  const BackendConfig& config() const { return cfg_; }

  Pose camera_pose() const;

  const std::vector<SlamInitRecord>& slam_init_log() const { return slam_init_log_; }
  std::uint64_t total_msckf_updates() const { return total_msckf_updates_; }
  std::uint64_t total_rho_clamps() const { return total_rho_clamps_; }

  // Individual update stages, public for direct testing.
  UpdateReport slam_update(const std::vector<std::pair<int, Vec2>>& matches);
  bool msckf_update(const std::vector<TrackObservation>& track);
  void init_slam_feature(int feature_id, const std::vector<TrackObservation>& track,
                         const TriangulationResult& tri);

  double sigma_norm() const;  // measurement std in normalized coordinates

 private:
  struct PendingTrack {
    std::vector<TrackObservation> obs;
    bool seen_this_tick = false;
  };

  bool apply_update(const MatX& h, const VecX& r, const MatX& r_noise);
  void prune_track_pose(std::int64_t pose_id);
  void drop_slam_feature(int slam_idx);
  void remove_state_block(int offset, int size);

  BackendConfig cfg_;
  CameraModel cam_;
  FilterState state_;
  std::int64_t next_pose_id_ = 0;
  std::map<int, PendingTrack> tracks_;
  std::vector<SlamInitRecord> slam_init_log_;
  std::uint64_t total_msckf_updates_ = 0;
  std::uint64_t total_rho_clamps_ = 0;
};

/// Discrete error-state transition and additive noise for one propagation
/// step; exposed for finite-difference verification.
void propagation_matrices(const ImuState& imu, const ImuSample& sample, double dt,
                          const BackendConfig& cfg, Eigen::Matrix<double, 15, 15>& phi,
                          Eigen::Matrix<double, 15, 15>& qd);

/// Mean-only strapdown step (shared by the filter and tests).
ImuState propagate_mean(const ImuState& imu, const ImuSample& sample, double dt,
                        const BackendConfig& cfg);

double chi2_quantile_95(int dof);

}  // namespace evio
