#pragma once

#include <optional>

#include "evio/core/types.hpp"
#include "evio/frontend/types.hpp"

namespace evio {

enum class FeedResult { Accumulated, Rejected, BatchReady };

/// Template extraction around `corner`; throws InitError when the patch would
/// cross the border margin.
PatchState init_patch(const Frame& frame, const Vec2& corner, int feature_id,
                      const TrackerConfig& cfg);

/// Re-extracts the gradient template at the patch's current center from a new
/// frame, keeping the partially accumulated batch (cells shifted by the
/// integer re-centering delta). Returns false when the center is out of the
/// valid border region and the patch must be dropped.
bool refresh_template(PatchState& patch, const Frame& frame, const TrackerConfig& cfg);

/// Folds one event into the measured brightness-increment patch.
FeedResult feed_event(PatchState& patch, const Event& e, const TrackerConfig& cfg);

/// Gauss-Newton alignment of the normalized measured and predicted
/// brightness-increment patches over (tx, ty, theta, flow angle). On success
/// emits an observation at t_batch and resets the batch (single use).
std::optional<FeatureObservation> optimize_patch(PatchState& patch, double t_batch,
                                                 const TrackerConfig& cfg);

/// Catmull-Rom sample of a gradient grid with analytic spatial derivative.
struct GradSample {
  double v = 0.0, dx = 0.0, dy = 0.0;
};
GradSample sample_bicubic(const Eigen::ArrayXXf& grid, double x, double y);

/// Residual of the alignment cost at the given parameters (tx, ty, theta,
/// flow angle), plus its analytic Jacobian. Exposed for testing; r is the
/// difference of the two unit-normalized patches.
bool alignment_residual(const PatchState& patch, const Eigen::Vector4d& params,
                        Eigen::VectorXd& r, Eigen::MatrixXd* jac);

/// Predicted brightness increment -<grad L(W(u, p)), v> for every patch cell.
Eigen::VectorXd predict_increment(const PatchState& patch, const Eigen::Vector4d& params);

int adaptive_batch_size(const Eigen::ArrayXXf& gx, const Eigen::ArrayXXf& gy,
                        int margin, int patch_size, const TrackerConfig& cfg);

}  // namespace evio
