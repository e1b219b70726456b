#pragma once

#include "evio/core/types.hpp"

namespace evio {

/// Rotation matrix C implementing the stored quaternion convention:
/// C(q) * v_world = v_sensor, equal to the Hamilton sandwich q * v * q^-1.
/// Inputs off unit norm are normalized first; deviations beyond 1e-3 are
/// reported through `norm_flagged` when given.
Mat3 quat_to_rotation(const Quat& q, bool* norm_flagged = nullptr);

/// Unit quaternion with C(exp_quat(phi)) = Exp([phi]x), angle |phi| about phi.
Quat exp_quat(const Vec3& phi);

/// One zero-order-hold gyro step: C(q_new) = Exp(-[omega dt]x) * C(q).
Quat integrate_gyro(const Quat& q, const Vec3& omega_body, double dt);

Mat3 skew(const Vec3& v);

/// SO(3) exponential of [phi]x.
Mat3 exp_so3(const Vec3& phi);

/// Right Jacobian of SO(3): Exp(phi + d) ~ Exp(phi) Exp(Jr(phi) d).
Mat3 right_jacobian_so3(const Vec3& phi);

/// Pinhole projection pi(x) = (x1/x3, x2/x3). Throws CheiralityError when
/// x3 <= eps_z.
Vec2 project_normalized(const Vec3& p_cam, double eps_z = 1e-6);

/// Applies radial-tangential distortion to undistorted normalized coords.
Vec2 distort_normalized(const Vec2& n, const CameraModel& cam);

/// Distorted normalized coords -> pixel coords.
Vec2 normalized_to_pixel(const Vec2& n_distorted, const CameraModel& cam);

/// Undistorted normalized coords -> pixel coords (distorts first).
Vec2 project_to_pixel(const Vec2& n_undistorted, const CameraModel& cam);

/// Pixel -> undistorted normalized coordinates. Newton iteration on the
/// distortion model; throws UndistortError after 20 iterations without
/// convergence.
Vec2 pixel_to_normalized(const Vec2& px, const CameraModel& cam);

}  // namespace evio
