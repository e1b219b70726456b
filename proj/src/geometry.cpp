#include "evio/core/geometry.hpp"

#include <cmath>

#include "evio/errors.hpp"

namespace evio {

Mat3 quat_to_rotation(const Quat& q_in, bool* norm_flagged) {
  const double n = q_in.norm();
  if (norm_flagged) *norm_flagged = std::abs(n - 1.0) > 1e-3;
  Quat q = q_in;
  q.normalize();
  const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
  Mat3 c;
  c << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return c;
}

Quat exp_quat(const Vec3& phi) {
  const double angle = phi.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * phi.x(), 0.5 * phi.y(), 0.5 * phi.z());
    q.normalize();
    return q;
  }
  const double half = 0.5 * angle;
  const Vec3 axis = phi / angle;
  const double s = std::sin(half);
  return Quat(std::cos(half), s * axis.x(), s * axis.y(), s * axis.z());
}

Quat integrate_gyro(const Quat& q, const Vec3& omega_body, double dt) {
  Quat q_new = exp_quat(-omega_body * dt) * q;
  q_new.normalize();
  return q_new;
}

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(),
      v.z(), 0, -v.x(),
      -v.y(), v.x(), 0;
  return m;
}

Mat3 exp_so3(const Vec3& phi) {
  const double angle = phi.norm();
  const Mat3 s = skew(phi);
  if (angle < 1e-9) {
    return Mat3::Identity() + s + 0.5 * s * s;
  }
  const double a = std::sin(angle) / angle;
  const double b = (1.0 - std::cos(angle)) / (angle * angle);
  return Mat3::Identity() + a * s + b * s * s;
}

Mat3 right_jacobian_so3(const Vec3& phi) {
  const double angle = phi.norm();
  const Mat3 s = skew(phi);
  if (angle < 1e-6) {
    return Mat3::Identity() - 0.5 * s + (1.0 / 6.0) * s * s;
  }
  const double a2 = angle * angle;
  const double b = (1.0 - std::cos(angle)) / a2;
  const double c = (angle - std::sin(angle)) / (a2 * angle);
  return Mat3::Identity() - b * s + c * s * s;
}

Vec2 project_normalized(const Vec3& p_cam, double eps_z) {
  if (p_cam.z() <= eps_z) {
    throw CheiralityError("projection with non-positive depth z=" + std::to_string(p_cam.z()));
  }
  return Vec2(p_cam.x() / p_cam.z(), p_cam.y() / p_cam.z());
}

Vec2 distort_normalized(const Vec2& n, const CameraModel& cam) {
  const double x = n.x(), y = n.y();
  const double r2 = x * x + y * y;
  const double radial = 1.0 + r2 * (cam.k1 + r2 * (cam.k2 + r2 * cam.k3));
  const double xd = x * radial + 2.0 * cam.p1 * x * y + cam.p2 * (r2 + 2.0 * x * x);
  const double yd = y * radial + cam.p1 * (r2 + 2.0 * y * y) + 2.0 * cam.p2 * x * y;
  return Vec2(xd, yd);
}

Vec2 normalized_to_pixel(const Vec2& nd, const CameraModel& cam) {
  return Vec2(cam.fx * nd.x() + cam.cx, cam.fy * nd.y() + cam.cy);
}

Vec2 project_to_pixel(const Vec2& n, const CameraModel& cam) {
  return normalized_to_pixel(distort_normalized(n, cam), cam);
}

namespace {

// 2x2 Jacobian of distort_normalized at n.
Mat2 distort_jacobian(const Vec2& n, const CameraModel& cam) {
  const double x = n.x(), y = n.y();
  const double r2 = x * x + y * y;
  const double radial = 1.0 + r2 * (cam.k1 + r2 * (cam.k2 + r2 * cam.k3));
  const double dradial_dr2 = cam.k1 + 2.0 * cam.k2 * r2 + 3.0 * cam.k3 * r2 * r2;
  Mat2 j;
  j(0, 0) = radial + x * dradial_dr2 * 2.0 * x + 2.0 * cam.p1 * y + 6.0 * cam.p2 * x;
  j(0, 1) = x * dradial_dr2 * 2.0 * y + 2.0 * cam.p1 * x + 2.0 * cam.p2 * y;
  j(1, 0) = y * dradial_dr2 * 2.0 * x + 2.0 * cam.p1 * x + 2.0 * cam.p2 * y;
  j(1, 1) = radial + y * dradial_dr2 * 2.0 * y + 6.0 * cam.p1 * y + 2.0 * cam.p2 * x;
  return j;
}

}  // namespace

Vec2 pixel_to_normalized(const Vec2& px, const CameraModel& cam) {
  const Vec2 target((px.x() - cam.cx) / cam.fx, (px.y() - cam.cy) / cam.fy);
  if (!cam.has_distortion()) return target;

  Vec2 n = target;
  for (int it = 0; it < 20; ++it) {
    const Vec2 err = distort_normalized(n, cam) - target;
    if (err.norm() < 1e-12) return n;
    const Mat2 j = distort_jacobian(n, cam);
    const double det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
    if (std::abs(det) < 1e-14) break;
    n -= j.inverse() * err;
  }
  if ((distort_normalized(n, cam) - target).norm() < 1e-10) return n;
  throw UndistortError("undistortion did not converge for pixel (" +
                       std::to_string(px.x()) + ", " + std::to_string(px.y()) + ")");
}

}  // namespace evio
