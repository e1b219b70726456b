#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace evio {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

// Quaternions are Hamilton, scalar-first in constructors and on all text
// interfaces except trajectory files (scalar-last on disk). A stored
// quaternion q represents the rotation of the world frame into the sensor
// frame: quat_to_rotation(q) * v_world = v_sensor.
using Quat = Eigen::Quaterniond;

/// Single polarity change: the atomic sensor datum.
struct Event {
  double t = 0.0;          // seconds, non-decreasing within a stream
  std::int16_t x = 0;      // pixel column
  std::int16_t y = 0;      // pixel row
  std::int8_t polarity = 1;  // +1 or -1
};

inline bool event_time_order(const Event& a, const Event& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.y != b.y) return a.y < b.y;
  if (a.x != b.x) return a.x < b.x;
  return a.polarity < b.polarity;
}

struct ImuSample {
  double t = 0.0;
  Vec3 gyro = Vec3::Zero();   // rad/s, body frame
  Vec3 accel = Vec3::Zero();  // m/s^2, body frame specific force
};

struct Pose {
  double t = 0.0;
  Vec3 p = Vec3::Zero();                  // sensor position, world frame
  Quat q = Quat::Identity();              // world -> sensor
};

struct CameraModel {
  int width = 240;
  int height = 180;
  double fx = 200.0, fy = 200.0;
  double cx = 120.0, cy = 90.0;
  // radial-tangential distortion
  double k1 = 0.0, k2 = 0.0, p1 = 0.0, p2 = 0.0, k3 = 0.0;

  bool has_distortion() const {
    return k1 != 0.0 || k2 != 0.0 || p1 != 0.0 || p2 != 0.0 || k3 != 0.0;
  }
};

/// Row-major float grid; used for log-brightness frames and synth textures.
class ImageF {
 public:
  ImageF() = default;
  ImageF(int width, int height, float fill = 0.f)
      : width_(width), height_(height), data_(static_cast<size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }

  float& at(int x, int y) { return data_[static_cast<size_t>(y) * width_ + x]; }
  float at(int x, int y) const { return data_[static_cast<size_t>(y) * width_ + x]; }

  bool contains(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Grayscale frame stored as log-brightness. 8-bit input converts with
/// log(I/255 + 0.01).
struct Frame {
  double t = 0.0;
  ImageF img;
};

struct Trajectory {
  std::vector<Pose> poses;

  bool empty() const { return poses.empty(); }
  size_t size() const { return poses.size(); }
};

}  // namespace evio
