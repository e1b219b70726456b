#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evio/core/types.hpp"

namespace evio {

/// Buffered line-by-line event reader; sequences run to 1e8 events so the
/// stream is never materialized. Validates polarity and time monotonicity.
class EventStream {
 public:
  explicit EventStream(const std::string& path);

  /// Returns false at end of stream.
  bool next(Event& e);

  std::uint64_t line_number() const { return line_; }

 private:
  std::ifstream in_;
  std::string path_;
  std::uint64_t line_ = 0;
  double last_t_ = -std::numeric_limits<double>::infinity();
};

struct FrameEntry {
  double t = 0.0;
  std::string path;  // resolved relative to the dataset directory
};

struct Dataset {
  std::string dir;
  std::string events_path;
  std::vector<FrameEntry> frames;
  std::vector<ImuSample> imu;
  Trajectory groundtruth;  // empty when absent
  CameraModel camera;
  bool has_groundtruth = false;

  EventStream open_events() const { return EventStream(events_path); }
};

/// Loads the text-format dataset layout: events.txt and calib.txt required;
/// imu.txt, images.txt, groundtruth.txt optional. Event data stays on disk.
/// width/height: taken from `size_override` if positive, else from the first
/// frame image, else 240x180.
Dataset load_dataset(const std::string& dir, int width_override = 0, int height_override = 0);

/// Decodes a frame image (8-bit grayscale) into log brightness
/// log(I/255 + 0.01).
Frame load_frame(const FrameEntry& entry);

/// Writes `t px py pz qx qy qz qw` per pose, scalar-last on disk, 9
/// significant digits.
void write_trajectory(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory(const std::string& path);

Event parse_event_line(const std::string& line, std::uint64_t line_no, const std::string& path);

void write_events_text(const std::vector<Event>& events, const std::string& path);
void write_imu_text(const std::vector<ImuSample>& imu, const std::string& path);
void write_calib_text(const CameraModel& cam, const std::string& path);
CameraModel read_calib_text(const std::string& path);

/// 8-bit grayscale image write (format from the extension; PGM/PNG).
void write_gray8(const std::string& path, const ImageF& log_img);

}  // namespace evio
