#pragma once

#include <cstdint>
#include <vector>

#include "evio/core/types.hpp"

namespace evio {

enum class EventFilterMode { None, RandomStride, Refractory };

struct FilterConfig {
  EventFilterMode mode = EventFilterMode::None;
  int r = 1;             // stride for RandomStride
  double tau = 0.0;      // seconds, refractory window
  bool bernoulli = false;  // RandomStride variant: keep with p = 1/r instead of striding
  std::uint64_t seed = 0;
};

/// Streaming random filter keeping every r-th event. Default mode is strided
/// with a phase drawn once from the seed, giving exact keep counts; the
/// bernoulli flag switches to independent keep-with-probability-1/r draws.
class RandomStrideFilter {
 public:
  RandomStrideFilter(int r, std::uint64_t seed, bool bernoulli = false);

  bool keep(const Event& e);
  std::uint64_t phase() const { return phase_; }

 private:
  int r_;
  bool bernoulli_;
  std::uint64_t phase_;
  std::uint64_t index_ = 0;
  std::uint64_t rng_state_;
};

/// Streaming refractory filter: an event is kept iff no event at the same
/// pixel was kept within the preceding tau seconds.
class RefractoryFilter {
 public:
  RefractoryFilter(int width, int height, double tau);

  bool keep(const Event& e);

 private:
  int width_;
  double tau_;
  double last_t_ = -1.0;
  std::vector<double> last_kept_;
};

std::vector<Event> rf_filter(const std::vector<Event>& events, int r, std::uint64_t seed,
                             bool bernoulli = false);
std::vector<Event> rpf_filter(const std::vector<Event>& events, int width, int height, double tau);

}  // namespace evio
