#include "evio/eventfilter/filters.hpp"

#include <limits>

#include "evio/errors.hpp"

namespace evio {

namespace {

// splitmix64: platform-independent draws, unlike std::uniform_int_distribution.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

RandomStrideFilter::RandomStrideFilter(int r, std::uint64_t seed, bool bernoulli)
    : r_(r < 1 ? 1 : r), bernoulli_(bernoulli), rng_state_(seed) {
  phase_ = splitmix64(rng_state_) % static_cast<std::uint64_t>(r_);
}

bool RandomStrideFilter::keep(const Event&) {
  if (r_ == 1) return true;
  if (bernoulli_) {
    const double u = (splitmix64(rng_state_) >> 11) * 0x1.0p-53;
    return u < 1.0 / r_;
  }
  const bool kept = (index_ % static_cast<std::uint64_t>(r_)) == phase_;
  ++index_;
  return kept;
}

RefractoryFilter::RefractoryFilter(int width, int height, double tau)
    : width_(width), tau_(tau),
      last_kept_(static_cast<size_t>(width) * height, -std::numeric_limits<double>::infinity()) {}

bool RefractoryFilter::keep(const Event& e) {
  if (e.t < last_t_) {
    throw StreamOrderError("refractory filter: event time regressed");
  }
  last_t_ = e.t;
  double& last = last_kept_[static_cast<size_t>(e.y) * width_ + e.x];
  if (e.t - last >= tau_) {
    last = e.t;
    return true;
  }
  return false;
}

std::vector<Event> rf_filter(const std::vector<Event>& events, int r, std::uint64_t seed,
                             bool bernoulli) {
  RandomStrideFilter f(r, seed, bernoulli);
  std::vector<Event> out;
  out.reserve(events.size() / static_cast<size_t>(r < 1 ? 1 : r) + 1);
  for (const Event& e : events) {
    if (f.keep(e)) out.push_back(e);
  }
  return out;
}

std::vector<Event> rpf_filter(const std::vector<Event>& events, int width, int height, double tau) {
  RefractoryFilter f(width, height, tau);
  std::vector<Event> out;
  for (const Event& e : events) {
    if (f.keep(e)) out.push_back(e);
  }
  return out;
}

}  // namespace evio
