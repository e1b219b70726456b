#pragma once

#include <vector>

#include "evio/core/types.hpp"
#include "evio/frontend/types.hpp"

namespace evio {

/// Harris corners on a log-brightness frame, strongest first. Corners keep
/// min_corner_distance from `existing` positions and from each other, stay
/// border_margin() away from the image edge, and at most
/// max_features - existing.size() are returned.
std::vector<Vec2> detect_features(const Frame& frame, const std::vector<Vec2>& existing,
                                  const TrackerConfig& cfg);

}  // namespace evio
