#pragma once

#include <stdexcept>
#include <string>

namespace evio {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometry / projection
struct CheiralityError : Error { using Error::Error; };
struct UndistortError : Error { using Error::Error; };

// Frontend
struct InitError : Error { using Error::Error; };
struct StreamOrderError : Error { using Error::Error; };

// Backend
struct PropagationError : Error { using Error::Error; };
struct DepthError : Error { using Error::Error; };

// IO
struct ParseError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Evaluation
struct AlignError : Error { using Error::Error; };
struct MetricError : Error { using Error::Error; };

// Synthesis
struct RenderError : Error { using Error::Error; };

}  // namespace evio
