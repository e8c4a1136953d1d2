#pragma once

#include <stdexcept>
#include <string>

namespace rgl {

// Raised when an exact oracle is asked to run beyond its configured size cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct NoHittingTime : std::runtime_error {
  explicit NoHittingTime(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rgl
