#pragma once

#include <stdexcept>
#include <string>

namespace tiered {

// Raised when a density integrates to zero over the region.
struct ZeroMassError : std::runtime_error {
  explicit ZeroMassError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a partition does not match the grid it is used with.
struct InconsistentPartitionError : std::runtime_error {
  explicit InconsistentPartitionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when an exhaustive search is asked to enumerate beyond its guard.
struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tiered
