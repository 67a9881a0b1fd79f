#pragma once

#include <stdexcept>

namespace ialign {

// Antenna/stream counts that cannot form a valid scenario.
struct InvalidDimensionsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Vector or matrix arguments inconsistent with the scenario dimensions.
struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A channel inverse required by the closed-form construction does not exist.
struct SingularChannelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The cost function returned NaN or Inf; the run is aborted.
struct NonFiniteCostError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An output file or directory could not be created or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ialign
