#pragma once

#include <stdexcept>
#include <string>

namespace lctcert {

struct DegenerateNormalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MethodInapplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundedRegionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NeverZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroMassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lctcert
