#pragma once

#include <stdexcept>

namespace wci {

// Error taxonomy. The CLI maps every one of these to exit code 2 (invalid
// input); property violations found by the verifier are reported in-band.

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedOperationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wci
