#pragma once

#include <stdexcept>
#include <string>

namespace crnx {

/// Malformed user input: bad text, inconsistent dimensions, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or exploration bound was hit before the answer was known.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crnx
