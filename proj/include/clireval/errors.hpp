#pragma once

#include <stdexcept>

namespace clireval {

/// Invalid input data or configuration. Maps to CLI exit code 1;
/// anything else escaping as std::exception maps to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clireval
