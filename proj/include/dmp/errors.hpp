#pragma once

#include <stdexcept>
#include <string>

namespace dmp {

// A configured resource cap (memo entries, Bell-number term count) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quasi-polynomial fit disagreed with held-out samples.
class FitValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dmp
