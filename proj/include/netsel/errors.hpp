#pragma once

#include <stdexcept>
#include <string>

namespace netsel {

// Each error family maps onto one CLI exit code (see cli.hpp).

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netsel
