#pragma once

#include <stdexcept>

namespace yf {

/// A request would exceed a configured size ceiling or memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yf
