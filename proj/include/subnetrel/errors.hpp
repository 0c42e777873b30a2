#pragma once

#include <stdexcept>

namespace subnetrel {

// Request exceeds the explicit-enumeration or symbolic size caps.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subnetrel
