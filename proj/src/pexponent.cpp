#include "lpkit/pexponent.hpp"

#include <cmath>
#include <string>

#include "lpkit/errors.hpp"

namespace lpkit {

PExponent::PExponent(double value) : value_(value) {
  if (!std::isfinite(value) || !(value >= 1.0)) {
    throw PreconditionError("exponent p must be a finite real >= 1, got " + std::to_string(value));
  }
}

PExponent PExponent::dual() const noexcept {
  if (is_one()) return infinity();
  if (is_infinite()) return PExponent(Raw{}, 1.0);
  return PExponent(Raw{}, value_ / (value_ - 1.0));
}

}  // namespace lpkit
