#ifndef LPKIT_PEXPONENT_HPP
#define LPKIT_PEXPONENT_HPP

#include <limits>

namespace lpkit {

// Hoelder exponent p in [1, inf). The value +inf is reachable only through
// dual() of p = 1 and is accepted by the row-sum bound, nothing else.
class PExponent {
 public:
  // Throws PreconditionError unless 1 <= value < inf.
  explicit PExponent(double value);

  static PExponent infinity() noexcept { return PExponent(Tag{}); }

  double value() const noexcept { return value_; }
  bool is_one() const noexcept { return value_ == 1.0; }
  bool is_two() const noexcept { return value_ == 2.0; }
  bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }

  // p / (p - 1); the infinity marker for p = 1 and 1 for p = inf.
  PExponent dual() const noexcept;

  friend bool operator==(PExponent a, PExponent b) noexcept { return a.value_ == b.value_; }

 private:
  struct Tag {};
  explicit PExponent(Tag) noexcept : value_(std::numeric_limits<double>::infinity()) {}
  struct Raw {};
  PExponent(Raw, double v) noexcept : value_(v) {}

  double value_;
};

}  // namespace lpkit

#endif  // LPKIT_PEXPONENT_HPP
