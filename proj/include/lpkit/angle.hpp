#ifndef LPKIT_ANGLE_HPP
#define LPKIT_ANGLE_HPP

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpkit {

using Rational = boost::multiprecision::cpp_rational;

// Point of S^1 measured in turns, kept exact and reduced to [0, 1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& turns);
  Angle(long long num, long long den);

  // Floats within 1e-12 of a rational with denominator <= 10^6 snap to it;
  // any other double is taken at its exact binary value.
  static Angle from_turns(double turns);

  const Rational& turns() const noexcept { return turns_; }
  double to_double() const { return turns_.convert_to<double>(); }
  std::string to_string() const;

  Angle operator+(const Rational& shift) const { return Angle(turns_ + shift); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.turns_ < b.turns_) return std::strong_ordering::less;
    if (a.turns_ > b.turns_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational turns_{0};
};

// x - floor(x).
Rational frac(const Rational& x);

// Snaps to the best rational approximation with denominator <= max_den when
// within tol, otherwise returns the exact value of x.
Rational snap_rational(double x, long long max_den = 1000000, double tol = 1e-12);

// Circular distance in turns, in [0, 1/2].
double circle_distance(double a, double b);

}  // namespace lpkit

#endif  // LPKIT_ANGLE_HPP
