#include "lpkit/angle.hpp"

#include <cmath>
#include <sstream>

#include "lpkit/errors.hpp"

namespace lpkit {

Rational frac(const Rational& x) {
  const boost::multiprecision::cpp_int fl = [&] {
    boost::multiprecision::cpp_int q = numerator(x) / denominator(x);  // truncates toward zero
    if (x < 0 && Rational(q) != x) q -= 1;
    return q;
  }();
  return x - Rational(fl);
}

Angle::Angle(const Rational& turns) : turns_(frac(turns)) {}

Angle::Angle(long long num, long long den) {
  if (den == 0) throw SchemaError("angle with zero denominator");
  turns_ = frac(Rational(num, den));
}

Rational snap_rational(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) throw SchemaError("non-finite angle");
  // Continued-fraction convergents of x.
  const double whole = std::floor(x);
  double rest = x - whole;
  long long h_prev = 1, h = static_cast<long long>(whole);
  long long k_prev = 0, k = 1;
  for (int it = 0; it < 64; ++it) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol) {
      return Rational(h, k);
    }
    if (rest == 0.0) break;
    const double inv = 1.0 / rest;
    const double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    const auto a = static_cast<long long>(a_d);
    rest = inv - a_d;
    const long long h_next = a * h + h_prev;
    const long long k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
  }
  return Rational(x);
}

Angle Angle::from_turns(double turns) { return Angle(snap_rational(turns)); }

std::string Angle::to_string() const {
  std::ostringstream os;
  os << turns_;
  return os.str();
}

double circle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

}  // namespace lpkit
