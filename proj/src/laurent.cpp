#include "lpkit/laurent.hpp"

#include <cmath>
#include <iterator>
#include <numbers>
#include <string>

#include "lpkit/errors.hpp"

namespace lpkit {

LaurentPolynomial::LaurentPolynomial(std::map<int, Complex> coeffs) {
  for (const auto& [m, a] : coeffs) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw SchemaError("Laurent coefficient for exponent " + std::to_string(m) + " is not finite");
    }
    if (a != Complex(0.0)) coeffs_.emplace(m, a);
  }
}

LaurentPolynomial LaurentPolynomial::monomial(int m, Complex a) { return LaurentPolynomial({{m, a}}); }

int LaurentPolynomial::min_exponent() const noexcept { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int LaurentPolynomial::max_exponent() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

int LaurentPolynomial::span() const noexcept { return max_exponent() - min_exponent(); }

Complex LaurentPolynomial::at_turns(double t) const {
  Complex s = 0.0;
  for (const auto& [m, a] : coeffs_) {
    double phase = std::fmod(static_cast<double>(m) * t, 1.0);
    s += a * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return s;
}

Complex LaurentPolynomial::operator()(Complex z) const {
  Complex s = 0.0;
  for (const auto& [m, a] : coeffs_) s += a * std::pow(z, m);
  return s;
}

LaurentPolynomial LaurentPolynomial::reversed() const {
  std::map<int, Complex> out;
  for (const auto& [m, a] : coeffs_) out.emplace(-m, a);
  return LaurentPolynomial(std::move(out));
}

CMatrix LaurentPolynomial::apply(const CMatrix& a, const CMatrix& a_inv) const {
  const Eigen::Index n = a.rows();
  CMatrix out = CMatrix::Zero(n, n);
  if (coeffs_.empty()) return out;
  // Walk positive and negative powers incrementally.
  CMatrix power = CMatrix::Identity(n, n);
  int current = 0;
  for (auto it = coeffs_.lower_bound(0); it != coeffs_.end(); ++it) {
    while (current < it->first) {
      power = power * a;
      ++current;
    }
    out += it->second * power;
  }
  power = CMatrix::Identity(n, n);
  current = 0;
  for (auto it = std::make_reverse_iterator(coeffs_.lower_bound(0)); it != coeffs_.rend(); ++it) {
    while (current > it->first) {
      power = power * a_inv;
      --current;
    }
    out += it->second * power;
  }
  return out;
}

}  // namespace lpkit
