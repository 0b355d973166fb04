#ifndef LPKIT_LAURENT_HPP
#define LPKIT_LAURENT_HPP

#include <complex>
#include <map>

#include "lpkit/pnorm.hpp"

namespace lpkit {

// f(x) = sum_m a_m x^m with finitely many nonzero a_m, m in Z.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  // Zero coefficients are dropped; non-finite ones raise SchemaError.
  explicit LaurentPolynomial(std::map<int, Complex> coeffs);

  static LaurentPolynomial monomial(int m, Complex a = 1.0);

  const std::map<int, Complex>& terms() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept;
  int max_exponent() const noexcept;
  // max_exponent - min_exponent, 0 for the zero polynomial.
  int span() const noexcept;

  // f(exp(2 pi i t)) with t in turns.
  Complex at_turns(double t) const;
  Complex operator()(Complex z) const;

  // f(x^{-1}): exponents negated.
  LaurentPolynomial reversed() const;

  // sum_m a_m A^m, negative powers taken from a_inv.
  CMatrix apply(const CMatrix& a, const CMatrix& a_inv) const;

 private:
  std::map<int, Complex> coeffs_;
};

}  // namespace lpkit

#endif  // LPKIT_LAURENT_HPP
