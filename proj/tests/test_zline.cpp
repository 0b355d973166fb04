#include <doctest.h>

#include <cmath>

#include "lpkit/errors.hpp"
#include "lpkit/zline.hpp"
#include "support.hpp"

using namespace lpkit;
using testing_support::random_laurent;

namespace {

const Complex I(0.0, 1.0);

LaurentPolynomial poly(std::map<int, Complex> c) { return LaurentPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("laurent basics") {
  const auto f = poly({{-2, 1.0}, {0, 0.0}, {3, I}});
  CHECK(f.terms().size() == 2);
  CHECK(f.min_exponent() == -2);
  CHECK(f.max_exponent() == 3);
  CHECK(f.span() == 5);
  CHECK(std::abs(f.at_turns(0.25) - (std::pow(I, -2) + I * std::pow(I, 3))) < 1e-14);
  CHECK(f.reversed().min_exponent() == -3);
  CHECK_THROWS_AS(poly({{0, Complex(INFINITY, 0)}}), SchemaError);

  CMatrix a(2, 2);
  a << 0, 1, 1, 0;
  const CMatrix fa = poly({{-1, 2.0}, {0, 1.0}, {2, 3.0}}).apply(a, a);
  CHECK(std::abs(fa(0, 0) - Complex(4.0)) < 1e-14);
  CHECK(std::abs(fa(0, 1) - Complex(2.0)) < 1e-14);
}

TEST_CASE("norm_l1 and norm_sup") {
  CHECK(norm_l1(poly({{0, 1.0}, {1, 1.0}})) == 2.0);
  CHECK(norm_l1(LaurentPolynomial::monomial(5)) == 1.0);
  CHECK(norm_l1(poly({{0, 3.0}, {2, -4.0 * I}})) == doctest::Approx(7.0));

  CHECK(norm_sup(poly({{0, 1.0}, {1, 1.0}})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(norm_sup(LaurentPolynomial::monomial(-3)) == doctest::Approx(1.0).epsilon(1e-12));
  const auto s = sup_search(poly({{0, 1.0}, {1, -1.0}}));
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.argmax == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(s.certified >= s.value);
  CHECK_THROWS_AS(norm_sup(poly({{0, 1.0}, {10, 1.0}}), 20), PreconditionError);
}

TEST_CASE("cyclic lower bounds") {
  const auto f = poly({{0, 1.0}, {1, 1.0}});
  CHECK(cyclic_lower(f, 2, PExponent(1.0)) == doctest::Approx(2.0));
  CHECK(cyclic_lower(f, 1, PExponent(1.0)) == doctest::Approx(2.0));
  for (int n : {1, 3, 8}) {
    for (double p : {1.0, 3.0}) CHECK(cyclic_lower(LaurentPolynomial::monomial(1), n, PExponent(p)) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(cyclic_lower(f, 0, PExponent(1.0)), PreconditionError);
}

TEST_CASE("property: rotating the base point by an n-th root does not change the cyclic value") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 6; ++t) {
    const auto f = random_laurent(rng, 4, -2);
    const int n = 5 + t;
    for (double p : {1.0, 3.0}) {
      const double base = cyclic_estimate(f, n, PExponent(p), 0.0).lower;
      const double moved = cyclic_estimate(f, n, PExponent(p), 2.0 / n).lower;
      CHECK(std::abs(base - moved) <= 1e-8 * std::max(1.0, base));
    }
  }
}

TEST_CASE("property: divisibility monotonicity") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_laurent(rng, 3);
    for (double p : {1.0, 1.5, 3.0}) {
      double prev = 0.0;
      for (int n : {1, 2, 4, 8, 16, 32}) {
        const double v = cyclic_lower(f, n, PExponent(p));
        CHECK(v >= prev - 1e-8);
        prev = v;
      }
    }
  }
}

TEST_CASE("truncation schedule") {
  CHECK(truncation_schedule(12) == std::vector<int>{1, 2, 3, 4, 6, 8, 12});
  CHECK(truncation_schedule(1) == std::vector<int>{1});
}

TEST_CASE("fpz_norm examples") {
  const auto a = fpz_norm(poly({{0, 1.0}, {1, -1.0}}), PExponent(1.5));
  CHECK(a.lower == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(a.upper == doctest::Approx(2.0).epsilon(1e-6));
  for (double p : {1.0, 1.5, 3.0}) {
    const auto m = fpz_norm(LaurentPolynomial::monomial(4, -I), PExponent(p));
    CHECK(m.lower == doctest::Approx(1.0));
    CHECK(m.upper == doctest::Approx(1.0));
  }
  const auto e1 = fpz_norm(poly({{0, 1.0}, {1, 1.0}}), PExponent(1.0));
  CHECK(e1.method == NormMethod::ExactP1);
  CHECK(e1.lower == 2.0);
  CHECK(e1.upper == 2.0);
  CHECK_THROWS_AS(fpz_norm(poly({{0, 1.0}}), PExponent(3.0), FpzOptions{0.0}), PreconditionError);
}

TEST_CASE("property: sandwich and duality for fpz_norm") {
  std::mt19937_64 rng(33);
  FpzOptions o;
  o.n_max = 256;
  for (int t = 0; t < 5; ++t) {
    const auto f = random_laurent(rng, 1 + t % 4, -1);
    const double sup = norm_sup(f);
    const double l1 = norm_l1(f);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const auto e = fpz_norm(f, PExponent(p), o);
      CHECK(sup - 1e-6 <= e.lower);
      CHECK(e.lower <= e.upper);
      CHECK(e.upper <= l1 + 1e-12);
      if (p == 2.0) CHECK(std::abs(e.upper - sup) < 1e-9);
      if (p == 1.0) continue;  // dual exponent is infinite
      const auto d = fpz_norm(f.reversed(), PExponent(p).dual(), o);
      CHECK(e.overlaps(d, 1e-9));
    }
  }
}

TEST_CASE("p = 1 convergence to the l1 norm along the schedule") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 4; ++t) {
    const auto f = random_laurent(rng, 5);
    CHECK(cyclic_lower(f, 512, PExponent(1.0)) >= norm_l1(f) - 1e-3);
  }
}
