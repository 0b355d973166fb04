#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frozen_values.hpp"
#include "lpkit/cyclic.hpp"
#include "lpkit/errors.hpp"
#include "support.hpp"

using namespace lpkit;
using testing_support::gaussian_tuple;
using testing_support::unimodular;

namespace {

const Complex I(0.0, 1.0);

bool same(const CyclicElement& a, const std::vector<Complex>& b, double tol = 1e-14) {
  if (a.order() != static_cast<int>(b.size())) return false;
  for (int j = 0; j < a.order(); ++j) {
    if (std::abs(a[j] - b[static_cast<std::size_t>(j)]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("circulant realisation") {
  const CMatrix id = circulant_of(CyclicElement({1.0, 1.0}));
  CHECK((id - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  const CMatrix c = circulant_of(CyclicElement({1.0, I}));
  CMatrix want(2, 2);
  want << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
  CHECK((c - want).cwiseAbs().maxCoeff() < 1e-15);

  // circulant pattern and agreement with the coefficient formula
  std::mt19937_64 rng(3);
  const CyclicElement x(gaussian_tuple(rng, 5));
  const CMatrix m = circulant_of(x);
  const auto coeff = circulant_coefficients(x);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) CHECK(std::abs(m(a, b) - coeff[static_cast<std::size_t>((a - b + 5) % 5)]) < 1e-13);
  }
}

TEST_CASE("canonical generator is a shift permutation") {
  for (int n : {2, 3, 5}) {
    const CMatrix s = circulant_of(CyclicElement::canonical(n, 1));
    CHECK((s.cwiseAbs() - s.cwiseAbs().unaryExpr([](double v) { return std::round(v); })).maxCoeff() < 1e-13);
    CHECK(s.cwiseAbs().colwise().sum().maxCoeff() == doctest::Approx(1.0));
    CHECK(s.cwiseAbs().rowwise().sum().maxCoeff() == doctest::Approx(1.0));
  }
}

TEST_CASE("fpzn_norm spot values") {
  CHECK(std::abs(fpzn_norm(CyclicElement({1.0, I}), PExponent(1.0)).lower - std::numbers::sqrt2) < 1e-12);
  for (double p : {1.0, 1.5, 3.0}) {
    const auto e = fpzn_norm(CyclicElement({1.0, -1.0}), PExponent(p));
    CHECK(e.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.upper == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto e2 = fpzn_norm(CyclicElement({3.0, 1.0, 2.0, 5.0}), PExponent(2.0));
  CHECK(e2.lower == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("fpzn_norm matches the brute-force oracle values") {
  const CyclicElement one_i({1.0, I});
  for (auto [p, v] : {std::pair{1.5, frozen::kOneI_p1_5}, std::pair{3.0, frozen::kOneI_p3},
                      std::pair{4.0, frozen::kOneI_p4}}) {
    const auto e = fpzn_norm(one_i, PExponent(p));
    CHECK(e.lower == doctest::Approx(v).epsilon(1e-8));
    CHECK(e.upper >= v - 1e-9);
  }
  const CyclicElement xi4({1.0, 2.0 * I, -1.0, 0.5});
  CHECK(fpzn_norm(xi4, PExponent(1.0)).lower == doctest::Approx(frozen::kXi4_p1).epsilon(1e-12));
  const auto e3 = fpzn_norm(xi4, PExponent(3.0));
  CHECK(e3.lower == doctest::Approx(frozen::kXi4_p3).epsilon(1e-8));
  CHECK(e3.upper >= frozen::kXi4_p3 - 1e-9);
}

TEST_CASE("property: p = 2 collapse and dominance by the sup norm") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 16;
    const CyclicElement x(gaussian_tuple(rng, n));
    CHECK(std::abs(fpzn_norm(x, PExponent(2.0)).lower - x.sup_norm()) <= 1e-8);
    for (double p : {1.0, 1.3, 3.0, 7.0}) CHECK(fpzn_norm(x, PExponent(p)).lower >= x.sup_norm() - 1e-8);
  }
}

TEST_CASE("property: p-monotonicity, reversal duality, submultiplicativity") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 15; ++t) {
    const int n = 2 + t % 6;
    const CyclicElement x(gaussian_tuple(rng, n));
    const CyclicElement y(gaussian_tuple(rng, n));
    // between 1 and 2 the norm decreases towards 2, and increases beyond it
    CHECK(fpzn_norm(x, PExponent(1.5)).lower <= fpzn_norm(x, PExponent(1.2)).upper + 1e-6);
    CHECK(fpzn_norm(x, PExponent(3.0)).lower <= fpzn_norm(x, PExponent(5.0)).upper + 1e-6);
    for (double p : {1.5, 3.0}) {
      const PExponent pe(p);
      CHECK(fpzn_norm(x, pe).overlaps(fpzn_norm(x.reversed(), pe.dual()), 1e-9));
      CHECK(fpzn_norm(x * y, pe).lower <= fpzn_norm(x, pe).upper * fpzn_norm(y, pe).upper + 1e-6);
    }
  }
}

TEST_CASE("embedding, restriction and rotation") {
  CHECK(same(embed_divisor(CyclicElement({1.0, -1.0}), 4), {1.0, 0.0, -1.0, 0.0}));
  CHECK(same(embed_divisor(CyclicElement({2.5}), 3), {2.5, 0.0, 0.0}));
  CHECK_THROWS_AS(embed_divisor(CyclicElement({1.0, 2.0}), 3), PreconditionError);

  const CyclicElement b({1.0, I, -1.0, -I});
  CHECK(same(restrict_to(b, 2, 0), {1.0, -1.0}));
  CHECK(same(restrict_to(b, 2, 1), {I, -I}));
  CHECK(same(restrict_to(b, 4, 0), b.xi()));
  CHECK_THROWS_AS(restrict_to(b, 3, 0), PreconditionError);
  CHECK_THROWS_AS(restrict_to(b, 2, 2), PreconditionError);

  const CyclicElement abc({1.0, 2.0, 3.0});
  CHECK(same(rotate(abc, 1), {3.0, 1.0, 2.0}));
  CHECK(same(rotate(abc, 0), abc.xi()));
  CHECK(same(rotate(abc, 3), abc.xi()));
  CHECK(same(rotate(abc, -1), {2.0, 3.0, 1.0}));

  CHECK(fpzn_norm(CyclicElement({1.0, 0.0, -1.0, 0.0}), PExponent(1.0)).lower == doctest::Approx(1.0));
}

TEST_CASE("property: embedding isometric, restriction contractive, rotation invariant") {
  std::mt19937_64 rng(23);
  for (int m : {4, 6}) {
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const CyclicElement beta(gaussian_tuple(rng, d));
      const CyclicElement big(gaussian_tuple(rng, m));
      for (double p : {1.0, 1.5, 3.0}) {
        const PExponent pe(p);
        CHECK(fpzn_norm(embed_divisor(beta, m), pe).overlaps(fpzn_norm(beta, pe), 1e-6));
        for (int off = 0; off < m / d; ++off) {
          CHECK(fpzn_norm(restrict_to(big, d, off), pe).lower <= fpzn_norm(big, pe).upper + 1e-6);
        }
      }
    }
  }
  for (int t = 0; t < 10; ++t) {
    const CyclicElement x(gaussian_tuple(rng, 5));
    const auto a = fpzn_norm(x, PExponent(3.0));
    const auto b = fpzn_norm(rotate(x, t), PExponent(3.0));
    CHECK(std::abs(a.lower - b.lower) <= 1e-8);
  }
}

TEST_CASE("isometry classification") {
  const Complex zeta = std::polar(1.0, std::numbers::pi / 7);
  const auto r = classify_isometry(CyclicElement({zeta, zeta * I, -zeta, -zeta * I}), PExponent(1.0));
  REQUIRE(std::holds_alternative<IsInvertibleIsometry>(r));
  CHECK(std::get<IsInvertibleIsometry>(r).k == 1);
  CHECK(std::abs(std::get<IsInvertibleIsometry>(r).zeta - zeta) < 1e-12);

  const auto r2 = classify_isometry(CyclicElement({1.0, I}), PExponent(1.0));
  REQUIRE(std::holds_alternative<NotIsometry>(r2));
  CHECK(std::get<NotIsometry>(r2).excess == doctest::Approx(std::numbers::sqrt2 - 1.0).epsilon(1e-10));

  for (double p : {1.0, 3.0, 2.0}) {
    const auto r3 = classify_isometry(CyclicElement({1.0, 1.0, 1.0}), PExponent(p));
    if (p == 2.0) {
      CHECK(std::holds_alternative<AllUnimodular>(r3));
    } else {
      REQUIRE(std::holds_alternative<IsInvertibleIsometry>(r3));
      CHECK(std::get<IsInvertibleIsometry>(r3).k == 0);
    }
  }
  CHECK_THROWS_AS(classify_isometry(CyclicElement({1.0, 0.0}), PExponent(3.0)), PreconditionError);

  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    std::vector<Complex> u;
    for (int j = 0; j < 4; ++j) u.push_back(unimodular(rng));
    const auto c = classify_isometry(CyclicElement(u), PExponent(3.0));
    REQUIRE(std::holds_alternative<NotIsometry>(c));
    CHECK(std::get<NotIsometry>(c).excess > 0.0);
  }
}

TEST_CASE("gap witnesses") {
  const auto w = gap_witness(2, 1, PExponent(1.0));
  CHECK(w.margin >= 0.05);
  CHECK(w.norm_lower - w.restriction_upper == doctest::Approx(w.margin));
  const auto w2 = gap_witness(4, 2, PExponent(3.0));
  CHECK(w2.margin > 0.0);
  const auto again = evaluate_gap(w2.alpha, {2}, PExponent(3.0));
  CHECK(again.margin == doctest::Approx(w2.margin).epsilon(1e-9));
  CHECK_THROWS_AS(gap_witness(2, 1, PExponent(2.0)), PreconditionError);
  CHECK_THROWS_AS(gap_witness(6, 4, PExponent(3.0)), PreconditionError);
  CHECK_THROWS_AS(gap_witness(4, 4, PExponent(3.0)), PreconditionError);

  const auto all = gap_witness_all_divisors(6, PExponent(3.0));
  CHECK(all.margin > 0.0);
  const auto recheck = evaluate_gap(all.alpha, {1, 2, 3}, PExponent(3.0));
  CHECK(recheck.margin > 0.0);
}

TEST_CASE("schema checks") {
  CHECK_THROWS_AS(CyclicElement({}), SchemaError);
  CHECK_THROWS_AS(CyclicElement({Complex(std::nan(""), 0.0)}), SchemaError);
  CHECK(CyclicElement({2.0, I}).inverse()[1] == Complex(0.0, -1.0));
  CHECK_THROWS_AS(CyclicElement({0.0}).inverse(), PreconditionError);
}
