#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "frozen_values.hpp"
#include "lpkit/errors.hpp"
#include "lpkit/parallel.hpp"
#include "lpkit/pnorm.hpp"
#include "support.hpp"

using namespace lpkit;
using testing_support::gaussian_matrix;

namespace {

CMatrix mat3() {
  CMatrix a(3, 3);
  a << 1.0, Complex(0, 2), 0.0,
       0.5, -1.0, Complex(1, 1),
       0.0, Complex(0, 0.25), 2.0;
  return a;
}

}  // namespace

TEST_CASE("exponent validation and duals") {
  CHECK_THROWS_AS(PExponent(0.5), PreconditionError);
  CHECK_THROWS_AS(PExponent(std::nan("")), PreconditionError);
  CHECK(PExponent(1.0).dual().is_infinite());
  CHECK(PExponent::infinity().dual().is_one());
  CHECK(PExponent(3.0).dual().value() == doctest::Approx(1.5));
  CHECK(PExponent(2.0).is_two());
}

TEST_CASE("lp_norm handles scale and infinity") {
  CVector x(3);
  x << 3.0, Complex(0, 4), 0.0;
  CHECK(lp_norm(x, PExponent(2.0)) == doctest::Approx(5.0));
  CHECK(lp_norm(x, PExponent(1.0)) == doctest::Approx(7.0));
  CHECK(lp_norm(x, PExponent::infinity()) == doctest::Approx(4.0));
  CVector big = x * 1e300;
  CHECK(std::isfinite(lp_norm(big, PExponent(7.0))));
}

TEST_CASE("dense operator rejects bad shapes") {
  CHECK_THROWS_AS(DenseOperator(CMatrix(2, 3)), SchemaError);
  CHECK_THROWS_AS(DenseOperator(CMatrix(0, 0)), SchemaError);
  CMatrix a = CMatrix::Identity(2, 2);
  a(0, 1) = std::nan("");
  CHECK_THROWS_AS(DenseOperator{a}, SchemaError);
}

TEST_CASE("p = 1 is the max column sum, p = 2 the top singular value") {
  const CMatrix a = mat3();
  const auto e1 = opnorm(a, PExponent(1.0));
  CHECK(e1.method == NormMethod::ExactP1);
  const double col = a.cwiseAbs().colwise().sum().maxCoeff();
  CHECK(std::abs(e1.lower - col) <= 1e-12 * col);
  CHECK(std::abs(e1.upper - col) <= 1e-12 * col);
  const auto e2 = opnorm(a, PExponent(2.0));
  const double s = Eigen::JacobiSVD<CMatrix>(a).singularValues()[0];
  CHECK(e2.method == NormMethod::ExactP2);
  CHECK(e2.lower == doctest::Approx(s).epsilon(1e-12));
  CHECK(e2.upper >= e2.lower);
}

TEST_CASE("frozen brute-force values are bracketed") {
  const CMatrix a = mat3();
  for (auto [p, v] : {std::pair{1.3, frozen::kMat3_p1_3}, std::pair{2.6, frozen::kMat3_p2_6}}) {
    const auto e = opnorm(a, PExponent(p));
    CHECK(e.lower == doctest::Approx(v).epsilon(1e-8));
    CHECK(e.upper >= v - 1e-9);
  }
}

TEST_CASE("witness realises the lower bound") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const CMatrix a = gaussian_matrix(rng, 5);
    const PExponent p(1.7);
    const auto e = opnorm(a, p);
    const CVector y = a * e.witness;
    CHECK(lp_norm(y, p) / lp_norm(e.witness, p) == doctest::Approx(e.lower).epsilon(1e-12));
  }
}

TEST_CASE("property: Boyd lower dominates the coordinate oracle and transpose duality holds") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 12; ++t) {
    const int n = 2 + t % 5;
    const CMatrix a = gaussian_matrix(rng, n);
    for (double pv : {1.3, 2.6}) {
      const PExponent p(pv);
      const auto e = opnorm(a, p);
      const double o = opnorm_oracle(a, p, 64, 3);
      CHECK(o <= e.lower + 1e-6);
      CHECK(e.lower <= e.upper);
      const auto d = opnorm(CMatrix(a.transpose()), p.dual());
      CHECK(e.overlaps(d, 1e-9));
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  std::mt19937_64 rng(8);
  const CMatrix a = gaussian_matrix(rng, 6);
  setenv("LPKIT_THREADS", "1", 1);
  const auto one = opnorm(a, PExponent(3.0));
  setenv("LPKIT_THREADS", "4", 1);
  const auto four = opnorm(a, PExponent(3.0));
  unsetenv("LPKIT_THREADS");
  CHECK(one.lower == four.lower);
  CHECK(one.upper == four.upper);
  CHECK(one.witness == four.witness);
}

TEST_CASE("duality map is unit in the dual norm") {
  CVector y(3);
  y << 1.0, Complex(0, -2), 0.5;
  const double q = 1.5;
  const CVector d = detail::duality_map(y, q);
  const double qd = q / (q - 1.0);
  CHECK(lp_norm(d, PExponent(qd)) == doctest::Approx(1.0));
  // <y, d> = ||y||_q
  CHECK((y.conjugate().transpose() * d)(0).real() == doctest::Approx(lp_norm(y, PExponent(q))));
}

TEST_CASE("bracket merge keeps the larger lower end") {
  NormEstimate a{1.0, 2.0, {}, NormMethod::ExactP1, std::nullopt};
  NormEstimate b{1.5, 1.6, {}, NormMethod::BoydInterp, 0.01};
  const auto m = bracket_max(a, b);
  CHECK(m.lower == 1.5);
  CHECK(m.upper == 2.0);
  CHECK(m.resolution.has_value());
  CHECK(a.overlaps(b));
}

TEST_CASE("seed mixing is deterministic and spreads streams") {
  CHECK(mix_seed(0, 0) == mix_seed(0, 0));
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(1, 0) != mix_seed(0, 0));
}
