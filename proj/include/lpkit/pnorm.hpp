#ifndef LPKIT_PNORM_HPP
#define LPKIT_PNORM_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lpkit/pexponent.hpp"

namespace lpkit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

enum class NormMethod { ExactP1, ExactP2, BoydInterp, Oracle };

std::string_view to_string(NormMethod m) noexcept;

// Certified bracket lower <= ||A|| <= upper. The lower end is realised by
// the witness: ||A w||_p / ||w||_p == lower.
struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  CVector witness;
  NormMethod method = NormMethod::BoydInterp;
  // Present when part of the supremum was taken over a grid on arcs; the
  // upper end is then a crude bound rather than a tight one.
  std::optional<double> resolution;

  double width() const noexcept { return upper - lower; }
  bool overlaps(const NormEstimate& other, double slack = 0.0) const noexcept;
};

// Merge for suprema: the bracket of max(a, b).
NormEstimate bracket_max(const NormEstimate& a, const NormEstimate& b);

struct OpnormOptions {
  int restarts = 32;
  double tol = 1e-10;
  int max_iter = 10000;
  std::uint64_t seed = 0;
};

// ||x||_p for p in [1, inf]. Scaled so large exponents do not overflow.
double lp_norm(const CVector& x, PExponent p);

// Square operator on C^n seen through the few primitives the norm engine
// needs. Dense matrices and circulants implement it.
class SquareOperator {
 public:
  virtual ~SquareOperator() = default;

  virtual Eigen::Index dim() const = 0;
  virtual void apply(const CVector& x, CVector& y) const = 0;
  virtual void apply_adjoint(const CVector& y, CVector& x) const = 0;

  // ||A||_1 and the column attaining it.
  virtual std::pair<double, Eigen::Index> max_column_sum() const = 0;
  // ||A||_inf.
  virtual double max_row_sum() const = 0;
  // ||A||_2 together with a vector attaining it.
  virtual std::pair<double, CVector> spectral_pair() const = 0;
  // Deterministic starting vectors for the ascent, before random ones.
  virtual std::vector<CVector> canonical_starts() const = 0;
};

class DenseOperator final : public SquareOperator {
 public:
  // Throws SchemaError for non-square or non-finite input.
  explicit DenseOperator(CMatrix a);

  const CMatrix& matrix() const noexcept { return a_; }

  Eigen::Index dim() const override { return a_.rows(); }
  void apply(const CVector& x, CVector& y) const override { y.noalias() = a_ * x; }
  void apply_adjoint(const CVector& y, CVector& x) const override { x.noalias() = a_.adjoint() * y; }
  std::pair<double, Eigen::Index> max_column_sum() const override;
  double max_row_sum() const override;
  std::pair<double, CVector> spectral_pair() const override;
  std::vector<CVector> canonical_starts() const override;

 private:
  CMatrix a_;
};

// Operator norm bracket on l^p_n.
//   p = 1: exact column-sum formula.
//   p = 2: largest singular value.
//   else : Boyd ascent over canonical and random starts for the lower end,
//          Riesz-Thorin interpolation between 1, 2 and inf for the upper end.
NormEstimate opnorm(const SquareOperator& a, PExponent p, const OpnormOptions& opts = {});
NormEstimate opnorm(const CMatrix& a, PExponent p, const OpnormOptions& opts = {});

// Independent brute-force lower bound: random unit starts refined by
// coordinate-wise phase and magnitude ascent. Cross-checks only.
double opnorm_oracle(const CMatrix& a, PExponent p, int samples = 256, std::uint64_t seed = 0);

namespace detail {

struct Ascent {
  double value = 0.0;
  CVector x;
};

// Boyd's power-type iteration for max ||Ax||_p / ||x||_p from one start.
// Estimates are monotone; stops when the relative change drops below tol or
// the duality stationarity test holds.
Ascent boyd_ascent(const SquareOperator& a, double p, CVector x, double tol, int max_iter);

// Duality map for exponent q: sign(y) |y / ||y||_q|^(q-1), unit in the dual norm.
CVector duality_map(const CVector& y, double q);

}  // namespace detail

}  // namespace lpkit

#endif  // LPKIT_PNORM_HPP
