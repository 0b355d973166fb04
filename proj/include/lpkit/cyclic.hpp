#ifndef LPKIT_CYCLIC_HPP
#define LPKIT_CYCLIC_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "lpkit/pnorm.hpp"

namespace lpkit {

// Element of F^p(Z_n) in Gelfand coordinates: xi[j] is the value at the
// character j, i.e. the j-th eigenvalue of the circulant. 0-based.
class CyclicElement {
 public:
  // Throws SchemaError for an empty tuple or non-finite entries.
  explicit CyclicElement(std::vector<Complex> xi);

  // zeta * (1, w^k, w^2k, ..., w^(n-1)k) with w = exp(2 pi i / n).
  static CyclicElement canonical(int n, int k, Complex zeta = 1.0);

  int order() const noexcept { return static_cast<int>(xi_.size()); }
  const std::vector<Complex>& xi() const noexcept { return xi_; }
  Complex operator[](int j) const { return xi_[static_cast<std::size_t>(j)]; }

  bool invertible() const noexcept;
  // Coordinatewise reciprocal; throws PreconditionError when not invertible.
  CyclicElement inverse() const;
  // Index reversal j -> -j mod n (transpose of the circulant).
  CyclicElement reversed() const;
  double sup_norm() const noexcept;

  friend CyclicElement operator*(const CyclicElement& a, const CyclicElement& b);

 private:
  std::vector<Complex> xi_;
};

// First column c of the circulant: C(a, b) = c[(a - b) mod n],
// c[k] = (1/n) sum_j xi[j] w^(jk).
std::vector<Complex> circulant_coefficients(const CyclicElement& x);

// u_n diag(xi) u_n^{-1} with the unitary DFT matrix u_n[j][k] = w^(jk) / sqrt(n).
CMatrix circulant_of(const CyclicElement& x);

// Circulant given by its first column, applied through its nonzero
// coefficients only, with its eigenvalues known up front.
class CirculantOperator final : public SquareOperator {
 public:
  CirculantOperator(std::vector<Complex> coefficients, std::vector<Complex> eigenvalues);
  static CirculantOperator from_element(const CyclicElement& x);

  Eigen::Index dim() const override { return static_cast<Eigen::Index>(coeffs_.size()); }
  void apply(const CVector& x, CVector& y) const override;
  void apply_adjoint(const CVector& y, CVector& x) const override;
  std::pair<double, Eigen::Index> max_column_sum() const override;
  double max_row_sum() const override;
  std::pair<double, CVector> spectral_pair() const override;
  std::vector<CVector> canonical_starts() const override;

  // Extra starting vectors; with `only` set they replace the built-in ones.
  void set_warm_starts(std::vector<CVector> starts, bool only) {
    warm_ = std::move(starts);
    warm_only_ = only;
  }

 private:
  std::vector<CVector> warm_;
  bool warm_only_ = false;
  std::vector<Complex> coeffs_;
  std::vector<Complex> eigen_;
  std::vector<std::pair<int, Complex>> support_;
};

// ||xi||_{F^p(Z_n)}: exact at p = 1 (l^1 norm of a column) and p = 2 (max |xi|),
// bracketed otherwise.
NormEstimate fpzn_norm(const CyclicElement& x, PExponent p, const OpnormOptions& opts = {});

// Isometric embedding F^p(Z_d) -> F^p(Z_m): beta[i] lands at i*(m/d), zeros elsewhere.
CyclicElement embed_divisor(const CyclicElement& b, int m);

// Contractive restriction F^p(Z_N) -> F^p(Z_d): out[i] = b[i*(N/d) + offset].
CyclicElement restrict_to(const CyclicElement& b, int d, int offset);

// Cyclic shift of coordinates: out[j] = x[j - k mod n].
CyclicElement rotate(const CyclicElement& x, int k);

struct IsInvertibleIsometry {
  Complex zeta;
  int k = 0;
};
struct NotIsometry {
  double excess = 0.0;
};
struct AllUnimodular {};
using IsometryClass = std::variant<IsInvertibleIsometry, NotIsometry, AllUnimodular>;

// Decides whether x and x^{-1} both have norm one. For p != 2 these are
// exactly zeta * canonical(n, k). At p = 2 any unimodular tuple is one and
// AllUnimodular is returned instead.
IsometryClass classify_isometry(const CyclicElement& x, PExponent p, double tol = 1e-9,
                                const OpnormOptions& opts = {});

struct GapSearch {
  std::uint64_t seed = 0;
  int budget = 600;           // norm evaluations during the random phase
  double target_margin = 0.05;  // stop early once reached
};

struct GapWitness {
  CyclicElement alpha;
  double norm_lower = 0.0;         // fpzn_norm(alpha).lower
  double restriction_upper = 0.0;  // max_b fpzn_norm(restrict_to(alpha, d, b)).upper
  double margin = 0.0;             // norm_lower - restriction_upper > 0
};

// Certifies ||alpha||_{F^p(Z_n)} > max_b ||restrict_to(alpha, d, b)||_{F^p(Z_d)}.
// Tries the block-constant candidate and its inverse, then random unimodular
// tuples improved by phase ascent on the gap.
GapWitness gap_witness(int n, int d, PExponent p, const GapSearch& search = {});

// Same certificate against every proper divisor of n simultaneously (n >= 2).
GapWitness gap_witness_all_divisors(int n, PExponent p, const GapSearch& search = {});

// Gap evaluation for a given alpha against several divisors at once; the
// restriction side is the max over every listed d and every offset.
GapWitness evaluate_gap(const CyclicElement& alpha, const std::vector<int>& divisors, PExponent p,
                        const OpnormOptions& opts = {});

}  // namespace lpkit

#endif  // LPKIT_CYCLIC_HPP
