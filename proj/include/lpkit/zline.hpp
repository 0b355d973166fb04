#ifndef LPKIT_ZLINE_HPP
#define LPKIT_ZLINE_HPP

#include <vector>

#include "lpkit/laurent.hpp"
#include "lpkit/pnorm.hpp"

namespace lpkit {

// sum_m |a_m|, which is exactly ||f||_{F^1(Z)}.
double norm_l1(const LaurentPolynomial& f);

struct SupSearch {
  double value = 0.0;    // refined max of |f| on the circle
  double argmax = 0.0;   // in turns
  double certified = 0.0;  // guaranteed upper bound on sup |f|
};

// Grid of `grid` equispaced points plus golden-section refinement around the
// grid's local maxima. grid = 0 picks max(4 * span, 65536).
// The certified bound adds the curvature slack ||g''|| h^2 / 8 for g = |f|^2.
SupSearch sup_search(const LaurentPolynomial& f, int grid = 0);

// max |f| on S^1, i.e. ||f||_{F^2(Z)}. Requires grid >= 4 * span (or 0).
double norm_sup(const LaurentPolynomial& f, int grid = 0);

// ||(f(t w_n^j))_j||_{F^p(Z_n)} lower end, t = exp(2 pi i base_turns). Every
// such value is a lower bound for ||f||_{F^p(Z)}.
NormEstimate cyclic_estimate(const LaurentPolynomial& f, int n, PExponent p, double base_turns = 0.0,
                             const OpnormOptions& opts = {});
double cyclic_lower(const LaurentPolynomial& f, int n, PExponent p, const OpnormOptions& opts = {});

struct FpzOptions {
  double tol = 1e-6;
  int n_max = 4096;
  int sup_grid = 0;
  OpnormOptions opnorm{};
};

struct ScheduleStep {
  int n = 0;
  double lower = 0.0;
};

// Truncation schedule {1, 2, 3, 4, 6, 8, 12, ...} = {2^k} u {3 * 2^k} up to n_max.
std::vector<int> truncation_schedule(int n_max);

// Bracket for ||f||_{F^p(Z)}: lower from cyclic truncations at base points
// 1 and w_{2n} (and the Gelfand bound at the argmax of |f|), upper from
// interpolation between l^1 and the sup norm. Stops once upper - lower < tol.
NormEstimate fpz_norm(const LaurentPolynomial& f, PExponent p, const FpzOptions& opts = {},
                      std::vector<ScheduleStep>* trace = nullptr);

}  // namespace lpkit

#endif  // LPKIT_ZLINE_HPP
