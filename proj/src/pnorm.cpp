#include "lpkit/pnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lpkit/errors.hpp"
#include "lpkit/parallel.hpp"

namespace lpkit {

std::string_view to_string(NormMethod m) noexcept {
  switch (m) {
    case NormMethod::ExactP1: return "exact-p1";
    case NormMethod::ExactP2: return "exact-p2";
    case NormMethod::BoydInterp: return "boyd+interp";
    case NormMethod::Oracle: return "oracle";
  }
  return "unknown";
}

bool NormEstimate::overlaps(const NormEstimate& other, double slack) const noexcept {
  return std::max(lower, other.lower) <= std::min(upper, other.upper) + slack;
}

NormEstimate bracket_max(const NormEstimate& a, const NormEstimate& b) {
  NormEstimate out = a.lower >= b.lower ? a : b;
  out.upper = std::max(a.upper, b.upper);
  if (a.resolution || b.resolution) {
    out.resolution = std::min(a.resolution.value_or(1.0), b.resolution.value_or(1.0));
  }
  if (a.method != b.method) out.method = NormMethod::BoydInterp;
  return out;
}

double lp_norm(const CVector& x, PExponent p) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i]));
  if (m == 0.0 || p.is_infinite()) return m;
  const double q = p.value();
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]) / m, q);
  return m * std::pow(s, 1.0 / q);
}

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(CMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) {
    throw SchemaError("operator must be a non-empty square matrix");
  }
  if (!a_.allFinite()) throw SchemaError("matrix has non-finite entries");
}

std::pair<double, Eigen::Index> DenseOperator::max_column_sum() const {
  Eigen::Index best = 0;
  double value = -1.0;
  for (Eigen::Index j = 0; j < a_.cols(); ++j) {
    const double s = a_.col(j).cwiseAbs().sum();
    if (s > value) {
      value = s;
      best = j;
    }
  }
  return {value, best};
}

double DenseOperator::max_row_sum() const { return a_.cwiseAbs().rowwise().sum().maxCoeff(); }

std::pair<double, CVector> DenseOperator::spectral_pair() const {
  Eigen::JacobiSVD<CMatrix> svd(a_, Eigen::ComputeFullV);
  return {svd.singularValues()[0], svd.matrixV().col(0)};
}

std::vector<CVector> DenseOperator::canonical_starts() const {
  const Eigen::Index n = dim();
  std::vector<CVector> starts;
  starts.reserve(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) starts.push_back(CVector::Unit(n, i));
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    CVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      v[k] = std::polar(inv, 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n);
    }
    starts.push_back(std::move(v));
  }
  return starts;
}

// ---------------------------------------------------------------------------
// Boyd ascent

namespace detail {

namespace {

// ||y||_q and, through `dual`, the duality map of y, with one pow per entry.
// Works on |y_i|^2 / max^2 so neither overflows.
double norm_with_dual(const CVector& y, double q, CVector& dual) {
  const Eigen::Index n = y.size();
  dual.setZero(n);
  double m2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) m2 = std::max(m2, std::norm(y[i]));
  if (m2 == 0.0) return 0.0;
  const double m = std::sqrt(m2);
  const double e = 0.5 * q - 1.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = std::norm(y[i]) / m2;
    if (r == 0.0) continue;
    const double t = std::pow(r, e);  // (|y_i| / m)^(q - 2)
    s += r * t;
    dual[i] = (y[i] / m) * t;
  }
  dual /= std::pow(s, (q - 1.0) / q);
  return m * std::pow(s, 1.0 / q);
}

}  // namespace

CVector duality_map(const CVector& y, double q) {
  CVector out;
  norm_with_dual(y, q, out);
  return out;
}

Ascent boyd_ascent(const SquareOperator& a, double p, CVector x, double tol, int max_iter) {
  const PExponent pe(p);
  const double pd = pe.dual().value();
  const double xn = lp_norm(x, pe);
  if (xn == 0.0) return {0.0, x};
  x /= xn;

  CVector y(a.dim());
  CVector z(a.dim());
  CVector dy, dz;
  Ascent best{0.0, x};
  double previous = -1.0;
  for (int it = 0; it < max_iter; ++it) {
    a.apply(x, y);
    const double gamma = norm_with_dual(y, p, dy);
    if (gamma > best.value) best = {gamma, x};
    if (gamma == 0.0) break;
    if (previous >= 0.0 && std::abs(gamma - previous) < tol * gamma) break;
    previous = gamma;

    a.apply_adjoint(dy, z);
    const double zn = norm_with_dual(z, pd, dz);
    const double along = z.dot(x).real();  // Re <x, z>
    if (zn <= along * (1.0 + 1e-15)) break;
    x = dz;
  }
  // Recompute from the stored witness so value and witness agree exactly.
  a.apply(best.x, y);
  best.value = lp_norm(y, pe) / lp_norm(best.x, pe);
  return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// opnorm

namespace {

CVector random_start(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

double ratio(const SquareOperator& a, const CVector& w, PExponent p) {
  CVector y(a.dim());
  a.apply(w, y);
  return lp_norm(y, p) / lp_norm(w, p);
}

}  // namespace

NormEstimate opnorm(const SquareOperator& a, PExponent p, const OpnormOptions& opts) {
  if (p.is_infinite()) throw PreconditionError("opnorm accepts finite exponents only");
  if (opts.restarts < 0 || opts.max_iter < 1 || !(opts.tol > 0.0)) {
    throw PreconditionError("opnorm options: restarts >= 0, max_iter >= 1, tol > 0 required");
  }
  const Eigen::Index n = a.dim();
  NormEstimate est;

  if (p.is_one()) {
    const auto [value, col] = a.max_column_sum();
    est.method = NormMethod::ExactP1;
    est.witness = CVector::Unit(n, col);
    est.lower = ratio(a, est.witness, p);
    est.upper = std::max(value, est.lower);
    return est;
  }

  const auto [sigma, top] = a.spectral_pair();
  if (p.is_two()) {
    est.method = NormMethod::ExactP2;
    est.witness = top / top.norm();
    est.lower = ratio(a, est.witness, p);
    est.upper = std::max(sigma * (1.0 + 1e-13), est.lower);
    return est;
  }

  std::vector<CVector> starts = a.canonical_starts();
  starts.push_back(top);
  for (int r = 0; r < opts.restarts; ++r) starts.push_back(random_start(n, mix_seed(opts.seed, r)));

  std::vector<detail::Ascent> results(starts.size());
  parallel_for(starts.size(), [&](std::size_t i) {
    results[i] = detail::boyd_ascent(a, p.value(), starts[i], opts.tol, opts.max_iter);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }

  est.method = NormMethod::BoydInterp;
  est.witness = results[best].x / lp_norm(results[best].x, p);
  est.lower = ratio(a, est.witness, p);

  const double pv = p.value();
  const double s2 = sigma * (1.0 + 1e-13);
  double upper = 0.0;
  if (pv < 2.0) {
    const double c1 = a.max_column_sum().first;
    upper = std::pow(c1, 2.0 / pv - 1.0) * std::pow(s2, 2.0 - 2.0 / pv);
  } else {
    const double cinf = a.max_row_sum();
    upper = std::pow(s2, 2.0 / pv) * std::pow(cinf, 1.0 - 2.0 / pv);
  }
  est.upper = std::max(upper * (1.0 + 1e-14), est.lower);
  return est;
}

NormEstimate opnorm(const CMatrix& a, PExponent p, const OpnormOptions& opts) {
  return opnorm(DenseOperator(a), p, opts);
}

// ---------------------------------------------------------------------------
// Oracle: coordinate-wise ascent, deliberately sharing no code with Boyd.

namespace {

constexpr double kGolden = 0.6180339887498949;

// Maximises g on [lo, hi] by a coarse grid followed by golden section.
template <class F>
std::pair<double, double> grid_golden_max(F&& g, double lo, double hi, int grid, double tol) {
  double best_t = lo;
  double best_v = g(lo);
  const double step = (hi - lo) / grid;
  for (int k = 1; k <= grid; ++k) {
    const double t = lo + k * step;
    const double v = g(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double a = std::max(lo, best_t - step);
  double b = std::min(hi, best_t + step);
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = g(c);
  double fd = g(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = g(d);
    }
  }
  const double t = fc > fd ? c : d;
  const double v = std::max(fc, fd);
  if (v > best_v) return {t, v};
  return {best_t, best_v};
}

double sum_pow(const CVector& v, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
  return s;
}

}  // namespace

double opnorm_oracle(const CMatrix& a, PExponent p, int samples, std::uint64_t seed) {
  const DenseOperator op(a);  // validates shape and finiteness
  if (samples < 1) throw PreconditionError("opnorm_oracle needs samples >= 1");
  if (p.is_infinite()) throw PreconditionError("opnorm_oracle accepts finite exponents only");
  const double q = p.value();
  const Eigen::Index n = a.rows();

  std::vector<double> values(static_cast<std::size_t>(samples), 0.0);
  parallel_for(values.size(), [&](std::size_t s) {
    CVector x = random_start(n, mix_seed(seed ^ 0x5bd1e995ULL, s));
    x /= std::pow(sum_pow(x, q), 1.0 / q);
    CVector y = a * x;
    auto objective = [&] { return std::pow(sum_pow(y, q) / sum_pow(x, q), 1.0 / q); };
    double current = objective();
    for (int sweep = 0; sweep < 500; ++sweep) {
      const double before = current;
      for (Eigen::Index i = 0; i < n; ++i) {
        const CVector base = y - a.col(i) * x[i];
        const double rest = sum_pow(x, q) - std::pow(std::abs(x[i]), q);
        auto value_at = [&](Complex c) {
          const double num = sum_pow(base + a.col(i) * c, q);
          const double den = rest + std::pow(std::abs(c), q);
          return den > 0.0 ? std::pow(num / den, 1.0 / q) : 0.0;
        };
        // Phase alignment.
        const double r = std::abs(x[i]) > 0.0 ? std::abs(x[i]) : 1e-3;
        const auto [theta, vt] = grid_golden_max(
            [&](double t) { return value_at(std::polar(r, t)); }, 0.0, 2.0 * std::numbers::pi, 24, 1e-11);
        // Magnitude line search, r = scale * tan(phi) covers [0, inf).
        double scale = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, std::abs(x[j]));
        if (scale == 0.0) scale = 1.0;
        const auto [phi, vr] = grid_golden_max(
            [&](double f) { return value_at(std::polar(scale * std::tan(f), theta)); }, 0.0,
            0.5 * std::numbers::pi - 1e-9, 24, 1e-11);
        const Complex candidate = std::polar(scale * std::tan(phi), theta);
        if (std::max(vt, vr) > current) {
          x[i] = vr >= vt ? candidate : std::polar(r, theta);
          y = base + a.col(i) * x[i];
          const double xn = std::pow(sum_pow(x, q), 1.0 / q);
          x /= xn;
          y /= xn;
          current = objective();
        }
      }
      if (current - before <= 1e-10 * current) break;
    }
    values[s] = current;
  });
  return *std::max_element(values.begin(), values.end());
}

}  // namespace lpkit
