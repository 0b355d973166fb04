#include "lpkit/zline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpkit/cyclic.hpp"
#include "lpkit/errors.hpp"

namespace lpkit {

double norm_l1(const LaurentPolynomial& f) {
  double s = 0.0;
  for (const auto& [m, a] : f.terms()) s += std::abs(a);
  return s;
}

namespace {

constexpr double kGolden = 0.6180339887498949;

double golden_max(const LaurentPolynomial& f, double lo, double hi, double& arg) {
  auto g = [&](double t) { return std::abs(f.at_turns(t)); };
  double a = lo, b = hi;
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - kGolden * (b - a); fc = g(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kGolden * (b - a); fd = g(d);
    }
  }
  arg = fc > fd ? c : d;
  return std::max(fc, fd);
}

// sup |g''| for g(theta) = |f(e^{i theta})|^2.
double curvature_bound(const LaurentPolynomial& f) {
  double s = 0.0;
  for (const auto& [j, aj] : f.terms()) {
    for (const auto& [k, ak] : f.terms()) {
      const double diff = static_cast<double>(j - k);
      s += diff * diff * std::abs(aj) * std::abs(ak);
    }
  }
  return s;
}

}  // namespace

SupSearch sup_search(const LaurentPolynomial& f, int grid) {
  if (grid == 0) grid = std::max(4 * f.span(), 65536);
  if (grid < 1 || grid < 4 * f.span()) throw PreconditionError("norm_sup: grid must be >= 4 * degree span");
  SupSearch out;
  if (f.is_zero()) return out;

  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) values[static_cast<std::size_t>(k)] = std::abs(f.at_turns(static_cast<double>(k) / grid));

  std::vector<int> peaks;
  for (int k = 0; k < grid; ++k) {
    const double v = values[static_cast<std::size_t>(k)];
    const double left = values[static_cast<std::size_t>((k + grid - 1) % grid)];
    const double right = values[static_cast<std::size_t>((k + 1) % grid)];
    if (v >= left && v >= right) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
  });
  if (peaks.size() > 8) peaks.resize(8);

  const double h = 1.0 / grid;
  double grid_max = 0.0;
  for (double v : values) grid_max = std::max(grid_max, v);
  out.value = grid_max;
  out.argmax = static_cast<double>(peaks.front()) * h;
  for (int k : peaks) {
    double arg = 0.0;
    const double v = golden_max(f, (k - 1) * h, (k + 1) * h, arg);
    if (v > out.value) {
      out.value = v;
      out.argmax = arg - std::floor(arg);
    }
  }
  const double step = 2.0 * std::numbers::pi * h;
  const double slack = curvature_bound(f) * step * step / 8.0;
  out.certified = std::max(out.value, std::sqrt(grid_max * grid_max + slack));
  return out;
}

double norm_sup(const LaurentPolynomial& f, int grid) { return sup_search(f, grid).value; }

namespace {

CirculantOperator sampled_circulant(const LaurentPolynomial& f, int n, double base_turns) {
  // Samples f(t w^j) have circulant coefficients c_k = sum_{m = -k mod n} a_m t^m,
  // built directly so sparse f gives a sparse circulant.
  std::vector<Complex> coeffs(static_cast<std::size_t>(n), Complex(0.0));
  for (const auto& [m, a] : f.terms()) {
    int k = (-m) % n;
    if (k < 0) k += n;
    coeffs[static_cast<std::size_t>(k)] += a * std::polar(1.0, 2.0 * std::numbers::pi * std::fmod(m * base_turns, 1.0));
  }
  std::vector<Complex> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    samples[static_cast<std::size_t>(j)] = f.at_turns(base_turns + static_cast<double>(j) / n);
  }
  return CirculantOperator(std::move(coeffs), std::move(samples));
}

}  // namespace

NormEstimate cyclic_estimate(const LaurentPolynomial& f, int n, PExponent p, double base_turns,
                             const OpnormOptions& opts) {
  if (n < 1) throw PreconditionError("cyclic_lower requires n >= 1");
  return opnorm(sampled_circulant(f, n, base_turns), p, opts);
}

double cyclic_lower(const LaurentPolynomial& f, int n, PExponent p, const OpnormOptions& opts) {
  return cyclic_estimate(f, n, p, 0.0, opts).lower;
}

std::vector<int> truncation_schedule(int n_max) {
  std::vector<int> out;
  for (long long v = 1; v <= n_max; v *= 2) {
    out.push_back(static_cast<int>(v));
    if (v >= 2 && 3 * v / 2 <= n_max) out.push_back(static_cast<int>(3 * v / 2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NormEstimate fpz_norm(const LaurentPolynomial& f, PExponent p, const FpzOptions& opts,
                      std::vector<ScheduleStep>* trace) {
  if (!(opts.tol > 0.0)) throw PreconditionError("fpz_norm requires tol > 0");
  if (opts.n_max < 1) throw PreconditionError("fpz_norm requires n_max >= 1");
  const double l1 = norm_l1(f);
  const SupSearch sup = sup_search(f, opts.sup_grid);

  // Gelfand bound: the one-point representation at the argmax of |f|.
  NormEstimate best = cyclic_estimate(f, 1, p, sup.argmax, opts.opnorm);

  double upper = l1;
  NormMethod method = NormMethod::BoydInterp;
  if (p.is_one()) {
    method = NormMethod::ExactP1;
  } else if (p.is_two()) {
    method = NormMethod::ExactP2;
    upper = sup.value;
  } else {
    const double pv = p.value();
    const double interp = pv < 2.0 ? std::pow(l1, 2.0 / pv - 1.0) * std::pow(sup.certified, 2.0 - 2.0 / pv)
                                   : std::pow(sup.certified, 2.0 / pv) *
                                         std::pow(norm_l1(f.reversed()), 1.0 - 2.0 / pv);
    upper = std::min(l1, interp * (1.0 + 1e-14));
  }

  // A witness for size n/2 at base b, extended periodically, realises the same
  // ratio at size n and base b; modulating by exp(2 pi i (b - b') j) moves it
  // to base b'. So each size starts where the previous one stopped, and the
  // large sizes need neither random restarts nor long ascents.
  struct Seed {
    int n;
    double base;
    CVector w;
  };
  std::vector<Seed> seeds;
  for (int n : truncation_schedule(opts.n_max)) {
    if (upper - best.lower < opts.tol) break;
    OpnormOptions step_opts = opts.opnorm;
    const bool warm = n > 16;
    if (warm) step_opts.restarts = 0;
    step_opts.max_iter = std::min(step_opts.max_iter, std::max(32, (1 << 17) / n));

    std::vector<Seed> next;
    for (double base : {0.0, 0.5 / n}) {
      CirculantOperator op = sampled_circulant(f, n, base);
      std::vector<CVector> starts;
      for (const Seed& s : seeds) {
        if (n % s.n != 0 || s.w.size() == 0) continue;
        CVector x(n);
        for (int j = 0; j < n; ++j) {
          x[j] = s.w[j % s.n] * std::polar(1.0, 2.0 * std::numbers::pi * std::fmod((s.base - base) * j, 1.0));
        }
        starts.push_back(std::move(x));
      }
      op.set_warm_starts(std::move(starts), warm);
      NormEstimate step = p.is_one() || p.is_two() ? opnorm(op, p, opts.opnorm) : opnorm(op, p, step_opts);
      next.push_back({n, base, step.witness});
      if (step.lower > best.lower) best = std::move(step);
    }
    std::erase_if(seeds, [&](const Seed& s) { return 2 * s.n < n; });
    seeds.insert(seeds.end(), next.begin(), next.end());
    if (trace) trace->push_back({n, best.lower});
  }
  best.method = method;
  best.upper = std::max(upper, best.lower);
  if (p.is_two()) best.lower = std::min(best.lower, best.upper);
  return best;
}

}  // namespace lpkit
