#include "lpkit/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lpkit/errors.hpp"
#include "lpkit/parallel.hpp"

namespace lpkit {

namespace {

// exp(2 pi i num / den) with num reduced first, so integer phases stay exact.
Complex root_of_unity(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

std::vector<int> proper_divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

CyclicElement::CyclicElement(std::vector<Complex> xi) : xi_(std::move(xi)) {
  if (xi_.empty()) throw SchemaError("cyclic element needs n >= 1 coordinates");
  for (const Complex& z : xi_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw SchemaError("cyclic element has non-finite coordinates");
    }
  }
}

CyclicElement CyclicElement::canonical(int n, int k, Complex zeta) {
  if (n < 1) throw PreconditionError("group order must be positive");
  std::vector<Complex> xi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) xi[static_cast<std::size_t>(j)] = zeta * root_of_unity(1LL * j * k, n);
  return CyclicElement(std::move(xi));
}

bool CyclicElement::invertible() const noexcept {
  return std::all_of(xi_.begin(), xi_.end(), [](Complex z) { return std::abs(z) > 0.0; });
}

CyclicElement CyclicElement::inverse() const {
  if (!invertible()) throw PreconditionError("cyclic element is not invertible (zero coordinate)");
  std::vector<Complex> out(xi_.size());
  std::transform(xi_.begin(), xi_.end(), out.begin(), [](Complex z) { return 1.0 / z; });
  return CyclicElement(std::move(out));
}

CyclicElement CyclicElement::reversed() const {
  const std::size_t n = xi_.size();
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = xi_[(n - j) % n];
  return CyclicElement(std::move(out));
}

double CyclicElement::sup_norm() const noexcept {
  double m = 0.0;
  for (const Complex& z : xi_) m = std::max(m, std::abs(z));
  return m;
}

CyclicElement operator*(const CyclicElement& a, const CyclicElement& b) {
  if (a.order() != b.order()) throw PreconditionError("product of elements of different orders");
  std::vector<Complex> out(a.xi_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.xi_[j] * b.xi_[j];
  return CyclicElement(std::move(out));
}

std::vector<Complex> circulant_coefficients(const CyclicElement& x) {
  const int n = x.order();
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (int j = 0; j < n; ++j) s += x[j] * root_of_unity(1LL * j * k, n);
    c[static_cast<std::size_t>(k)] = s / static_cast<double>(n);
  }
  return c;
}

CMatrix circulant_of(const CyclicElement& x) {
  const int n = x.order();
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix u(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) u(j, k) = inv * root_of_unity(1LL * j * k, n);
  }
  CVector d(n);
  for (int j = 0; j < n; ++j) d[j] = x[j];
  return u * d.asDiagonal() * u.adjoint();
}

// ---------------------------------------------------------------------------
// CirculantOperator

CirculantOperator::CirculantOperator(std::vector<Complex> coefficients, std::vector<Complex> eigenvalues)
    : coeffs_(std::move(coefficients)), eigen_(std::move(eigenvalues)) {
  if (coeffs_.empty() || coeffs_.size() != eigen_.size()) {
    throw SchemaError("circulant needs matching non-empty coefficient and eigenvalue lists");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != Complex(0.0)) support_.emplace_back(static_cast<int>(k), coeffs_[k]);
  }
}

CirculantOperator CirculantOperator::from_element(const CyclicElement& x) {
  return CirculantOperator(circulant_coefficients(x), x.xi());
}

void CirculantOperator::apply(const CVector& x, CVector& y) const {
  const int n = static_cast<int>(coeffs_.size());
  y.setZero(n);
  for (const auto& [k, c] : support_) {
    for (int a = 0; a < n; ++a) {
      int b = a - k;
      if (b < 0) b += n;
      y[a] += c * x[b];
    }
  }
}

void CirculantOperator::apply_adjoint(const CVector& y, CVector& x) const {
  const int n = static_cast<int>(coeffs_.size());
  x.setZero(n);
  for (const auto& [k, c] : support_) {
    const Complex cc = std::conj(c);
    for (int b = 0; b < n; ++b) {
      int a = b + k;
      if (a >= n) a -= n;
      x[b] += cc * y[a];
    }
  }
}

std::pair<double, Eigen::Index> CirculantOperator::max_column_sum() const {
  double s = 0.0;
  for (const auto& [k, c] : support_) s += std::abs(c);
  return {s, 0};
}

double CirculantOperator::max_row_sum() const { return max_column_sum().first; }

std::pair<double, CVector> CirculantOperator::spectral_pair() const {
  const int n = static_cast<int>(eigen_.size());
  int best = 0;
  for (int j = 1; j < n; ++j) {
    if (std::abs(eigen_[static_cast<std::size_t>(j)]) > std::abs(eigen_[static_cast<std::size_t>(best)])) {
      best = j;
    }
  }
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  CVector v(n);
  for (int k = 0; k < n; ++k) v[k] = inv * root_of_unity(1LL * best * k, n);
  return {std::abs(eigen_[static_cast<std::size_t>(best)]), v};
}

std::vector<CVector> CirculantOperator::canonical_starts() const {
  // Every basis vector is equivalent under the shift, so e_0 suffices. The
  // windowed characters below approximate wide near-extremal vectors.
  if (warm_only_ && !warm_.empty()) return warm_;
  const int n = static_cast<int>(coeffs_.size());
  std::vector<CVector> starts{CVector::Unit(n, 0)};
  starts.insert(starts.end(), warm_.begin(), warm_.end());
  if (n < 4) return starts;
  const CVector top = spectral_pair().second;
  for (double frac : {0.05, 0.15, 0.35}) {
    const double width = std::max(1.0, frac * n);
    CVector v(n);
    for (int k = 0; k < n; ++k) {
      const double t = (k - 0.5 * n) / width;
      v[k] = top[k] * std::exp(-0.5 * t * t);
    }
    starts.push_back(std::move(v));
  }
  return starts;
}

NormEstimate fpzn_norm(const CyclicElement& x, PExponent p, const OpnormOptions& opts) {
  return opnorm(CirculantOperator::from_element(x), p, opts);
}

// ---------------------------------------------------------------------------
// Structural maps

CyclicElement embed_divisor(const CyclicElement& b, int m) {
  const int d = b.order();
  if (m < 1 || m % d != 0) {
    throw PreconditionError("embed_divisor: order " + std::to_string(d) + " does not divide " + std::to_string(m));
  }
  const int stride = m / d;
  std::vector<Complex> out(static_cast<std::size_t>(m), Complex(0.0));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i * stride)] = b[i];
  return CyclicElement(std::move(out));
}

CyclicElement restrict_to(const CyclicElement& b, int d, int offset) {
  const int big = b.order();
  if (d < 1 || big % d != 0) {
    throw PreconditionError("restrict: " + std::to_string(d) + " does not divide " + std::to_string(big));
  }
  const int stride = big / d;
  if (offset < 0 || offset >= stride) {
    throw PreconditionError("restrict: offset must lie in [0, " + std::to_string(stride) + ")");
  }
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = b[i * stride + offset];
  return CyclicElement(std::move(out));
}

CyclicElement rotate(const CyclicElement& x, int k) {
  const int n = x.order();
  int shift = k % n;
  if (shift < 0) shift += n;
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>((j + shift) % n)] = x[j];
  return CyclicElement(std::move(out));
}

// ---------------------------------------------------------------------------
// Isometries

IsometryClass classify_isometry(const CyclicElement& x, PExponent p, double tol, const OpnormOptions& opts) {
  if (!x.invertible()) throw PreconditionError("classify_isometry: element is not invertible");
  const int n = x.order();
  const bool unimodular =
      std::all_of(x.xi().begin(), x.xi().end(), [&](Complex z) { return std::abs(std::abs(z) - 1.0) <= tol; });

  if (p.is_two()) {
    if (unimodular) return AllUnimodular{};
    double excess = 0.0;
    for (const Complex& z : x.xi()) excess = std::max({excess, std::abs(z), 1.0 / std::abs(z)});
    return NotIsometry{excess - 1.0};
  }

  if (unimodular) {
    const Complex zeta = x[0] / std::abs(x[0]);
    int k = 0;
    if (n > 1) {
      const double turns = std::arg(x[1] / x[0]) / (2.0 * std::numbers::pi);
      k = static_cast<int>(std::lround(turns * n)) % n;
      if (k < 0) k += n;
    }
    const CyclicElement fit = CyclicElement::canonical(n, k, zeta);
    bool match = true;
    for (int j = 0; j < n && match; ++j) match = std::abs(x[j] - fit[j]) <= tol;
    if (match) return IsInvertibleIsometry{zeta, k};
  }

  const double forward = fpzn_norm(x, p, opts).lower;
  const double backward = fpzn_norm(x.inverse(), p, opts).lower;
  return NotIsometry{std::max(forward, backward) - 1.0};
}

GapWitness evaluate_gap(const CyclicElement& alpha, const std::vector<int>& divisors, PExponent p,
                        const OpnormOptions& opts) {
  GapWitness w{alpha};
  w.norm_lower = fpzn_norm(alpha, p, opts).lower;
  w.restriction_upper = 0.0;
  for (int d : divisors) {
    for (int b = 0; b < alpha.order() / d; ++b) {
      w.restriction_upper = std::max(w.restriction_upper, fpzn_norm(restrict_to(alpha, d, b), p, opts).upper);
    }
  }
  w.margin = w.norm_lower - w.restriction_upper;
  return w;
}

namespace {

CyclicElement from_phases(const std::vector<double>& turns) {
  std::vector<Complex> xi(turns.size());
  for (std::size_t j = 0; j < turns.size(); ++j) xi[j] = std::polar(1.0, 2.0 * std::numbers::pi * turns[j]);
  return CyclicElement(std::move(xi));
}

GapWitness search_gap(int n, const std::vector<int>& divisors, PExponent p, const GapSearch& search) {
  OpnormOptions cheap;
  cheap.restarts = 8;
  cheap.seed = search.seed;

  std::vector<CyclicElement> candidates;
  for (int d : divisors) {
    // Block-constant tuple: d blocks of length n/d whose every restriction is
    // the canonical generator of Z_d.
    std::vector<Complex> beta(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) beta[static_cast<std::size_t>(r)] = root_of_unity((1LL * r * d) / n, d);
    candidates.emplace_back(beta);
    candidates.push_back(candidates.back().inverse());
  }

  std::vector<GapWitness> evaluated;
  for (const auto& c : candidates) evaluated.push_back(evaluate_gap(c, divisors, p, cheap));
  auto best = *std::max_element(evaluated.begin(), evaluated.end(),
                                [](const GapWitness& a, const GapWitness& b) { return a.margin < b.margin; });

  std::mt19937_64 rng(mix_seed(search.seed, 0x9a9));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int spent = 0;
  while (best.margin < search.target_margin && spent < search.budget) {
    std::vector<double> phases(static_cast<std::size_t>(n));
    for (double& t : phases) t = unit(rng);
    GapWitness current = evaluate_gap(from_phases(phases), divisors, p, cheap);
    ++spent;
    double step = 0.125;
    while (step > 1e-3 && spent < search.budget) {
      bool improved = false;
      for (int j = 0; j < n && spent < search.budget; ++j) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> trial = phases;
          trial[static_cast<std::size_t>(j)] += sgn * step;
          GapWitness g = evaluate_gap(from_phases(trial), divisors, p, cheap);
          ++spent;
          if (g.margin > current.margin) {
            current = std::move(g);
            phases = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
      if (current.margin >= search.target_margin) break;
    }
    if (current.margin > best.margin) best = std::move(current);
  }

  // Re-certify with the default option set.
  OpnormOptions full;
  full.seed = search.seed;
  GapWitness certified = evaluate_gap(best.alpha, divisors, p, full);
  if (!(certified.margin > 0.0)) {
    throw SearchExhaustedError("gap_witness: no strict gap found within budget (best margin " +
                               std::to_string(certified.margin) + ")");
  }
  return certified;
}

}  // namespace

GapWitness gap_witness(int n, int d, PExponent p, const GapSearch& search) {
  if (p.is_two()) throw PreconditionError("gap_witness requires p != 2");
  if (d < 1 || n < 1 || n % d != 0 || d >= n) throw PreconditionError("gap_witness requires d | n and d < n");
  return search_gap(n, {d}, p, search);
}

GapWitness gap_witness_all_divisors(int n, PExponent p, const GapSearch& search) {
  if (p.is_two()) throw PreconditionError("gap witness requires p != 2");
  if (n < 2) throw PreconditionError("gap witness over proper divisors requires n >= 2");
  return search_gap(n, proper_divisors(n), p, search);
}

}  // namespace lpkit
