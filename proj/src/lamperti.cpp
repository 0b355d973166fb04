#include "lpkit/lamperti.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lpkit/errors.hpp"

namespace lpkit {

AtomicSpace::AtomicSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw SchemaError("atomic space needs at least one atom");
  for (double w : weights_) {
    if (!std::isfinite(w) || !(w > 0.0)) throw SchemaError("atom weights must be positive and finite");
  }
}

SpatialIsometry::SpatialIsometry(AtomicSpace sp, std::vector<Complex> phases, std::vector<int> t, bool aper)
    : space(std::move(sp)), h(std::move(phases)), T(std::move(t)), aperiodic(aper) {
  const auto n = static_cast<std::size_t>(space.size());
  if (h.size() != n || T.size() != n) throw SchemaError("weights, h and T must have the same length");
  for (const auto& z : h) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(std::abs(z) - 1.0) > 1e-9) {
      throw SchemaError("phases h must be unimodular");
    }
  }
  std::vector<bool> hit(n, false);
  for (int y : T) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[static_cast<std::size_t>(y)]) {
      throw SchemaError("T must be a permutation of the atoms");
    }
    hit[static_cast<std::size_t>(y)] = true;
  }
}

std::vector<int> SpatialIsometry::inverse_map() const {
  std::vector<int> inv(T.size());
  for (std::size_t x = 0; x < T.size(); ++x) inv[static_cast<std::size_t>(T[x])] = static_cast<int>(x);
  return inv;
}

namespace {

double rn_factor(const AtomicSpace& s, int x, int y, PExponent p) {
  // (mu_x / mu_y)^{1/p}
  return std::pow(s[x] / s[y], 1.0 / p.value());
}

void require_finite(const SpatialIsometry& v, const char* what) {
  if (v.aperiodic) throw PreconditionError(std::string(what) + " is not available with an aperiodic part");
}

}  // namespace

CMatrix to_matrix(const SpatialIsometry& v, PExponent p) {
  require_finite(v, "to_matrix");
  const int n = v.size();
  CMatrix a = CMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const int y = v.T[static_cast<std::size_t>(x)];
    a(y, x) = v.h[static_cast<std::size_t>(y)] * rn_factor(v.space, x, y, p);
  }
  return a;
}

SpatialIsometry decompose(const CMatrix& a, const AtomicSpace& space, PExponent p, double tol) {
  if (p.is_two()) throw AmbiguousAtP2Error("decompose: at p = 2 unitaries need not be spatial");
  const int n = space.size();
  if (a.rows() != n || a.cols() != n) throw SchemaError("decompose: matrix size does not match the atoms");
  std::vector<int> T(static_cast<std::size_t>(n), -1);
  std::vector<int> per_row(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!std::isfinite(std::abs(a(y, x)))) throw SchemaError("decompose: non-finite entry");
      if (std::abs(a(y, x)) <= tol) continue;
      if (T[static_cast<std::size_t>(x)] != -1) {
        throw NotSpatialError("column " + std::to_string(x) + " has more than one nonzero entry");
      }
      T[static_cast<std::size_t>(x)] = y;
      ++per_row[static_cast<std::size_t>(y)];
    }
    if (T[static_cast<std::size_t>(x)] == -1) throw NotSpatialError("column " + std::to_string(x) + " is zero");
  }
  for (int y = 0; y < n; ++y) {
    if (per_row[static_cast<std::size_t>(y)] != 1) {
      throw NotSpatialError("row " + std::to_string(y) + " does not have exactly one nonzero entry");
    }
  }
  std::vector<Complex> h(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int y = T[static_cast<std::size_t>(x)];
    const double expected = rn_factor(space, x, y, p);
    const Complex entry = a(y, x);
    if (std::abs(std::abs(entry) - expected) > tol * std::max(1.0, expected)) {
      throw NotSpatialError("entry (" + std::to_string(y) + ", " + std::to_string(x) +
                            ") does not match the weight ratio");
    }
    h[static_cast<std::size_t>(y)] = entry / expected;
  }
  return SpatialIsometry(space, std::move(h), std::move(T));
}

PeriodDecomposition periods(const SpatialIsometry& v) {
  PeriodDecomposition out;
  out.aperiodic = v.aperiodic;
  const int n = v.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    c.cross_section = start;  // first unseen index is the cycle's minimum
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = v.T[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      c.atoms.push_back(x);
    }
    c.length = static_cast<int>(c.atoms.size());
    auto& slot = out.slots[c.length];
    slot.insert(slot.end(), c.atoms.begin(), c.atoms.end());
    out.cycles.push_back(std::move(c));
  }
  for (auto& [len, atoms] : out.slots) std::sort(atoms.begin(), atoms.end());
  return out;
}

GaugeResult gauge_trivialize(const SpatialIsometry& v) {
  const auto dec = periods(v);
  std::vector<Complex> g(v.h.size(), Complex(1.0));
  std::vector<Complex> h2(v.h.size(), Complex(1.0));
  for (const auto& c : dec.cycles) {
    Complex acc = 1.0;
    for (std::size_t k = 1; k < c.atoms.size(); ++k) {
      const auto a = static_cast<std::size_t>(c.atoms[k]);
      acc *= std::conj(v.h[a]);
      g[a] = acc;
    }
    // g h conj(g o T^-1) at the cross-section; exactly 1 elsewhere
    const auto a0 = static_cast<std::size_t>(c.cross_section);
    const auto last = static_cast<std::size_t>(c.atoms.back());
    h2[a0] = v.h[a0] * std::conj(g[last]);
  }
  return {g, SpatialIsometry(v.space, std::move(h2), v.T, v.aperiodic)};
}

NormalizeResult measure_normalize(const SpatialIsometry& v) {
  const auto dec = periods(v);
  std::vector<double> nu(v.space.weights());
  for (const auto& c : dec.cycles) {
    for (int x : c.atoms) nu[static_cast<std::size_t>(x)] = v.space[c.cross_section];
  }
  AtomicSpace space(std::move(nu));
  return {space, SpatialIsometry(space, v.h, v.T, v.aperiodic)};
}

Angle cycle_phase(const SpatialIsometry& v, const Cycle& c) {
  // sum of arguments rather than product of phases: no drift in modulus
  double turns = 0.0;
  for (int x : c.atoms) turns += std::arg(v.h[static_cast<std::size_t>(x)]) / (2.0 * std::numbers::pi);
  return Angle::from_turns(turns - std::floor(turns));
}

SpectralConfiguration spectral_configuration_of(const SpatialIsometry& v) {
  std::map<int, ArcSet> slots;
  for (const auto& c : periods(v).cycles) {
    const ArcSet roots = ArcSet::roots(c.length, cycle_phase(v, c));
    auto [it, fresh] = slots.try_emplace(c.length, roots);
    if (!fresh) it->second = it->second.unite(roots);
  }
  return SpectralConfiguration(std::move(slots), v.aperiodic);
}

bool FpvResult::overlap(double slack) const { return direct && via_sigma && direct->overlaps(*via_sigma, slack); }

FpvResult fpv_norm(const LaurentPolynomial& f, const SpatialIsometry& v, PExponent p, FpvMode mode,
                   const FpsigmaOptions& opts) {
  FpvResult out;
  if (mode != FpvMode::ViaSigma) {
    require_finite(v, "direct fpv_norm");
    const int n = v.size();
    const CMatrix a = to_matrix(v, p);
    // inverse of a weighted permutation: entry (x, T(x)) is 1 / a(T(x), x)
    CMatrix a_inv = CMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      const int y = v.T[static_cast<std::size_t>(x)];
      a_inv(x, y) = 1.0 / a(y, x);
    }
    // the weighted l^p norm is the standard one after conjugating with mu^{1/p}
    Eigen::VectorXd d(n);
    for (int x = 0; x < n; ++x) d[x] = std::pow(v.space[x], 1.0 / p.value());
    const CMatrix fa = d.asDiagonal() * f.apply(a, a_inv) * d.cwiseInverse().asDiagonal();
    out.direct = opnorm(fa, p, opts.fpz.opnorm);
  }
  if (mode != FpvMode::Direct) {
    out.via_sigma = fpsigma_norm(f, spectral_configuration_of(v), p, opts);
  }
  return out;
}

double conjugation_identity_check(const SpatialIsometry& v, PExponent p) {
  require_finite(v, "conjugation_identity_check");
  const int n = v.size();
  const std::vector<Complex> ones(v.h.size(), Complex(1.0));
  const CMatrix u = to_matrix(SpatialIsometry(v.space, ones, v.T), p);
  const CMatrix u_inv = to_matrix(SpatialIsometry(v.space, ones, v.inverse_map()), p);
  CVector h(n), ht(n);
  for (int x = 0; x < n; ++x) {
    h[x] = v.h[static_cast<std::size_t>(x)];
    ht[x] = v.h[static_cast<std::size_t>(v.T[static_cast<std::size_t>(x)])];
  }
  const CMatrix lhs = u_inv * h.asDiagonal() * u;
  const CMatrix rhs = ht.asDiagonal();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace lpkit
