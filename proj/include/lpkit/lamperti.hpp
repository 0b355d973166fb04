#ifndef LPKIT_LAMPERTI_HPP
#define LPKIT_LAMPERTI_HPP

#include <map>
#include <optional>
#include <vector>

#include "lpkit/laurent.hpp"
#include "lpkit/specconf.hpp"

namespace lpkit {

// Finitely many atoms with positive masses.
class AtomicSpace {
 public:
  explicit AtomicSpace(std::vector<double> weights);
  static AtomicSpace uniform(int n) { return AtomicSpace(std::vector<double>(static_cast<std::size_t>(n), 1.0)); }

  int size() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const AtomicSpace&, const AtomicSpace&) = default;

 private:
  std::vector<double> weights_;
};

// v = m_h o u_T on the weighted l^p space of the atoms. The aperiodic flag
// stands for an extra part of positive measure on which T has no finite
// period; it has no matrix.
struct SpatialIsometry {
  AtomicSpace space;
  std::vector<Complex> h;  // phase at each atom
  std::vector<int> T;      // T[x] is the image of atom x
  bool aperiodic = false;

  // Throws SchemaError unless sizes match, |h_i| = 1 and T is a bijection.
  SpatialIsometry(AtomicSpace space, std::vector<Complex> h, std::vector<int> T, bool aperiodic = false);

  int size() const noexcept { return space.size(); }
  std::vector<int> inverse_map() const;
};

// (T(x), x) entry h_{T(x)} (mu_x / mu_{T(x)})^{1/p}. Throws PreconditionError
// for aperiodic input.
CMatrix to_matrix(const SpatialIsometry& v, PExponent p);

// Reads (h, T) back from a weighted complex permutation matrix. Throws
// NotSpatialError when the pattern or a modulus is wrong, AmbiguousAtP2Error
// at p = 2.
SpatialIsometry decompose(const CMatrix& a, const AtomicSpace& space, PExponent p, double tol = 1e-9);

struct Cycle {
  int length = 0;
  std::vector<int> atoms;  // atoms[k + 1] = T(atoms[k])
  int cross_section = 0;   // smallest atom index of the cycle
};

struct PeriodDecomposition {
  std::vector<Cycle> cycles;             // ordered by cross-section
  std::map<int, std::vector<int>> slots;  // period -> atoms, sorted
  bool aperiodic = false;                // formal part of infinite period
};

PeriodDecomposition periods(const SpatialIsometry& v);

struct GaugeResult {
  std::vector<Complex> g;
  SpatialIsometry v;
};

// Conjugates by m_g so the phases are 1 off the cross-sections; the
// cross-section atom of each cycle carries the cycle's phase product.
GaugeResult gauge_trivialize(const SpatialIsometry& v);

struct NormalizeResult {
  AtomicSpace nu;
  SpatialIsometry v;
};

// Replaces the weights by ones constant along cycles (the cross-section's
// mass), making T measure preserving.
NormalizeResult measure_normalize(const SpatialIsometry& v);

// Slot N collects {zeta : zeta^N = z} over N-cycles with phase product z;
// the aperiodic part makes the infinity slot full.
SpectralConfiguration spectral_configuration_of(const SpatialIsometry& v);

// Phase product of a cycle as an angle in turns (snapped when close to a
// small-denominator rational).
Angle cycle_phase(const SpatialIsometry& v, const Cycle& c);

enum class FpvMode { Direct, ViaSigma, Both };

struct FpvResult {
  std::optional<NormEstimate> direct;
  std::optional<NormEstimate> via_sigma;

  // Both brackets present and intersecting up to slack.
  bool overlap(double slack = 0.0) const;
};

// Direct: operator norm of f(v) on the weighted space. ViaSigma: the
// configuration norm of f on sigma(v).
FpvResult fpv_norm(const LaurentPolynomial& f, const SpatialIsometry& v, PExponent p, FpvMode mode,
                   const FpsigmaOptions& opts = {});

// max entrywise |u_{T^-1} m_h u_T - m_{h o T}|.
double conjugation_identity_check(const SpatialIsometry& v, PExponent p);

}  // namespace lpkit

#endif  // LPKIT_LAMPERTI_HPP
