#ifndef LPKIT_SPECCONF_HPP
#define LPKIT_SPECCONF_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "lpkit/arcset.hpp"
#include "lpkit/cyclic.hpp"
#include "lpkit/laurent.hpp"
#include "lpkit/zline.hpp"

namespace lpkit {

// Rule for every slot n not listed explicitly. Lets a few infinite families
// be written down: nothing, the whole circle, or the n-th roots of unity.
enum class Tail { None, Full, Roots };

// Family (sigma_n) of closed rotation-invariant subsets of the circle, with
// sigma_inf either empty or everything.
class SpectralConfiguration {
 public:
  // Drops empty slots. Throws SchemaError if n < 1, a slot is not invariant
  // under rotation by 1/n, or every slot is empty.
  SpectralConfiguration(std::map<int, ArcSet> finite, bool infinity_full = false, Tail tail = Tail::None);

  // sigma_n = S^1 for every n, infinity included.
  static SpectralConfiguration maximal();
  // sigma_1 = {z}, everything else empty.
  static SpectralConfiguration minimal(const Angle& z);

  const std::map<int, ArcSet>& finite() const noexcept { return finite_; }
  bool infinity_full() const noexcept { return infinity_full_; }
  Tail tail() const noexcept { return tail_; }

  // sigma_n for any n >= 1.
  ArcSet slot(int n) const;
  // nullopt means infinite order.
  std::optional<int> order() const;
  bool is_maximal() const;

  friend bool operator==(const SpectralConfiguration&, const SpectralConfiguration&) = default;

 private:
  std::map<int, ArcSet> finite_;
  bool infinity_full_ = false;
  Tail tail_ = Tail::None;
};

SpectralConfiguration saturate(const SpectralConfiguration& s);
bool is_saturated(const SpectralConfiguration& s);

struct LeqResult {
  bool value = false;
  bool saturated_inputs = false;  // true when either side had to be saturated first
};
LeqResult leq(const SpectralConfiguration& t, const SpectralConfiguration& s);

enum class LatticeOp { Sup, Inf };
// Inputs must be saturated; Inf throws EmptyInfimumError when nothing is left.
SpectralConfiguration lattice(LatticeOp op, const std::vector<SpectralConfiguration>& configs);

ArcSet closure_union(const SpectralConfiguration& s);

bool canonically_equivalent(const SpectralConfiguration& s, const SpectralConfiguration& t);

struct IsometricallyFpZ {};
struct ContinuousFunctions {
  int order = 1;
  bool isometric_to_sup = false;
};
using Classification = std::variant<IsometricallyFpZ, ContinuousFunctions>;
Classification classify(const SpectralConfiguration& s, PExponent p);

// Function on the circle for the configuration norm. Laurent polynomials
// expose themselves so the F^p(Z) part can be evaluated.
class CircleFunction {
 public:
  virtual ~CircleFunction() = default;
  virtual Complex at(double turns) const = 0;
  // Any upper bound for sup |f|.
  virtual double sup_bound() const = 0;
  virtual const LaurentPolynomial* laurent() const { return nullptr; }
  // Angles worth adding to arc grids (peaks and the like).
  virtual std::vector<double> hints() const { return {}; }
};

class LaurentFunction final : public CircleFunction {
 public:
  explicit LaurentFunction(LaurentPolynomial f);
  Complex at(double turns) const override { return f_.at_turns(turns); }
  double sup_bound() const override { return l1_; }
  const LaurentPolynomial* laurent() const override { return &f_; }
  std::vector<double> hints() const override { return {argmax_}; }

 private:
  LaurentPolynomial f_;
  double l1_ = 0.0;
  double argmax_ = 0.0;
};

struct FpsigmaOptions {
  double resolution = 1.0 / 2048.0;  // arc grid spacing in turns
  FpzOptions fpz{};
};

// sup over slots n and t in sigma_n of ||(f(t w_n^j))_j||_{F^p(Z_n)}, plus
// ||f||_{F^p(Z)} when the order is infinite. Point slots are exact up to the
// cyclic bracket; arcs are gridded, which makes their part a lower bound only
// and sets the resolution field.
NormEstimate fpsigma_norm(const CircleFunction& f, const SpectralConfiguration& s, PExponent p,
                          const FpsigmaOptions& opts = {});
NormEstimate fpsigma_norm(const LaurentPolynomial& f, const SpectralConfiguration& s, PExponent p,
                          const FpsigmaOptions& opts = {});

// Slot n alone (0 < n), without the infinity part.
NormEstimate slot_norm(const CircleFunction& f, const ArcSet& slot, int n, PExponent p,
                       const FpsigmaOptions& opts = {});

struct Member {};
struct NotMember {};
struct ProbeStep {
  int k = 0;
  double lower = 0.0;
  double upper = 0.0;
};
struct Inconclusive {
  std::vector<ProbeStep> trace;
};
using ProbeResult = std::variant<Member, NotMember, Inconclusive>;

struct ProbeOptions {
  std::vector<int> k_schedule{4, 16, 64, 256};
  double margin = 0.05;
  GapSearch gap{};
  FpsigmaOptions norm{};
};

// Tests whether t lies in sigma_n through bump functions with n bumps around
// t w_n^l, weighted by a normalized gap witness. Needs p != 2 and a saturated
// configuration of finite order.
ProbeResult membership_probe(const Angle& t, int n, const SpectralConfiguration& s, PExponent p,
                             const ProbeOptions& opts = {}, std::vector<ProbeStep>* trace = nullptr);

}  // namespace lpkit

#endif  // LPKIT_SPECCONF_HPP
