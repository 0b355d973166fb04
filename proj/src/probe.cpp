#include <algorithm>
#include <cmath>

#include "lpkit/angle.hpp"
#include "lpkit/errors.hpp"
#include "lpkit/specconf.hpp"

namespace lpkit {

namespace {

// sum_l alpha_l * max(0, 1 - 2K dist(x, t + l/n)), distances in turns.
class BumpFunction final : public CircleFunction {
 public:
  BumpFunction(double t, std::vector<Complex> alpha, int K) : t_(t), alpha_(std::move(alpha)), K_(K) {}

  Complex at(double x) const override {
    const int n = static_cast<int>(alpha_.size());
    Complex v = 0.0;
    for (int l = 0; l < n; ++l) {
      const double d = circle_distance(x, t_ + static_cast<double>(l) / n);
      const double tent = std::max(0.0, 1.0 - 2.0 * K_ * d);
      if (tent > 0.0) v += alpha_[static_cast<std::size_t>(l)] * tent;
    }
    return v;
  }
  double sup_bound() const override {
    double m = 0.0;
    for (const auto& a : alpha_) m = std::max(m, std::abs(a));
    return m;
  }
  std::vector<double> hints() const override {
    std::vector<double> h;
    const int n = static_cast<int>(alpha_.size());
    for (int l = 0; l < n; ++l) h.push_back(t_ + static_cast<double>(l) / n);
    return h;
  }

 private:
  double t_;
  std::vector<Complex> alpha_;
  int K_;
};

}  // namespace

ProbeResult membership_probe(const Angle& t, int n, const SpectralConfiguration& s, PExponent p,
                             const ProbeOptions& opts, std::vector<ProbeStep>* trace) {
  if (p.is_two()) throw PreconditionError("membership_probe needs p != 2");
  if (n < 1) throw PreconditionError("membership_probe needs n >= 1");
  if (!s.order()) throw PreconditionError("membership_probe needs a configuration of finite order");
  if (!is_saturated(s)) throw PreconditionError("membership_probe needs a saturated configuration");
  if (opts.k_schedule.empty()) throw PreconditionError("k_schedule is empty");
  for (std::size_t i = 0; i < opts.k_schedule.size(); ++i) {
    if (opts.k_schedule[i] < 1 || (i > 0 && opts.k_schedule[i] <= opts.k_schedule[i - 1])) {
      throw PreconditionError("k_schedule must be positive and strictly increasing");
    }
  }

  // Weights: norm > 1 while every restriction to a proper divisor has norm <= 1.
  std::vector<Complex> alpha;
  if (n == 1) {
    alpha = {Complex(2.0)};
  } else {
    const GapWitness w = gap_witness_all_divisors(n, p, opts.gap);
    for (const auto& a : w.alpha.xi()) alpha.push_back(a / w.restriction_upper);
  }

  std::vector<ProbeStep> steps;
  std::vector<bool> exact;
  for (int k : opts.k_schedule) {
    const BumpFunction f(t.to_double(), alpha, k * n);
    const NormEstimate e = fpsigma_norm(f, s, p, opts.norm);
    steps.push_back({k, e.lower, e.upper});
    exact.push_back(!e.resolution.has_value());
  }
  if (trace) *trace = steps;

  const std::size_t tail = std::min<std::size_t>(2, steps.size());
  bool member = true, not_member = true;
  for (std::size_t i = steps.size() - tail; i < steps.size(); ++i) {
    member = member && steps[i].lower > 1.0 + opts.margin;
    // gridded arcs have no usable upper end; fall back to the computed value
    const double top = exact[i] ? steps[i].upper : steps[i].lower;
    not_member = not_member && top <= 1.0 - opts.margin;
  }
  if (member) return Member{};
  if (not_member) return NotMember{};
  return Inconclusive{std::move(steps)};
}

}  // namespace lpkit
