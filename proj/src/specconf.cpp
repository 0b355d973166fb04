#include "lpkit/specconf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "lpkit/errors.hpp"
#include "lpkit/parallel.hpp"

namespace lpkit {

SpectralConfiguration::SpectralConfiguration(std::map<int, ArcSet> finite, bool infinity_full, Tail tail)
    : infinity_full_(infinity_full), tail_(tail) {
  for (auto& [n, set] : finite) {
    if (n < 1) throw SchemaError("slot index must be a positive integer, got " + std::to_string(n));
    if (set.empty()) continue;
    if (!set.rotation_invariant(n)) {
      throw SchemaError("slot " + std::to_string(n) + " is not invariant under rotation by 1/" + std::to_string(n));
    }
    finite_.emplace(n, std::move(set));
  }
  if (finite_.empty() && !infinity_full_ && tail_ == Tail::None) {
    throw SchemaError("configuration has no nonempty slot");
  }
}

SpectralConfiguration SpectralConfiguration::maximal() { return SpectralConfiguration({}, true, Tail::Full); }

SpectralConfiguration SpectralConfiguration::minimal(const Angle& z) {
  return SpectralConfiguration({{1, ArcSet::point(z)}});
}

ArcSet SpectralConfiguration::slot(int n) const {
  if (n < 1) throw PreconditionError("slot index must be positive");
  if (auto it = finite_.find(n); it != finite_.end()) return it->second;
  switch (tail_) {
    case Tail::Full: return ArcSet::full_circle();
    case Tail::Roots: return ArcSet::roots(n);
    case Tail::None: break;
  }
  return {};
}

std::optional<int> SpectralConfiguration::order() const {
  if (infinity_full_ || tail_ != Tail::None) return std::nullopt;
  return finite_.rbegin()->first;
}

bool SpectralConfiguration::is_maximal() const { return *this == maximal(); }

SpectralConfiguration saturate(const SpectralConfiguration& s) {
  if (!s.order()) return SpectralConfiguration::maximal();
  std::map<int, ArcSet> out;
  for (const auto& [m, set] : s.finite()) {
    for (int n = 1; n <= m; ++n) {
      if (m % n != 0) continue;
      auto [it, fresh] = out.try_emplace(n, set);
      if (!fresh) it->second = it->second.unite(set);
    }
  }
  return SpectralConfiguration(std::move(out));
}

bool is_saturated(const SpectralConfiguration& s) { return saturate(s) == s; }

LeqResult leq(const SpectralConfiguration& t, const SpectralConfiguration& s) {
  LeqResult r;
  const auto ts = saturate(t);
  const auto ss = saturate(s);
  r.saturated_inputs = !(ts == t) || !(ss == s);
  if (ss.is_maximal()) {
    r.value = true;
  } else if (ts.is_maximal()) {
    r.value = false;
  } else {
    r.value = std::all_of(ts.finite().begin(), ts.finite().end(),
                          [&](const auto& kv) { return ss.slot(kv.first).contains(kv.second); });
  }
  return r;
}

SpectralConfiguration lattice(LatticeOp op, const std::vector<SpectralConfiguration>& configs) {
  if (configs.empty()) throw PreconditionError("lattice needs at least one configuration");
  for (const auto& c : configs) {
    if (!is_saturated(c)) throw PreconditionError("lattice operations need saturated configurations");
  }
  if (op == LatticeOp::Sup) {
    for (const auto& c : configs) {
      if (c.is_maximal()) return c;
    }
    std::map<int, ArcSet> out;
    for (const auto& c : configs) {
      for (const auto& [n, set] : c.finite()) {
        auto [it, fresh] = out.try_emplace(n, set);
        if (!fresh) it->second = it->second.unite(set);
      }
    }
    return SpectralConfiguration(std::move(out));
  }
  // the maximal element is neutral for Inf
  std::vector<const SpectralConfiguration*> rest;
  for (const auto& c : configs) {
    if (!c.is_maximal()) rest.push_back(&c);
  }
  if (rest.empty()) return SpectralConfiguration::maximal();
  std::map<int, ArcSet> out;
  for (const auto& [n, set] : rest.front()->finite()) {
    ArcSet acc = set;
    for (std::size_t i = 1; i < rest.size() && !acc.empty(); ++i) acc = acc.intersect(rest[i]->slot(n));
    if (!acc.empty()) out.emplace(n, std::move(acc));
  }
  if (out.empty()) throw EmptyInfimumError("infimum is empty in every slot");
  return SpectralConfiguration(std::move(out));
}

ArcSet closure_union(const SpectralConfiguration& s) {
  // the roots of unity of all orders are dense
  if (s.infinity_full() || s.tail() != Tail::None) return ArcSet::full_circle();
  ArcSet out;
  for (const auto& [n, set] : s.finite()) out = out.unite(set);
  return out;
}

bool canonically_equivalent(const SpectralConfiguration& s, const SpectralConfiguration& t) {
  return saturate(s) == saturate(t);
}

Classification classify(const SpectralConfiguration& s, PExponent p) {
  const auto ord = s.order();
  if (!ord) return IsometricallyFpZ{};
  return ContinuousFunctions{*ord, p.is_two() || *ord == 1};
}

LaurentFunction::LaurentFunction(LaurentPolynomial f) : f_(std::move(f)) {
  l1_ = norm_l1(f_);
  argmax_ = f_.is_zero() ? 0.0 : sup_search(f_, std::max(4 * f_.span(), 4096)).argmax;
}

namespace {

NormEstimate evaluate_at(const CircleFunction& f, double t, int n, PExponent p, const OpnormOptions& opts) {
  std::vector<Complex> xi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) xi[static_cast<std::size_t>(j)] = f.at(t + static_cast<double>(j) / n);
  return fpzn_norm(CyclicElement(std::move(xi)), p, opts);
}

struct Window {
  double start = 0.0;
  double length = 0.0;
  bool holds(double t) const {
    double d = t - start;
    d -= std::floor(d);
    return d <= length + 1e-15;
  }
};

}  // namespace

NormEstimate slot_norm(const CircleFunction& f, const ArcSet& slot, int n, PExponent p, const FpsigmaOptions& opts) {
  if (n < 1) throw PreconditionError("slot index must be positive");
  if (!(opts.resolution > 0.0)) throw PreconditionError("resolution must be > 0");
  NormEstimate out;
  if (slot.empty()) return out;
  const OpnormOptions& full_opts = opts.fpz.opnorm;

  // Points: one representative per orbit of rotation by 1/n.
  std::set<Rational> reps;
  std::vector<Window> windows;
  if (slot.full()) {
    windows.push_back({0.0, 1.0 / n});
  } else {
    for (const auto& pt : slot.points()) reps.insert(frac(pt.turns() * n) / n);
    const ArcSet domain = n == 1 ? slot : slot.intersect(ArcSet::arc(Angle(0, 1), Angle(1, n)));
    for (const auto& pt : domain.points()) reps.insert(frac(pt.turns() * n) / n);
    for (const auto& arc : domain.arcs()) windows.push_back({arc.start.to_double(), arc.length.convert_to<double>()});
  }

  const std::vector<Rational> exact(reps.begin(), reps.end());
  std::vector<NormEstimate> at_points(exact.size());
  parallel_for(exact.size(), [&](std::size_t i) {
    at_points[i] = evaluate_at(f, exact[i].convert_to<double>(), n, p, full_opts);
  });
  bool first = true;
  for (const auto& e : at_points) {
    out = first ? e : bracket_max(out, e);
    first = false;
  }
  if (windows.empty()) return out;

  // Arcs: coarse grid with cheap ascents, local refinement, then one full
  // evaluation at the best angle.
  OpnormOptions cheap = full_opts;
  cheap.restarts = std::min(cheap.restarts, 4);
  std::vector<double> grid;
  std::vector<double> spacing;
  for (const auto& w : windows) {
    const int steps = std::max(1, static_cast<int>(std::ceil(w.length / opts.resolution)));
    for (int k = 0; k <= steps; ++k) {
      grid.push_back(w.start + w.length * k / steps);
      spacing.push_back(w.length / steps);
    }
    for (double h : f.hints()) {
      for (int j = 0; j < n; ++j) {
        const double cand = h + static_cast<double>(j) / n;
        if (w.holds(cand)) {
          grid.push_back(cand - std::floor(cand));
          spacing.push_back(w.length / steps);
        }
      }
    }
  }
  std::vector<NormEstimate> at_grid(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { at_grid[i] = evaluate_at(f, grid[i], n, p, cheap); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (at_grid[i].lower > at_grid[best].lower) best = i;
  }
  const double centre = grid[best];
  const double h = spacing[best];
  std::vector<double> fine;
  for (int k = -8; k <= 8; ++k) {
    const double t = centre + h * k / 8.0;
    for (const auto& w : windows) {
      if (w.holds(t)) {
        fine.push_back(t);
        break;
      }
    }
  }
  std::vector<NormEstimate> at_fine(fine.size());
  parallel_for(fine.size(), [&](std::size_t i) { at_fine[i] = evaluate_at(f, fine[i], n, p, cheap); });
  double best_t = centre;
  double best_v = at_grid[best].lower;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    if (at_fine[i].lower > best_v) {
      best_v = at_fine[i].lower;
      best_t = fine[i];
    }
  }
  NormEstimate arc_est = evaluate_at(f, best_t, n, p, full_opts);
  if (at_grid[best].lower > arc_est.lower) arc_est = at_grid[best];

  const double crude = f.laurent() ? norm_l1(*f.laurent()) : std::sqrt(static_cast<double>(n)) * f.sup_bound();
  arc_est.upper = std::max(crude, arc_est.lower);
  arc_est.resolution = opts.resolution;
  return first ? arc_est : bracket_max(out, arc_est);
}

NormEstimate fpsigma_norm(const CircleFunction& f, const SpectralConfiguration& s, PExponent p,
                          const FpsigmaOptions& opts) {
  std::optional<NormEstimate> acc;
  for (const auto& [n, set] : s.finite()) {
    NormEstimate e = slot_norm(f, set, n, p, opts);
    acc = acc ? bracket_max(*acc, e) : e;
  }
  if (s.order()) return *acc;

  const LaurentPolynomial* lp = f.laurent();
  if (!lp) throw PreconditionError("infinite-order configurations need a Laurent polynomial");
  NormEstimate z = fpz_norm(*lp, p, opts.fpz);
  if (!acc) return z;
  // every slot is dominated by the F^p(Z) norm, so its upper end stands
  NormEstimate out = acc->lower > z.lower ? *acc : z;
  out.upper = std::max(z.upper, out.lower);
  out.method = z.method;
  out.resolution = acc->resolution;
  return out;
}

NormEstimate fpsigma_norm(const LaurentPolynomial& f, const SpectralConfiguration& s, PExponent p,
                          const FpsigmaOptions& opts) {
  return fpsigma_norm(LaurentFunction(f), s, p, opts);
}

}  // namespace lpkit
