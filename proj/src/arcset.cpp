#include "lpkit/arcset.hpp"

#include <algorithm>
#include <optional>

#include "lpkit/errors.hpp"

namespace lpkit {

ArcSet::ArcSet(std::vector<Angle> points, std::vector<Arc> arcs, bool full) {
  if (full) {
    full_ = true;
    return;
  }
  std::vector<Piece> ps;
  for (const auto& pt : points) ps.push_back({pt.turns(), pt.turns()});
  for (const auto& arc : arcs) {
    if (arc.length < 0) throw SchemaError("arc with negative length");
    if (arc.length >= 1) {
      full_ = true;
      return;
    }
    const Rational a = arc.start.turns();
    const Rational b = a + arc.length;
    if (b <= 1) {
      ps.push_back({a, b});
    } else {
      ps.push_back({a, Rational(1)});
      ps.push_back({Rational(0), b - 1});
    }
  }
  *this = from_pieces(std::move(ps));
}

ArcSet ArcSet::arc(const Angle& a, const Angle& b) {
  return ArcSet({}, {Arc{a, frac(b.turns() - a.turns())}});
}

ArcSet ArcSet::roots(int n, const Angle& z) {
  if (n < 1) throw PreconditionError("roots: n must be positive");
  std::vector<Angle> pts;
  for (int j = 0; j < n; ++j) pts.emplace_back((z.turns() + j) / n);
  return ArcSet(std::move(pts), {});
}

std::vector<ArcSet::Piece> ArcSet::pieces() const {
  std::vector<Piece> ps;
  if (full_) {
    ps.push_back({Rational(0), Rational(1)});
    return ps;
  }
  for (const auto& pt : points_) ps.push_back({pt.turns(), pt.turns()});
  for (const auto& arc : arcs_) {
    const Rational a = arc.start.turns();
    const Rational b = a + arc.length;
    if (b <= 1) {
      ps.push_back({a, b});
    } else {
      ps.push_back({a, Rational(1)});
      ps.push_back({Rational(0), b - 1});
    }
  }
  return ps;
}

// Merges pieces on [0,1], identifies 0 with 1, and rebuilds points and arcs.
ArcSet ArcSet::from_pieces(std::vector<Piece> ps) {
  ArcSet out;
  // 0 and 1 are the same point of the circle
  const std::size_t raw = ps.size();
  for (std::size_t i = 0; i < raw; ++i) {
    if (ps[i].a == 0) ps.push_back({Rational(1), Rational(1)});
    if (ps[i].b == 1) ps.push_back({Rational(0), Rational(0)});
  }
  std::sort(ps.begin(), ps.end(), [](const Piece& x, const Piece& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
  std::vector<Piece> merged;
  for (const auto& p : ps) {
    if (!merged.empty() && p.a <= merged.back().b) {
      merged.back().b = std::max(merged.back().b, p.b);
    } else {
      merged.push_back(p);
    }
  }
  if (merged.empty()) return out;
  if (merged.size() == 1 && merged[0].a == 0 && merged[0].b == 1) {
    out.full_ = true;
    return out;
  }

  // the piece through 1 and the piece through 0 form one arc across 0
  std::vector<Piece> core(merged.begin(), merged.end());
  std::optional<Arc> wrap;
  bool wrap_point = false;
  if (core.size() >= 2 && core.front().a == 0 && core.back().b == 1) {
    const Piece first = core.front();
    const Piece last = core.back();
    core.erase(core.begin());
    core.pop_back();
    const Rational len = (1 - last.a) + first.b;
    if (len == 0) {
      wrap_point = true;
    } else {
      wrap = Arc{Angle(last.a), len};
    }
  }
  if (wrap_point) out.points_.emplace_back(Rational(0));
  for (const auto& p : core) {
    if (p.a == p.b) {
      out.points_.emplace_back(p.a);
    } else {
      out.arcs_.push_back(Arc{Angle(p.a), p.b - p.a});
    }
  }
  if (wrap) out.arcs_.push_back(*wrap);
  std::sort(out.points_.begin(), out.points_.end());
  std::sort(out.arcs_.begin(), out.arcs_.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  return out;
}

bool ArcSet::contains(const Angle& a) const {
  if (full_) return true;
  for (const auto& pt : points_) {
    if (pt == a) return true;
  }
  for (const auto& arc : arcs_) {
    if (frac(a.turns() - arc.start.turns()) <= arc.length) return true;
  }
  return false;
}

bool ArcSet::contains(const ArcSet& other) const { return intersect(other) == other; }

ArcSet ArcSet::rotated(const Rational& turns) const {
  if (full_) return *this;
  std::vector<Angle> pts;
  for (const auto& pt : points_) pts.push_back(pt + turns);
  std::vector<Arc> arcs;
  for (const auto& arc : arcs_) arcs.push_back(Arc{arc.start + turns, arc.length});
  return ArcSet(std::move(pts), std::move(arcs));
}

bool ArcSet::rotation_invariant(int n) const {
  if (n < 1) throw PreconditionError("rotation_invariant: n must be positive");
  return rotated(Rational(1, n)) == *this;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
  if (full_ || other.full_) return full_circle();
  auto ps = pieces();
  auto qs = other.pieces();
  ps.insert(ps.end(), qs.begin(), qs.end());
  return from_pieces(std::move(ps));
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  if (full_) return other;
  if (other.full_) return *this;
  auto close = [](std::vector<Piece> ps) {
    const std::size_t raw = ps.size();
    for (std::size_t i = 0; i < raw; ++i) {
      if (ps[i].a == 0) ps.push_back({Rational(1), Rational(1)});
      if (ps[i].b == 1) ps.push_back({Rational(0), Rational(0)});
    }
    return ps;
  };
  const auto ps = close(pieces());
  const auto qs = close(other.pieces());
  std::vector<Piece> out;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      const Rational a = std::max(p.a, q.a);
      const Rational b = std::min(p.b, q.b);
      if (a <= b) out.push_back({a, b});
    }
  }
  return from_pieces(std::move(out));
}

}  // namespace lpkit
