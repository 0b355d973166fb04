#ifndef LPKIT_ARCSET_HPP
#define LPKIT_ARCSET_HPP

#include <vector>

#include "lpkit/angle.hpp"

namespace lpkit {

// Closed arc running counterclockwise from start through length turns,
// 0 < length < 1.
struct Arc {
  Angle start;
  Rational length;

  Angle end() const { return start + length; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Closed subset of the circle: finitely many points and closed arcs, or all
// of it. Always stored normalized (sorted, disjoint, non-abutting, no point
// inside an arc), so == is set equality.
class ArcSet {
 public:
  ArcSet() = default;
  ArcSet(std::vector<Angle> points, std::vector<Arc> arcs, bool full = false);

  static ArcSet full_circle() { return ArcSet({}, {}, true); }
  static ArcSet point(const Angle& a) { return ArcSet({a}, {}); }
  // Arc from a to b counterclockwise (a == b gives a point).
  static ArcSet arc(const Angle& a, const Angle& b);
  // The n points zeta with zeta^n = exp(2 pi i z).
  static ArcSet roots(int n, const Angle& z = Angle());

  bool empty() const noexcept { return !full_ && points_.empty() && arcs_.empty(); }
  bool full() const noexcept { return full_; }
  const std::vector<Angle>& points() const noexcept { return points_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool contains(const Angle& a) const;
  bool contains(const ArcSet& other) const;
  ArcSet rotated(const Rational& turns) const;
  bool rotation_invariant(int n) const;

  ArcSet unite(const ArcSet& other) const;
  ArcSet intersect(const ArcSet& other) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  struct Piece {
    Rational a, b;  // closed interval inside [0, 1]
  };
  std::vector<Piece> pieces() const;
  static ArcSet from_pieces(std::vector<Piece> ps);

  std::vector<Angle> points_;
  std::vector<Arc> arcs_;
  bool full_ = false;
};

}  // namespace lpkit

#endif  // LPKIT_ARCSET_HPP
