#pragma once

#include <compare>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace prelam {

// A point of the circle R/Z, in full turns.
class CirclePoint {
 public:
  CirclePoint() = default;
  CirclePoint(const Rational& angle) : angle_(frac(angle)) {}  // NOLINT: implicit on purpose
  CirclePoint(long n, long d) : CirclePoint(Rational(n, d)) {}

  const Rational& angle() const { return angle_; }
  std::string str() const { return to_string(angle_); }

  friend bool operator==(const CirclePoint& x, const CirclePoint& y) { return x.angle_ == y.angle_; }
  friend bool operator<(const CirclePoint& x, const CirclePoint& y) { return x.angle_ < y.angle_; }
  friend bool operator!=(const CirclePoint& x, const CirclePoint& y) { return !(x == y); }
  friend bool operator>(const CirclePoint& x, const CirclePoint& y) { return y < x; }
  friend bool operator<=(const CirclePoint& x, const CirclePoint& y) { return !(y < x); }
  friend bool operator>=(const CirclePoint& x, const CirclePoint& y) { return !(x < y); }

 private:
  Rational angle_{0};
};

inline CirclePoint parse_point(std::string_view s) { return CirclePoint(parse_rational(s)); }

// Counterclockwise distance from x to y, in [0,1).
inline Rational ccw_offset(const CirclePoint& x, const CirclePoint& y) { return frac(y.angle() - x.angle()); }

inline CirclePoint rotate(const CirclePoint& x, const Rational& t) { return CirclePoint(x.angle() + t); }

struct Arc {
  CirclePoint start, end;

  Arc(CirclePoint s, CirclePoint e) : start(std::move(s)), end(std::move(e)) {
    if (start == end) fail(ErrorKind::DomainError, "degenerate arc at " + start.str());
  }
  Rational length() const { return ccw_offset(start, end); }
  bool contains_open(const CirclePoint& x) const {
    return x != start && x != end && ccw_offset(start, x) < length();
  }
  bool contains_closed(const CirclePoint& x) const { return x == start || x == end || contains_open(x); }
};

// Unordered pair {a,b}, stored with a < b.
struct Chord {
  CirclePoint a, b;

  Chord() = default;
  Chord(CirclePoint x, CirclePoint y) {
    if (x == y) fail(ErrorKind::DomainError, "degenerate chord at " + x.str());
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
  }

  bool has_endpoint(const CirclePoint& x) const { return x == a || x == b; }
  const CirclePoint& other(const CirclePoint& x) const { return x == a ? b : a; }
  // Side containing the counterclockwise arc from a to b.
  Arc inner_arc() const { return Arc(a, b); }
  Arc outer_arc() const { return Arc(b, a); }
  std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }

  friend bool operator==(const Chord& x, const Chord& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Chord& x, const Chord& y) { return !(x == y); }
  friend bool operator<(const Chord& x, const Chord& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }
};

inline Chord rotate(const Chord& c, const Rational& t) { return Chord(rotate(c.a, t), rotate(c.b, t)); }

inline int cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  if (a == b || b == c || a == c) return 0;
  return ccw_offset(a, b) < ccw_offset(a, c) ? 1 : -1;
}

inline bool chords_cross(const Chord& c1, const Chord& c2) {
  if (c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b)) return false;
  return cyclic_order(c1.a, c2.a, c1.b) != cyclic_order(c1.a, c2.b, c1.b);
}

inline bool separates(const Chord& c, const CirclePoint& p, const CirclePoint& q) {
  if (c.has_endpoint(p) || c.has_endpoint(q))
    fail(ErrorKind::EndpointCollision, "point is an endpoint of " + c.str());
  Arc in = c.inner_arc();
  return in.contains_open(p) != in.contains_open(q);
}

inline Rational minor_arc_gap(const Chord& c) {
  Rational d = c.b.angle() - c.a.angle();
  Rational e = 1 - d;
  return d < e ? d : e;
}

// Both endpoints of `inner` lie in the closed counterclockwise arc [x,y].
inline bool chord_in_closed_arc(const Chord& inner, const CirclePoint& x, const CirclePoint& y) {
  Arc arc(x, y);
  return arc.contains_closed(inner.a) && arc.contains_closed(inner.b);
}

}  // namespace prelam
