#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "circle.hpp"

namespace prelam {

struct FiniteLamination {
  std::vector<Chord> leaves;
};

struct ShellSpec {
  Chord root;
  std::vector<Chord> boundary;  // clockwise along the side arc
};

struct StarSpec {
  std::vector<Chord> polygon;  // edges e_0..e_{k-1}; vertex i is shared by e_i and e_{i+1}
};

struct AnnotatedLamination {
  FiniteLamination base;
  std::vector<ShellSpec> shells;
  std::vector<StarSpec> stars;
  int exceptions = 0;

  const std::vector<Chord>& leaves() const { return base.leaves; }
};

struct RawAnnotatedLamination {
  AnnotatedLamination al;
  std::vector<Chord> virtuals;
};

inline bool operator==(const ShellSpec& x, const ShellSpec& y) { return x.root == y.root && x.boundary == y.boundary; }
inline bool operator==(const StarSpec& x, const StarSpec& y) { return x.polygon == y.polygon; }
inline bool operator==(const AnnotatedLamination& x, const AnnotatedLamination& y) {
  return x.base.leaves == y.base.leaves && x.shells == y.shells && x.stars == y.stars && x.exceptions == y.exceptions;
}

// ---------------------------------------------------------------------------
// Star geometry

inline CirclePoint star_vertex(const StarSpec& s, std::size_t i) {
  const Chord& e = s.polygon[i];
  const Chord& f = s.polygon[(i + 1) % s.polygon.size()];
  return f.has_endpoint(e.a) ? e.a : e.b;
}

inline int star_edge_index(const StarSpec& s, const Chord& c) {
  for (std::size_t i = 0; i < s.polygon.size(); ++i)
    if (s.polygon[i] == c) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Shell geometry

// The side arc I of a shell, traversed counterclockwise.
inline Arc shell_side(const ShellSpec& s) {
  int inner = 0, outer = 0;
  Arc in = s.root.inner_arc();
  for (const Chord& c : s.boundary) {
    for (const CirclePoint* x : {&c.a, &c.b}) {
      if (s.root.has_endpoint(*x)) continue;
      (in.contains_open(*x) ? inner : outer)++;
    }
  }
  if (inner > 0 && outer > 0) fail(ErrorKind::InvalidLamination, "shell boundary on both sides of root " + s.root.str());
  if (inner == 0 && outer == 0) fail(ErrorKind::InvalidLamination, "shell without boundary off root " + s.root.str());
  return inner > 0 ? in : s.root.outer_arc();
}

// Position along I, measured clockwise from its counterclockwise end.
inline Rational clockwise_key(const Arc& side, const Chord& c) {
  Rational x = ccw_offset(c.a, side.end), y = ccw_offset(c.b, side.end);
  return x < y ? x : y;
}

inline std::vector<Chord> clockwise_sorted(const Arc& side, std::vector<Chord> cs) {
  std::vector<std::pair<Rational, Chord>> keyed;
  for (auto& c : cs) keyed.emplace_back(clockwise_key(side, c), c);
  std::sort(keyed.begin(), keyed.end(), [](auto& x, auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = keyed[i].second;
  return cs;
}

// ---------------------------------------------------------------------------
// Planar subdivision of the disc by a non-crossing chord system.
//
// Face 0 is the face touching the arc around 0; face i+1 is the face on the
// inner side (arc a..b) of chord i, just inside it.

class Subdivision {
 public:
  explicit Subdivision(std::vector<Chord> chords) : chords_(std::move(chords)) {
    const int n = static_cast<int>(chords_.size());
    parent_.assign(n, -1);
    children_.assign(n, {});
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const Chord &c = chords_[x], &d = chords_[y];
      if (c.a != d.a) return c.a < d.a;
      return d.b < c.b;
    });
    std::vector<int> stack;
    for (int idx : order) {
      const Chord& c = chords_[idx];
      while (!stack.empty() && chords_[stack.back()].b <= c.a) stack.pop_back();
      if (!stack.empty()) {
        const Chord& t = chords_[stack.back()];
        if (t == c) fail(ErrorKind::InvalidLamination, "duplicate chord " + c.str());
        if (t.b < c.b) fail(ErrorKind::InvalidLamination, "crossing chords " + t.str() + " and " + c.str());
        parent_[idx] = stack.back();
        children_[stack.back()].push_back(idx);
      } else {
        top_.push_back(idx);
      }
      stack.push_back(idx);
    }
  }

  int chord_count() const { return static_cast<int>(chords_.size()); }
  int face_count() const { return chord_count() + 1; }
  const Chord& chord(int i) const { return chords_[i]; }
  const std::vector<Chord>& chords() const { return chords_; }

  int inner_face(int c) const { return c + 1; }
  int outer_face(int c) const { return parent_[c] < 0 ? 0 : parent_[c] + 1; }
  int other_face(int c, int f) const { return f == inner_face(c) ? outer_face(c) : inner_face(c); }

  // Face on the side of chord c that contains point y (y not an endpoint of c).
  int face_toward(int c, const CirclePoint& y) const {
    return chords_[c].inner_arc().contains_open(y) ? inner_face(c) : outer_face(c);
  }

  // Boundary chords of face f in counterclockwise order around the face.
  std::vector<int> face_chords(int f) const {
    if (f == 0) return top_;
    std::vector<int> out = children_[f - 1];
    out.push_back(f - 1);
    return out;
  }
  const std::vector<int>& top_chords() const { return top_; }
  const std::vector<int>& child_chords(int c) const { return children_[c]; }
  int face_size(int f) const { return f == 0 ? static_cast<int>(top_.size()) : static_cast<int>(children_[f - 1].size()) + 1; }

  int find_chord(const Chord& c) const {
    for (int i = 0; i < chord_count(); ++i)
      if (chords_[i] == c) return i;
    return -1;
  }

 private:
  std::vector<Chord> chords_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> top_;
};

// ---------------------------------------------------------------------------
// Structural validation

inline std::vector<Chord> roots_of(const AnnotatedLamination& al) {
  std::vector<Chord> r;
  for (auto& s : al.shells) r.push_back(s.root);
  return r;
}

inline std::vector<Chord> chord_system(const AnnotatedLamination& al) {
  std::vector<Chord> all = al.base.leaves;
  for (auto& s : al.shells) all.push_back(s.root);
  return all;
}

inline void validate(const FiniteLamination& l) { Subdivision sub(l.leaves); (void)sub; }

inline void validate(const AnnotatedLamination& al) {
  auto invalid = [](const std::string& m) { fail(ErrorKind::InvalidLamination, m); };
  if (al.exceptions < 0) invalid("negative exceptions budget");
  std::set<Chord> leaves(al.base.leaves.begin(), al.base.leaves.end());
  if (leaves.size() != al.base.leaves.size()) invalid("duplicate leaf");
  for (auto& s : al.shells)
    if (leaves.count(s.root)) invalid("root " + s.root.str() + " is a leaf");
  // Throws on crossings among leaves and roots, and on repeated roots.
  Subdivision sub(chord_system(al));
  for (auto& s : al.shells) {
    if (s.boundary.size() < 2) invalid("shell " + s.root.str() + " has fewer than 2 boundary leaves");
    std::set<Chord> seen;
    for (auto& c : s.boundary) {
      if (!leaves.count(c)) invalid("shell boundary chord " + c.str() + " is not a leaf");
      if (!seen.insert(c).second) invalid("shell boundary repeats " + c.str());
    }
    Arc side = shell_side(s);
    for (auto& c : s.boundary)
      if (!chord_in_closed_arc(c, side.start, side.end)) invalid("boundary chord " + c.str() + " leaves the side arc");
  }
  for (auto& st : al.stars) {
    const std::size_t k = st.polygon.size();
    if (k < 3) invalid("star with fewer than 3 edges");
    for (auto& c : st.polygon)
      if (!leaves.count(c)) invalid("star edge " + c.str() + " is not a leaf");
    std::set<CirclePoint> verts;
    Rational turn = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Chord &e = st.polygon[i], &f = st.polygon[(i + 1) % k];
      int shared = (f.has_endpoint(e.a) ? 1 : 0) + (f.has_endpoint(e.b) ? 1 : 0);
      if (shared != 1) invalid("star edges " + e.str() + " and " + f.str() + " do not share exactly one endpoint");
      verts.insert(star_vertex(st, i));
    }
    if (verts.size() != k) invalid("star vertices are not distinct");
    for (std::size_t i = 0; i < k; ++i) turn += ccw_offset(star_vertex(st, i), star_vertex(st, (i + 1) % k));
    if (turn != 1) invalid("star vertices are not in counterclockwise order");
  }
}

inline void validate(const RawAnnotatedLamination& raw) {
  validate(raw.al);
  std::set<Chord> leaves(raw.al.base.leaves.begin(), raw.al.base.leaves.end());
  for (auto& v : raw.virtuals) {
    if (leaves.count(v)) fail(ErrorKind::InvalidLamination, "virtual chord " + v.str() + " is a leaf");
    for (auto& s : raw.al.shells)
      if (s.root == v) fail(ErrorKind::InvalidLamination, "virtual chord " + v.str() + " is a root");
  }
  std::vector<Chord> all = chord_system(raw.al);
  all.insert(all.end(), raw.virtuals.begin(), raw.virtuals.end());
  Subdivision sub(all);
  (void)sub;
}

// ---------------------------------------------------------------------------
// Canonical forms and symmetries

inline AnnotatedLamination canonical(AnnotatedLamination al) {
  std::sort(al.base.leaves.begin(), al.base.leaves.end());
  std::sort(al.shells.begin(), al.shells.end(), [](auto& x, auto& y) { return x.root < y.root; });
  for (auto& st : al.stars) {
    auto it = std::min_element(st.polygon.begin(), st.polygon.end());
    std::rotate(st.polygon.begin(), it, st.polygon.end());
  }
  std::sort(al.stars.begin(), al.stars.end(), [](auto& x, auto& y) { return x.polygon.front() < y.polygon.front(); });
  return al;
}

inline AnnotatedLamination rotate(const AnnotatedLamination& al, const Rational& t) {
  AnnotatedLamination out;
  out.exceptions = al.exceptions;
  for (auto& c : al.base.leaves) out.base.leaves.push_back(rotate(c, t));
  for (auto& s : al.shells) {
    ShellSpec r{rotate(s.root, t), {}};
    for (auto& c : s.boundary) r.boundary.push_back(rotate(c, t));
    out.shells.push_back(std::move(r));
  }
  for (auto& st : al.stars) {
    StarSpec r;
    for (auto& c : st.polygon) r.polygon.push_back(rotate(c, t));
    out.stars.push_back(std::move(r));
  }
  std::sort(out.base.leaves.begin(), out.base.leaves.end());
  return out;
}

// ---------------------------------------------------------------------------
// Regions

struct RegionReport {
  enum class Kind { Shell, Star, UnannotatedPolygon, ArcGap };

  int face = 0;
  std::vector<std::variant<Chord, Arc>> boundary;  // counterclockwise; empty with full_circle for the whole disc
  bool full_circle = false;
  Kind kind = Kind::ArcGap;
  std::optional<Chord> root;
  int spec = -1;  // shell or star index

  int chord_count() const {
    int n = 0;
    for (auto& b : boundary) n += std::holds_alternative<Chord>(b) ? 1 : 0;
    return n;
  }
  std::vector<Chord> chords() const {
    std::vector<Chord> out;
    for (auto& b : boundary)
      if (auto* c = std::get_if<Chord>(&b)) out.push_back(*c);
    return out;
  }
};

inline const char* kind_name(RegionReport::Kind k) {
  switch (k) {
    case RegionReport::Kind::Shell: return "shell";
    case RegionReport::Kind::Star: return "star";
    case RegionReport::Kind::UnannotatedPolygon: return "unannotated-polygon";
    case RegionReport::Kind::ArcGap: return "arc-gap";
  }
  return "?";
}

namespace detail {

inline void push_arc(std::vector<std::variant<Chord, Arc>>& out, const CirclePoint& x, const CirclePoint& y) {
  if (x != y) out.emplace_back(Arc(x, y));
}

inline RegionReport face_report(const Subdivision& sub, int f) {
  RegionReport r;
  r.face = f;
  if (f == 0) {
    const std::vector<int>& cs = sub.top_chords();
    if (cs.empty()) {
      r.full_circle = true;
      return r;
    }
    r.boundary.reserve(2 * cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Chord& c = sub.chord(cs[i]);
      r.boundary.emplace_back(c);
      detail::push_arc(r.boundary, c.b, sub.chord(cs[(i + 1) % cs.size()]).a);
    }
    return r;
  }
  const std::vector<int>& cs = sub.child_chords(f - 1);
  const Chord& outer = sub.chord(f - 1);
  r.boundary.reserve(2 * cs.size() + 2);
  const CirclePoint* at = &outer.a;
  for (int ci : cs) {
    const Chord& c = sub.chord(ci);
    detail::push_arc(r.boundary, *at, c.a);
    r.boundary.emplace_back(c);
    at = &c.b;
  }
  detail::push_arc(r.boundary, *at, outer.b);
  r.boundary.emplace_back(outer);
  return r;
}

}  // namespace detail

inline std::vector<RegionReport> regions(const FiniteLamination& l) {
  Subdivision sub(l.leaves);
  std::vector<RegionReport> out;
  for (int f = 0; f < sub.face_count(); ++f) {
    RegionReport r = detail::face_report(sub, f);
    r.kind = r.chord_count() >= 3 ? RegionReport::Kind::UnannotatedPolygon : RegionReport::Kind::ArcGap;
    out.push_back(std::move(r));
  }
  return out;
}

// Face whose boundary chord set equals `cs`, or -1.
inline int face_with_chords(const Subdivision& sub, const std::vector<Chord>& cs) {
  if (cs.empty()) return -1;
  int c0 = sub.find_chord(cs.front());
  if (c0 < 0) return -1;
  std::set<Chord> want(cs.begin(), cs.end());
  for (int f : {sub.inner_face(c0), sub.outer_face(c0)}) {
    std::set<Chord> have;
    for (int c : sub.face_chords(f)) have.insert(sub.chord(c));
    if (have == want) return f;
  }
  return -1;
}

inline std::vector<Chord> shell_chords(const ShellSpec& s) {
  std::vector<Chord> cs = s.boundary;
  cs.push_back(s.root);
  return cs;
}

// Regions of leaves and roots, classified by the annotations.
inline std::vector<RegionReport> regions(const AnnotatedLamination& al) {
  validate(al);
  Subdivision sub(chord_system(al));
  std::vector<RegionReport> out;
  std::map<int, std::pair<RegionReport::Kind, int>> claim;
  for (std::size_t i = 0; i < al.shells.size(); ++i) {
    int f = face_with_chords(sub, shell_chords(al.shells[i]));
    if (f >= 0 && !claim.count(f)) claim[f] = {RegionReport::Kind::Shell, static_cast<int>(i)};
  }
  for (std::size_t i = 0; i < al.stars.size(); ++i) {
    int f = face_with_chords(sub, al.stars[i].polygon);
    if (f >= 0 && !claim.count(f)) claim[f] = {RegionReport::Kind::Star, static_cast<int>(i)};
  }
  for (int f = 0; f < sub.face_count(); ++f) {
    RegionReport r = detail::face_report(sub, f);
    auto it = claim.find(f);
    if (it != claim.end()) {
      r.kind = it->second.first;
      r.spec = it->second.second;
      if (r.kind == RegionReport::Kind::Shell) r.root = al.shells[r.spec].root;
    } else {
      r.kind = r.chord_count() >= 3 ? RegionReport::Kind::UnannotatedPolygon : RegionReport::Kind::ArcGap;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Leaves crossed by a transversal chord, in order from t.a to t.b.

inline std::vector<Chord> interval_along(const AnnotatedLamination& al, const Chord& t) {
  std::vector<std::pair<Rational, Chord>> hit;
  for (const Chord& f : al.base.leaves) {
    if (f.has_endpoint(t.a) || f.has_endpoint(t.b))
      fail(ErrorKind::EndpointCollision, "transversal " + t.str() + " shares an endpoint with " + f.str());
    if (!chords_cross(f, t)) continue;
    Arc in = f.inner_arc();
    Rational near = in.contains_open(t.a) ? in.length() : 1 - in.length();
    hit.emplace_back(near, f);
  }
  if (hit.empty()) fail(ErrorKind::EmptyInterval, "transversal " + t.str() + " crosses no leaf");
  std::sort(hit.begin(), hit.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<Chord> out;
  for (auto& h : hit) out.push_back(h.second);
  return out;
}

}  // namespace prelam
