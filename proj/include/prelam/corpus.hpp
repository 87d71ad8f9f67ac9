#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "completion.hpp"
#include "properties.hpp"

namespace prelam {

// Deterministic across platforms: only the raw engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Nested leaves (u+jh, v-jh) inside the counterclockwise arc from u to v,
// the first one next to the chord (u,v); every gap is at most eps.
inline void fill_cap(std::vector<Chord>& out, const CirclePoint& u, const CirclePoint& v, const Rational& eps, int extra = 0) {
  Rational len = ccw_offset(u, v);
  Rational h = len;
  int m = 0;
  while (h > eps / 2) {
    h /= 2;
    ++m;
  }
  for (int i = 0; i < extra; ++i) {
    h /= 2;
    ++m;
  }
  long count = m == 0 ? 0 : (1L << (m - 1)) - 1;
  for (long j = 1; j <= count; ++j) out.emplace_back(rotate(u, h * j), rotate(v, -h * j));
}

inline void check_resolution(const Rational& res) {
  if (!(res > 0) || res > Rational(1, 8)) fail(ErrorKind::DomainError, "resolution must lie in (0, 1/8]");
}

}  // namespace detail

inline AnnotatedLamination gen_prong(int k, const Rational& resolution, std::uint64_t seed = 0) {
  if (k < 3) fail(ErrorKind::DomainError, "a prong needs k >= 3, got " + std::to_string(k));
  detail::check_resolution(resolution);
  AnnotatedLamination al;
  StarSpec star;
  for (int i = 0; i < k; ++i) {
    CirclePoint u(Rational(i, k)), v(Rational(i + 1, k));
    star.polygon.emplace_back(u, v);
    int extra = std::min<int>(static_cast<int>((seed + i) % k), 3);
    detail::fill_cap(al.base.leaves, u, v, resolution, extra);
  }
  al.base.leaves.insert(al.base.leaves.end(), star.polygon.begin(), star.polygon.end());
  al.stars.push_back(std::move(star));
  return canonical(al);
}

inline AnnotatedLamination gen_shell_family(int m, const Rational& resolution, std::uint64_t seed = 0) {
  if (m < 2) fail(ErrorKind::DomainError, "a shell family needs m >= 2, got " + std::to_string(m));
  detail::check_resolution(resolution);
  AnnotatedLamination al;
  std::vector<CirclePoint> w;
  for (int i = 0; i <= m; ++i) w.emplace_back(Rational(i * i, 2 * m * m));
  ShellSpec shell{Chord(w[0], w[m]), {}};
  for (int i = m - 1; i >= 0; --i) {
    shell.boundary.emplace_back(w[i], w[i + 1]);
    detail::fill_cap(al.base.leaves, w[i], w[i + 1], resolution, static_cast<int>((seed + i) % 3));
  }
  detail::fill_cap(al.base.leaves, w[m], w[0], resolution);
  al.base.leaves.insert(al.base.leaves.end(), shell.boundary.begin(), shell.boundary.end());
  al.shells.push_back(std::move(shell));
  return canonical(al);
}

inline AnnotatedLamination gen_trivial(const Rational& resolution, std::uint64_t seed = 0) {
  detail::check_resolution(resolution);
  AnnotatedLamination al;
  CirclePoint u(Rational(0)), v(Rational(1, 2));
  al.base.leaves.emplace_back(u, v);
  detail::fill_cap(al.base.leaves, u, v, resolution, static_cast<int>(seed % 2));
  detail::fill_cap(al.base.leaves, v, u, resolution);
  return canonical(al);
}

// A raw lamination with one square region carrying two virtual sides of equal
// length, and the two completions obtained by choosing either as root.
inline std::tuple<RawAnnotatedLamination, AnnotatedLamination, AnnotatedLamination> gen_regular_two_completions(const Rational& resolution) {
  detail::check_resolution(resolution);
  RawAnnotatedLamination raw;
  std::vector<CirclePoint> q{CirclePoint(Rational(0)), CirclePoint(Rational(1, 4)), CirclePoint(Rational(1, 2)), CirclePoint(Rational(3, 4))};
  Chord v0(q[0], q[1]), v1(q[1], q[2]), l2(q[2], q[3]), l3(q[3], q[0]);
  raw.virtuals = {v0, v1};
  auto& leaves = raw.al.base.leaves;
  leaves = {l2, l3};
  detail::fill_cap(leaves, q[0], q[1], resolution);
  detail::fill_cap(leaves, q[1], q[2], resolution);
  detail::fill_cap(leaves, q[2], q[3], resolution);
  // A prong beyond l3 makes the two root choices distinguishable.
  CirclePoint mid(Rational(7, 8));
  Chord s1(q[3], mid), s2(mid, q[0]);
  leaves.push_back(s1);
  leaves.push_back(s2);
  raw.al.stars.push_back(StarSpec{{l3, s1, s2}});
  detail::fill_cap(leaves, q[3], mid, resolution);
  detail::fill_cap(leaves, mid, q[0], resolution);
  std::sort(leaves.begin(), leaves.end());

  AnnotatedLamination c1 = complete(raw);
  AnnotatedLamination c2 = raw.al;
  c2.base.leaves.push_back(v0);
  ShellSpec s{v1, {l3, v0, l2}};
  s.boundary = clockwise_sorted(shell_side(s), s.boundary);
  c2.shells.push_back(s);
  c2 = canonical(c2);
  return {raw, c1, c2};
}

// ---------------------------------------------------------------------------
// Random raw laminations: a tree of polygons glued along leaves, each
// polygon either a star or a region with virtual sides, every free cap
// filled at the resolution.

namespace detail {

struct RawBuilder {
  Rng rng;
  Rational eps;
  int max_depth;
  RawAnnotatedLamination raw;
  std::vector<std::vector<Chord>> shell_regions;  // virtual sides per non-star polygon

  RawBuilder(std::uint64_t seed, Rational e, int depth) : rng(seed), eps(std::move(e)), max_depth(depth) {}

  std::vector<CirclePoint> interior_points(const CirclePoint& u, const CirclePoint& v, int n) {
    Rational len = ccw_offset(u, v);
    const int grid = 16;
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < n) picks.insert(1 + static_cast<int>(rng.below(grid - 1)));
    std::vector<CirclePoint> out;
    for (int p : picks) out.push_back(rotate(u, len * p / grid));
    return out;
  }

  // Polygon on vertices (counterclockwise); `parent` is the index of the
  // edge shared with the enclosing polygon, or -1.
  void polygon(const std::vector<CirclePoint>& vs, int parent, bool parent_is_star, int depth) {
    const int k = static_cast<int>(vs.size());
    std::vector<Chord> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(vs[i], vs[(i + 1) % k]);
    StarSpec as_star{edges};
    // Vertex i must be shared by edges i and i+1: rotate so edge 0 ends at vs[1].
    std::rotate(as_star.polygon.begin(), as_star.polygon.begin() + (k - 1), as_star.polygon.end());
    bool star = !parent_is_star && rng.chance(35) && !star_violates(as_star, Rational(0));
    int root = -1;
    if (!star) {
      for (int i = 0; i < k; ++i) {
        if (i == parent) continue;
        if (root < 0 || minor_arc_gap(edges[i]) > minor_arc_gap(edges[root]) ||
            (minor_arc_gap(edges[i]) == minor_arc_gap(edges[root]) && edges[i] < edges[root]))
          root = i;
      }
    }
    std::vector<Chord> virt;
    for (int i = 0; i < k; ++i) {
      if (i == parent) continue;
      bool is_virtual = i == root || (!star && minor_arc_gap(edges[i]) < minor_arc_gap(edges[root]) && rng.chance(25));
      if (is_virtual) {
        raw.virtuals.push_back(edges[i]);
        virt.push_back(edges[i]);
      } else {
        raw.al.base.leaves.push_back(edges[i]);
      }
      // Cap beyond edge i: counterclockwise from vs[i] to vs[i+1].
      const CirclePoint &u = vs[i], &v = vs[(i + 1) % k];
      bool recurse = !is_virtual && depth < max_depth && ccw_offset(u, v) > eps * 4 && rng.chance(45);
      if (recurse) {
        int n = 1 + static_cast<int>(rng.below(2));
        std::vector<CirclePoint> child{u};
        for (auto& p : interior_points(u, v, n)) child.push_back(p);
        child.push_back(v);
        // In the child, the shared edge runs from the last vertex back to the first.
        polygon(child, static_cast<int>(child.size()) - 1, star, depth + 1);
      } else {
        fill_cap(raw.al.base.leaves, u, v, eps, static_cast<int>(rng.below(2)));
      }
    }
    if (star) {
      raw.al.stars.push_back(as_star);
    } else {
      shell_regions.push_back(virt);
    }
  }
};

}  // namespace detail

struct RandomRaw {
  RawAnnotatedLamination raw;
  Rational eps;
  Rational delta;
  bool counterexample = false;
};

inline RandomRaw gen_random_raw(std::uint64_t seed, const Rational& resolution, bool counterexample = false) {
  detail::check_resolution(resolution);
  auto build = [&](std::uint64_t attempt) {
    detail::RawBuilder b(seed * 7919 + 17 + attempt * 104729, resolution, 3);
    int k = 3 + static_cast<int>(b.rng.below(3));
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < k) picks.insert(static_cast<int>(b.rng.below(16)));
    std::vector<CirclePoint> vs;
    for (int p : picks) vs.emplace_back(Rational(p, 16));
    b.polygon(vs, -1, false, 0);
    return b;
  };
  std::uint64_t attempt = 0;
  detail::RawBuilder b = build(attempt);
  while (b.shell_regions.empty()) b = build(++attempt);
  RandomRaw out{b.raw, resolution, resolution, counterexample};
  if (counterexample) {
    // Turn every virtual side of one region into a leaf.
    std::vector<int> candidates;
    for (std::size_t i = 0; i < b.shell_regions.size(); ++i)
      if (!b.shell_regions[i].empty()) candidates.push_back(static_cast<int>(i));
    const auto& victim = b.shell_regions[candidates[b.rng.below(candidates.size())]];
    for (auto& c : victim) {
      out.raw.virtuals.erase(std::find(out.raw.virtuals.begin(), out.raw.virtuals.end(), c));
      out.raw.al.base.leaves.push_back(c);
    }
  }
  std::sort(out.raw.al.base.leaves.begin(), out.raw.al.base.leaves.end());
  std::sort(out.raw.virtuals.begin(), out.raw.virtuals.end());
  return out;
}

// ---------------------------------------------------------------------------
// Mutators

enum class MutationKind { ShareStarEdge, ShrinkRoot, BreakOrder, DropAnnotation };

inline const char* mutation_name(MutationKind k) {
  switch (k) {
    case MutationKind::ShareStarEdge: return "share-star-edge";
    case MutationKind::ShrinkRoot: return "shrink-root";
    case MutationKind::BreakOrder: return "break-order";
    case MutationKind::DropAnnotation: return "drop-annotation";
  }
  return "?";
}

inline MutationKind parse_mutation(const std::string& s) {
  for (auto k : {MutationKind::ShareStarEdge, MutationKind::ShrinkRoot, MutationKind::BreakOrder, MutationKind::DropAnnotation})
    if (s == mutation_name(k)) return k;
  fail(ErrorKind::Parse, "unknown mutation '" + s + "'");
}

// The verdict each mutation is meant to flip.
inline const char* targeted_property(MutationKind k) {
  switch (k) {
    case MutationKind::ShareStarEdge: return property::star_uniqueness;
    case MutationKind::ShrinkRoot: return property::no_bad_accumulation;
    case MutationKind::BreakOrder: return property::coverage;
    case MutationKind::DropAnnotation: return property::coverage;
  }
  return "";
}

namespace detail {

inline Rational max_endpoint_gap(const AnnotatedLamination& al) {
  auto pts = leaf_endpoints(al);
  Rational g = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) g = std::max(g, pts.size() == 1 ? Rational(1) : ccw_offset(pts[i], pts[(i + 1) % pts.size()]));
  return g;
}

inline AnnotatedLamination share_star_edge(const AnnotatedLamination& al) {
  Subdivision sub(chord_system(al));
  std::set<Chord> annotated;
  for (auto& s : al.shells) {
    annotated.insert(s.root);
    annotated.insert(s.boundary.begin(), s.boundary.end());
  }
  for (auto& st : al.stars) annotated.insert(st.polygon.begin(), st.polygon.end());
  Rational eps = max_endpoint_gap(al);
  for (std::size_t si = 0; si < al.stars.size(); ++si) {
    const StarSpec& st = al.stars[si];
    for (std::size_t i = 0; i < st.polygon.size(); ++i) {
      const Chord& e = st.polygon[i];
      // The cap of e is the arc of its endpoints holding no other star vertex.
      CirclePoint p = e.a, q = e.b;
      if (e.inner_arc().contains_open(star_vertex(st, (i + 1) % st.polygon.size()))) std::swap(p, q);
      Arc cap(p, q);
      bool free = true;
      std::vector<Chord> kept;
      for (auto& c : al.base.leaves) {
        bool inside = c != e && chord_in_closed_arc(c, p, q);
        if (inside && annotated.count(c)) free = false;
        if (!inside) kept.push_back(c);
      }
      for (auto& s : al.shells)
        if (chord_in_closed_arc(s.root, p, q)) free = false;
      if (!free || cap.length() <= eps) continue;
      CirclePoint w = rotate(p, cap.length() / 2);
      AnnotatedLamination out = al;
      out.base.leaves = kept;
      Chord e1(p, w), e2(w, q);
      out.base.leaves.push_back(e1);
      out.base.leaves.push_back(e2);
      fill_cap(out.base.leaves, p, w, eps);
      fill_cap(out.base.leaves, w, q, eps);
      out.stars.push_back(StarSpec{{e, e1, e2}});
      return canonical(out);
    }
  }
  fail(ErrorKind::NotApplicable, "no star edge with a free cap");
}

inline AnnotatedLamination shrink_root(const AnnotatedLamination& al, const Rational& delta) {
  Subdivision sub(chord_system(al));
  std::set<Chord> star_edges;
  for (auto& st : al.stars) star_edges.insert(st.polygon.begin(), st.polygon.end());
  std::map<Chord, int> shell_count;
  for (auto& s : al.shells)
    for (auto& c : s.boundary) shell_count[c]++;
  for (std::size_t si = 0; si < al.shells.size(); ++si) {
    const ShellSpec& s = al.shells[si];
    std::vector<Chord> order = s.boundary;
    std::sort(order.begin(), order.end(), [](auto& x, auto& y) {
      Rational gx = minor_arc_gap(x), gy = minor_arc_gap(y);
      return gx < gy || (gx == gy && x < y);
    });
    int face = face_with_chords(sub, shell_chords(s));
    if (face < 0) continue;
    for (const Chord& b : order) {
      if (star_edges.count(b) || shell_count[b] > 1) continue;
      int bc = sub.find_chord(b);
      if (sub.face_size(sub.other_face(bc, face)) >= 3) continue;
      ShellSpec t{b, {}};
      for (auto& c : s.boundary)
        if (c != b) t.boundary.push_back(c);
      t.boundary.push_back(s.root);
      t.boundary = clockwise_sorted(shell_side(t), t.boundary);
      if (!shell_violates(t, delta)) continue;
      AnnotatedLamination out = al;
      out.shells[si] = t;
      out.base.leaves.erase(std::find(out.base.leaves.begin(), out.base.leaves.end(), b));
      out.base.leaves.push_back(s.root);
      return canonical(out);
    }
  }
  fail(ErrorKind::NotApplicable, "no shell whose root can be shrunk");
}

inline AnnotatedLamination break_order(const AnnotatedLamination& al) {
  for (std::size_t si = 0; si < al.shells.size(); ++si) {
    AnnotatedLamination out = al;
    std::swap(out.shells[si].boundary[0], out.shells[si].boundary[1]);
    return out;
  }
  fail(ErrorKind::NotApplicable, "no shell to reorder");
}

inline AnnotatedLamination drop_annotation(const AnnotatedLamination& al) {
  if (!al.stars.empty()) {
    AnnotatedLamination out = al;
    out.stars.erase(out.stars.begin());
    return out;
  }
  for (std::size_t si = 0; si < al.shells.size(); ++si) {
    AnnotatedLamination out = al;
    out.shells.erase(out.shells.begin() + static_cast<long>(si));
    Subdivision sub(chord_system(out));
    int f = sub.face_toward(sub.find_chord(al.shells[si].boundary.front()), al.shells[si].root.a == al.shells[si].boundary.front().a ||
                                                                                 al.shells[si].root.a == al.shells[si].boundary.front().b
                                                                             ? al.shells[si].root.b
                                                                             : al.shells[si].root.a);
    if (sub.face_size(f) >= 3) return out;
  }
  fail(ErrorKind::NotApplicable, "no annotation whose removal leaves a polygon region");
}

}  // namespace detail

inline AnnotatedLamination mutate(const AnnotatedLamination& al, MutationKind kind, const Rational& delta = Rational(0)) {
  validate(al);
  switch (kind) {
    case MutationKind::ShareStarEdge: return detail::share_star_edge(al);
    case MutationKind::ShrinkRoot: return detail::shrink_root(al, delta);
    case MutationKind::BreakOrder: return detail::break_order(al);
    case MutationKind::DropAnnotation: return detail::drop_annotation(al);
  }
  fail(ErrorKind::NotApplicable, "unknown mutation");
}

}  // namespace prelam
