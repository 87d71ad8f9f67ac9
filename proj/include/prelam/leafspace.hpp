#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lamination.hpp"
#include "planar.hpp"

namespace prelam {

struct PlainLeaf {
  Chord chord;
  friend bool operator==(const PlainLeaf& x, const PlainLeaf& y) { return x.chord == y.chord; }
};

// Separatrix i of a star: edges i and i+1 and their common vertex.
struct Separatrix {
  int star = 0;
  int index = 0;
  friend bool operator==(const Separatrix& x, const Separatrix& y) { return x.star == y.star && x.index == y.index; }
};

using LStarLeaf = std::variant<PlainLeaf, Separatrix>;

inline std::string leaf_label(const LStarLeaf& x) {
  if (auto* p = std::get_if<PlainLeaf>(&x)) return "l:" + p->chord.a.str() + ":" + p->chord.b.str();
  auto& s = std::get<Separatrix>(x);
  return "s:" + std::to_string(s.star) + ":" + std::to_string(s.index);
}

struct BranchRecord {
  int shell = 0;
  std::vector<LStarLeaf> order;
};

struct CyclicRecord {
  int star = 0;
  std::vector<Separatrix> separatrixes;
};

struct LeafSpace {
  PlanarPresentation presentation;
  std::map<std::string, LStarLeaf> leaf_of;
  std::vector<BranchRecord> branches;
  std::vector<CyclicRecord> cyclics;
};

namespace detail {

struct LeafSpaceBuilder {
  const AnnotatedLamination& al;
  std::vector<Chord> chords;
  int nleaves;
  Subdivision sub;
  std::vector<int> face_owner;  // -1 none, else shell i or (nshells + star)
  std::map<Chord, std::pair<int, int>> star_edge;  // chord -> (star, edge index)
  std::set<Chord> root_set;

  explicit LeafSpaceBuilder(const AnnotatedLamination& a)
      : al(a), chords(chord_system(a)), nleaves(static_cast<int>(a.base.leaves.size())), sub(chords) {}

  bool genuine(int f) const { return sub.face_size(f) >= 3; }

  [[noreturn]] void not_shell_star(const std::string& m) const { fail(ErrorKind::NotShellStar, m); }

  void claim_faces() {
    face_owner.assign(sub.face_count(), -1);
    const int ns = static_cast<int>(al.shells.size());
    for (int i = 0; i < ns; ++i) {
      int f = face_with_chords(sub, shell_chords(al.shells[i]));
      if (f < 0) not_shell_star("shell " + std::to_string(i) + " does not bound a region");
      if (face_owner[f] >= 0) not_shell_star("region claimed twice");
      face_owner[f] = i;
      root_set.insert(al.shells[i].root);
      int rc = sub.find_chord(al.shells[i].root);
      if (genuine(sub.other_face(rc, f))) not_shell_star("root " + al.shells[i].root.str() + " bounds a region on both sides");
    }
    for (int t = 0; t < static_cast<int>(al.stars.size()); ++t) {
      int f = face_with_chords(sub, al.stars[t].polygon);
      if (f < 0) not_shell_star("star " + std::to_string(t) + " does not bound a region");
      if (face_owner[f] >= 0) not_shell_star("region claimed twice");
      face_owner[f] = ns + t;
      for (int i = 0; i < static_cast<int>(al.stars[t].polygon.size()); ++i) {
        const Chord& e = al.stars[t].polygon[i];
        if (star_edge.count(e)) not_shell_star("leaf " + e.str() + " bounds two stars");
        star_edge[e] = {t, i};
      }
    }
    for (int f = 0; f < sub.face_count(); ++f)
      if (genuine(f) && face_owner[f] < 0) {
        std::string cs;
        for (int c : sub.face_chords(f)) cs += sub.chord(c).str();
        not_shell_star("region " + cs + " is neither a shell nor a star");
      }
    for (auto& [e, ti] : star_edge) {
      int c = sub.find_chord(e);
      int f = sub.inner_face(c), g = sub.outer_face(c);
      int other = face_owner[f] == ns + ti.first ? g : f;
      if (face_owner[other] >= ns) not_shell_star("leaf " + e.str() + " bounds two stars");
    }
  }

  Separatrix sep(int star, int i) const {
    int k = static_cast<int>(al.stars[star].polygon.size());
    return Separatrix{star, ((i % k) + k) % k};
  }

  LeafSpace build() {
    claim_faces();
    LeafSpace ls;
    PlanarPresentation& p = ls.presentation;
    if (chords.empty()) return ls;
    const int ns = static_cast<int>(al.shells.size());

    // Points.
    for (int c = 0; c < nleaves; ++c)
      if (!star_edge.count(chords[c])) {
        LStarLeaf x = PlainLeaf{chords[c]};
        p.points.push_back(leaf_label(x));
        ls.leaf_of.emplace(p.points.back(), x);
      }
    for (int t = 0; t < static_cast<int>(al.stars.size()); ++t)
      for (int i = 0; i < static_cast<int>(al.stars[t].polygon.size()); ++i) {
        LStarLeaf x = sep(t, i);
        p.points.push_back(leaf_label(x));
        ls.leaf_of.emplace(p.points.back(), x);
      }

    // Chains of caps and strips; a terminal chord seen from face f gets a port.
    std::map<std::pair<int, int>, std::string> port_at;  // (chord, non-genuine face) -> port
    auto regular = [&](int c) { return !genuine(sub.inner_face(c)) && !genuine(sub.outer_face(c)); };
    auto end_slots = [&](int f) {
      std::vector<int> slots;  // chord index, or -1 for an open end
      for (int c : sub.face_chords(f))
        if (!regular(c)) slots.push_back(c);
      if (sub.face_size(f) == 1) slots.push_back(-1);
      return slots;
    };
    std::vector<bool> visited(sub.face_count(), false);
    int port_counter = 0;
    for (int f = 0; f < sub.face_count(); ++f) {
      if (genuine(f) || visited[f]) continue;
      auto slots0 = end_slots(f);
      if (slots0.empty()) continue;
      Edge edge;
      int start_slot = slots0.front();
      int cur = f, prev = -2;
      while (true) {
        visited[cur] = true;
        int next = -1;
        for (int c : sub.face_chords(cur))
          if (regular(c) && c != prev) next = c;
        if (next < 0) break;
        edge.samples.push_back(leaf_label(PlainLeaf{chords[next]}));
        prev = next;
        cur = sub.other_face(next, cur);
      }
      auto slots1 = end_slots(cur);
      if (cur == f) slots1.erase(slots1.begin());
      int end_slot = slots1.front();
      int e = static_cast<int>(p.edges.size());
      for (auto [end, slot, face] : {std::tuple{0, start_slot, f}, std::tuple{1, end_slot, cur}}) {
        if (slot < 0) continue;
        std::string name = "t" + std::to_string(port_counter++);
        edge.ports[end] = name;
        port_at[{slot, face}] = name;
      }
      (void)e;
      p.edges.push_back(std::move(edge));
    }
    auto port_of = [&](int c, int genuine_face) -> Port {
      int f = sub.other_face(c, genuine_face);
      if (genuine(f)) return std::nullopt;
      return port_at.at({c, f});
    };

    // Shell switches.
    for (int i = 0; i < ns; ++i) {
      const ShellSpec& s = al.shells[i];
      int face = face_with_chords(sub, shell_chords(s));
      Switch sw;
      sw.trunk = *port_of(sub.find_chord(s.root), face);
      BranchRecord rec{i, {}};
      for (const Chord& b : clockwise_sorted(shell_side(s), s.boundary)) {
        auto it = star_edge.find(b);
        if (it != star_edge.end()) {
          auto [t, j] = it->second;
          for (Separatrix x : {sep(t, j - 1), sep(t, j)}) {
            sw.members.push_back({leaf_label(x), std::nullopt});
            rec.order.push_back(x);
          }
        } else {
          sw.members.push_back({leaf_label(PlainLeaf{b}), port_of(sub.find_chord(b), face)});
          rec.order.push_back(PlainLeaf{b});
        }
      }
      p.switches.push_back(std::move(sw));
      ls.branches.push_back(std::move(rec));
    }
    // Star edges facing a cap or strip, and the cyclic branchings.
    for (int t = 0; t < static_cast<int>(al.stars.size()); ++t) {
      const StarSpec& st = al.stars[t];
      int face = face_with_chords(sub, st.polygon);
      Cyclic cy;
      CyclicRecord rec{t, {}};
      for (int j = 0; j < static_cast<int>(st.polygon.size()); ++j) {
        cy.points.push_back(leaf_label(sep(t, j)));
        rec.separatrixes.push_back(sep(t, j));
        Port trunk = port_of(sub.find_chord(st.polygon[j]), face);
        if (!trunk) continue;
        p.switches.push_back({*trunk, {{leaf_label(sep(t, j - 1)), std::nullopt}, {leaf_label(sep(t, j)), std::nullopt}}});
      }
      p.cyclics.push_back(std::move(cy));
      ls.cyclics.push_back(std::move(rec));
    }
    p = coherently_oriented(std::move(p));
    return ls;
  }
};

}  // namespace detail

inline LeafSpace build_leaf_space(const AnnotatedLamination& al) {
  validate(al);
  return detail::LeafSpaceBuilder(al).build();
}

inline int branch_compare(const AnnotatedLamination& al, int shell, const LStarLeaf& x, const LStarLeaf& y) {
  validate(al);
  if (shell < 0 || shell >= static_cast<int>(al.shells.size())) fail(ErrorKind::NotOnShell, "no shell " + std::to_string(shell));
  std::set<Chord> star_edges;
  std::map<Chord, std::pair<int, int>> where;
  for (int t = 0; t < static_cast<int>(al.stars.size()); ++t)
    for (int i = 0; i < static_cast<int>(al.stars[t].polygon.size()); ++i) where[al.stars[t].polygon[i]] = {t, i};
  std::vector<std::string> order;
  const ShellSpec& s = al.shells[shell];
  for (const Chord& b : clockwise_sorted(shell_side(s), s.boundary)) {
    auto it = where.find(b);
    if (it == where.end()) {
      order.push_back(leaf_label(PlainLeaf{b}));
      continue;
    }
    auto [t, j] = it->second;
    int k = static_cast<int>(al.stars[t].polygon.size());
    order.push_back(leaf_label(Separatrix{t, (j - 1 + k) % k}));
    order.push_back(leaf_label(Separatrix{t, j}));
  }
  auto pos = [&](const LStarLeaf& z) {
    auto it = std::find(order.begin(), order.end(), leaf_label(z));
    if (it == order.end()) fail(ErrorKind::NotOnShell, leaf_label(z) + " does not bound shell " + std::to_string(shell));
    return it - order.begin();
  };
  auto px = pos(x), py = pos(y);
  return px < py ? -1 : (px > py ? 1 : 0);
}

// Endpoint map induced by an isomorphism of leaf spaces.
inline std::map<CirclePoint, CirclePoint> induced_circle_map(const PresentationIsomorphism& iso, const AnnotatedLamination& l1,
                                                             const AnnotatedLamination& l2) {
  LeafSpace s1 = build_leaf_space(l1), s2 = build_leaf_space(l2);
  auto not_monotone = [](const std::string& m) { fail(ErrorKind::NotMonotone, m); };
  std::vector<std::pair<Chord, Chord>> plain;
  std::vector<std::pair<CirclePoint, CirclePoint>> vertices;
  for (auto& [x, y] : iso.points) {
    auto ix = s1.leaf_of.find(x);
    auto iy = s2.leaf_of.find(y);
    if (ix == s1.leaf_of.end() || iy == s2.leaf_of.end()) not_monotone("isomorphism mentions unknown point " + x + " -> " + y);
    if (ix->second.index() != iy->second.index()) not_monotone(x + " and " + y + " are not of the same kind");
    if (auto* p = std::get_if<PlainLeaf>(&ix->second)) {
      plain.emplace_back(p->chord, std::get<PlainLeaf>(iy->second).chord);
    } else {
      auto& a = std::get<Separatrix>(ix->second);
      auto& b = std::get<Separatrix>(iy->second);
      vertices.emplace_back(star_vertex(l1.stars[a.star], a.index), star_vertex(l2.stars[b.star], b.index));
    }
  }
  std::map<CirclePoint, CirclePoint> out;
  auto put = [&](const CirclePoint& a, const CirclePoint& b) {
    auto [it, fresh] = out.emplace(a, b);
    if (!fresh && it->second != b) not_monotone(a.str() + " would map to both " + it->second.str() + " and " + b.str());
  };
  for (auto& [v, w] : vertices) put(v, w);
  for (auto& [c1, c2] : plain) {
    int same = 0, opposite = 0;
    auto vote = [&](bool in1, bool in2) { (in1 == in2 ? same : opposite)++; };
    for (auto& [d1, d2] : plain) {
      if (d1 == c1) continue;
      bool in1 = chord_in_closed_arc(d1, c1.a, c1.b), in2 = chord_in_closed_arc(d2, c2.a, c2.b);
      vote(in1, in2);
    }
    for (auto& [v, w] : vertices) {
      if (c1.has_endpoint(v) || c2.has_endpoint(w)) continue;
      vote(c1.inner_arc().contains_open(v), c2.inner_arc().contains_open(w));
    }
    if (same > 0 && opposite > 0) not_monotone("no orientation preserving pairing for " + c1.str());
    if (opposite > 0) {
      put(c1.a, c2.b);
      put(c1.b, c2.a);
    } else {
      put(c1.a, c2.a);
      put(c1.b, c2.b);
    }
  }
  std::set<CirclePoint> images;
  for (auto& [a, b] : out)
    if (!images.insert(b).second) not_monotone("two endpoints map to " + b.str());
  if (out.size() >= 2) {
    Rational turn = 0;
    std::vector<CirclePoint> img;
    for (auto& [a, b] : out) img.push_back(b);
    for (std::size_t i = 0; i < img.size(); ++i) turn += ccw_offset(img[i], img[(i + 1) % img.size()]);
    if (turn != 1) not_monotone("endpoint map is not cyclically monotone");
  }
  return out;
}

}  // namespace prelam
