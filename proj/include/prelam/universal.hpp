#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar.hpp"
#include "rational.hpp"

namespace prelam {

// A point of the model: a rational position on a line.
struct ModelPoint {
  int line = -1;
  Rational pos;
  friend bool operator==(const ModelPoint& x, const ModelPoint& y) { return x.line == y.line && x.pos == y.pos; }
  friend bool operator<(const ModelPoint& x, const ModelPoint& y) { return x.line < y.line || (x.line == y.line && x.pos < y.pos); }
};

inline std::string address(const ModelPoint& p) { return "L" + std::to_string(p.line) + "/p" + to_string(p.pos); }

struct ModelSlot {
  ModelPoint point;
  int side = 1;  // side of the point, along its own line, shared with the other slots
};

// Branching B((line,pos), side): the home point sits at slot 1/2.
struct ModelBranching {
  ModelPoint home;
  int side = 1;
  std::map<Rational, ModelSlot> slots;
  int cyclic = -1;
  int chart = -1;
};

struct ModelCyclic {
  std::vector<ModelPoint> points;
  std::vector<int> charts;  // branching holding points j and j+1
  std::string side;
};

class UniversalModel {
 public:
  int new_line() {
    log_.push_back(json{{"op", "line"}, {"id", lines_}});
    return lines_++;
  }

  int new_branching(const ModelPoint& home, int side) {
    int id = static_cast<int>(branchings_.size());
    ModelBranching b;
    b.home = home;
    b.side = side;
    b.slots.emplace(Rational(1, 2), ModelSlot{home, side});
    branchings_.push_back(std::move(b));
    log_.push_back(json{{"op", "branching"}, {"id", id}, {"home", address(home)}, {"side", side}});
    return id;
  }

  // Label strictly between lo and hi, next to lo (or to hi when lo is
  // absent); nothing is materialized.
  Rational fresh_label(int b, const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    const auto& br = branching(b);
    if (lo && hi && !(*lo < *hi)) fail(ErrorKind::BadBounds, "lower bound " + to_string(*lo) + " is not below " + to_string(*hi));
    std::optional<Rational> a = lo, z = hi;
    if (a) {
      auto it = br.slots.upper_bound(*a);
      if (it != br.slots.end() && (!z || it->first < *z)) z = it->first;
    } else if (z) {
      auto it = br.slots.lower_bound(*z);
      if (it != br.slots.begin()) a = std::prev(it)->first;
    } else if (!br.slots.empty()) {
      a = br.slots.rbegin()->first;
    }
    return a && z ? (*a + *z) / 2 : a ? *a + 1 : z ? *z - 1 : Rational(1, 2);
  }

  // Materializes a fresh slot, holding a point on a fresh line.
  Rational insert_between(int b, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    Rational label = fresh_label(b, lo, hi);
    fill(b, label, ModelSlot{ModelPoint{new_line(), Rational(0)}, branching(b).side});
    return label;
  }

  void fill(int b, const Rational& label, const ModelSlot& s) {
    auto& br = branching(b);
    if (!br.slots.emplace(label, s).second) throw std::logic_error("slot filled twice");
    log_.push_back(json{{"op", "slot"}, {"branching", b}, {"label", to_string(label)}, {"point", address(s.point)}});
  }

  std::string slot_address(int b, const Rational& label) const {
    if (!branching(b).slots.count(label)) fail(ErrorKind::BadBounds, "no slot " + to_string(label) + " in branching " + std::to_string(b));
    return "B" + std::to_string(b) + "/s" + to_string(label);
  }

  int new_cyclic(ModelCyclic c) {
    int id = static_cast<int>(cyclics_.size());
    for (std::size_t j = 0; j < c.charts.size(); ++j) {
      branchings_[c.charts[j]].cyclic = id;
      branchings_[c.charts[j]].chart = static_cast<int>(j);
    }
    log_.push_back(json{{"op", "cyclic"}, {"id", id}, {"degree", c.points.size()}, {"side", c.side}});
    cyclics_.push_back(std::move(c));
    return id;
  }

  ModelBranching& branching(int b) {
    if (b < 0 || b >= static_cast<int>(branchings_.size())) fail(ErrorKind::BadBounds, "no branching " + std::to_string(b));
    return branchings_[b];
  }
  const ModelBranching& branching(int b) const {
    if (b < 0 || b >= static_cast<int>(branchings_.size())) fail(ErrorKind::BadBounds, "no branching " + std::to_string(b));
    return branchings_[b];
  }
  const std::vector<ModelBranching>& branchings() const { return branchings_; }
  const std::vector<ModelCyclic>& cyclics() const { return cyclics_; }
  int line_count() const { return lines_; }
  const json& log() const { return log_; }

 private:
  int lines_ = 0;
  std::vector<ModelBranching> branchings_;
  std::vector<ModelCyclic> cyclics_;
  json log_ = json::array();
};

// ---------------------------------------------------------------------------
// Embeddings

struct EdgeImage {
  int line = -1;
  Rational start;
  int dir = 1;
};

struct EmbeddingMap {
  std::map<std::string, ModelPoint> points;
  std::map<int, EdgeImage> edges;
  std::map<int, int> switches;   // switch -> model branching
  std::map<int, int> cyclics;    // cyclic -> model cyclic
  std::map<int, int> cyclic_offset;  // presentation index j sits at model index j + offset

  std::map<std::string, std::string> addresses() const {
    std::map<std::string, std::string> out;
    for (auto& [x, p] : points) out[x] = address(p);
    return out;
  }
};

inline json to_json(const EmbeddingMap& m) {
  json pts = json::object();
  for (auto& [x, p] : m.points) pts[x] = address(p);
  json edges = json::object();
  for (auto& [e, im] : m.edges) edges[std::to_string(e)] = json{{"line", im.line}, {"start", to_string(im.start)}, {"dir", im.dir}};
  json sws = json::object();
  for (auto& [s, b] : m.switches) sws[std::to_string(s)] = b;
  return json{{"points", pts}, {"edges", edges}, {"switches", sws}};
}

namespace detail {

class Embedder {
 public:
  Embedder(const PlanarPresentation& p, UniversalModel& m, EmbeddingMap prior)
      : p_(p), m_(m), ix_(index_presentation(p)), map_(std::move(prior)) {
    for (int c = 0; c < static_cast<int>(p_.cyclics.size()); ++c) {
      const Cyclic& cy = p_.cyclics[c];
      for (std::size_t j = 0; j < cy.points.size(); ++j) {
        int x = ix_.point(cy.points[j]), y = ix_.point(cy.points[(j + 1) % cy.points.size()]);
        for (auto [s, mi] : ix_.point_switches[x])
          for (auto [t, ni] : ix_.point_switches[y])
            if (s == t) chart_of_[s] = {c, static_cast<int>(j)};
      }
    }
  }

  EmbeddingMap run() {
    if (p_.edges.empty()) return map_;
    if (map_.edges.empty()) place_edge(0, m_.new_line(), Rational(0), 1);
    // Extensions: re-attach every end of a placed edge.
    for (auto& [e, im] : std::map<int, EdgeImage>(map_.edges)) {
      (void)im;
      attach_ends(e);
    }
    while (!queue_.empty()) {
      auto task = queue_.front();
      queue_.pop_front();
      task();
    }
    return map_;
  }

 private:
  const PlanarPresentation& p_;
  UniversalModel& m_;
  PresentationIndex ix_;
  EmbeddingMap map_;
  std::map<int, std::pair<int, int>> chart_of_;  // switch -> (cyclic, chart)
  std::deque<std::function<void()>> queue_;

  static void defect(const std::string& m) { throw std::logic_error("embedding defect: " + m); }

  Rational end_pos(int e, int end) const {
    const EdgeImage& im = map_.edges.at(e);
    if (end == 0) return im.start;
    return im.start + im.dir * static_cast<long>(p_.edges[e].samples.size() + 1);
  }
  int interior_side(int e, int end) const { return end == 0 ? map_.edges.at(e).dir : -map_.edges.at(e).dir; }

  void place_edge(int e, int line, const Rational& start, int dir) {
    if (map_.edges.count(e)) defect("edge placed twice");
    map_.edges[e] = EdgeImage{line, start, dir};
    const auto& samples = p_.edges[e].samples;
    for (std::size_t i = 0; i < samples.size(); ++i) map_.points[samples[i]] = ModelPoint{line, start + dir * static_cast<long>(i + 1)};
    queue_.push_back([this, e] { attach_ends(e); });
  }

  // Places edge e so that its given end sits at `at` with its interior on `side`.
  void place_edge_at(int e, int end, const ModelPoint& at, int side) {
    if (map_.edges.count(e)) {
      if (!(ModelPoint{map_.edges[e].line, end_pos(e, end)} == at) || interior_side(e, end) != side) defect("edge end mismatch");
      return;
    }
    long n1 = static_cast<long>(p_.edges[e].samples.size() + 1);
    if (end == 0) place_edge(e, at.line, at.pos, side);
    else place_edge(e, at.line, at.pos + side * n1, -side);
  }

  void attach_ends(int e) {
    for (int end = 0; end < 2; ++end) {
      if (!p_.edges[e].ports[end]) continue;
      Attachment a = ix_.end_attachment.at({e, end});
      if (map_.switches.count(a.sw)) continue;
      ModelPoint at{map_.edges[e].line, end_pos(e, end)};
      int side = interior_side(e, end);
      if (a.member < 0) reach_from_trunk(a.sw, at, side);
      else reach_from_member(a.sw, a.member, at, -side);
    }
  }

  ModelSlot fresh_slot(int side) { return ModelSlot{ModelPoint{m_.new_line(), Rational(0)}, side}; }

  void map_point(const std::string& name, const ModelPoint& at) {
    auto it = map_.points.find(name);
    if (it != map_.points.end() && !(it->second == at)) defect("point " + name + " mapped twice");
    map_.points[name] = at;
  }

  // Model cyclic for presentation cyclic c, hosted at branching b, which holds
  // chart j at the given pair of labels.
  void make_cyclic(int c, int j, int b, const Rational& first, const Rational& second) {
    const Cyclic& cy = p_.cyclics[c];
    const int k = static_cast<int>(cy.points.size());
    ModelCyclic mc;
    mc.points.resize(k);
    mc.charts.assign(k, -1);
    mc.side.resize(k);
    // Model indices coincide with presentation indices.
    const ModelSlot host_first = m_.branching(b).slots.at(first), host_second = m_.branching(b).slots.at(second);
    mc.points[j] = host_first.point;
    mc.points[(j + 1) % k] = host_second.point;
    mc.charts[j] = b;
    int prev_side = host_second.side;
    for (int step = 1; step < k; ++step) {
      int ch = (j + step) % k;
      int tau = m_.new_line();
      int v = m_.new_branching(ModelPoint{tau, Rational(0)}, 1);
      Rational l1 = m_.fresh_label(v, Rational(1, 2), std::nullopt);
      m_.fill(v, l1, ModelSlot{mc.points[ch], -prev_side});
      Rational l2 = m_.fresh_label(v, l1, std::nullopt);
      ModelSlot next;
      if (step == k - 1) next = ModelSlot{mc.points[j], -host_first.side};
      else next = fresh_slot(1);
      if (step < k - 1) mc.points[(ch + 1) % k] = next.point;
      m_.fill(v, l2, next);
      mc.charts[ch] = v;
      prev_side = next.side;
    }
    for (int i = 0; i < k; ++i) mc.side[i] = side_of(cy, i);
    int id = m_.new_cyclic(std::move(mc));
    map_.cyclics[c] = id;
    for (int i = 0; i < k; ++i) map_point(cy.points[i], m_.cyclics()[id].points[i]);
  }

  // Fills the members of switch s into branching b around the already filled
  // member `fixed` (at label `fixed_label`); -1 when only the home is filled.
  void fill_members(int s, int b, int fixed, const Rational& fixed_label, int side) {
    const auto& ms = p_.switches[s].members;
    std::vector<Rational> labels(ms.size());
    std::optional<std::pair<int, int>> chart;
    if (auto it = chart_of_.find(s); it != chart_of_.end()) chart = it->second;
    auto is_pair = [&](int mi) {
      if (!chart) return false;
      const Cyclic& cy = p_.cyclics[chart->first];
      return ms[mi].point == cy.points[chart->second];
    };
    auto slot_for = [&](int mi) -> ModelSlot {
      auto it = map_.points.find(ms[mi].point);
      if (it != map_.points.end()) return ModelSlot{it->second, side};
      return fresh_slot(side);
    };
    if (fixed >= 0) labels[fixed] = fixed_label;
    Rational hi_bound = fixed >= 0 ? fixed_label : Rational(1, 2);
    int start_up = fixed >= 0 ? fixed + 1 : 0;
    for (int mi = fixed - 1; mi >= 0; --mi) {
      labels[mi] = m_.fresh_label(b, std::nullopt, mi + 1 == fixed ? std::optional<Rational>(hi_bound) : std::optional<Rational>(labels[mi + 1]));
      m_.fill(b, labels[mi], slot_for(mi));
    }
    Rational lo = fixed >= 0 ? fixed_label : Rational(1, 2);
    for (int mi = start_up; mi < static_cast<int>(ms.size()); ++mi) {
      labels[mi] = m_.fresh_label(b, lo, std::nullopt);
      m_.fill(b, labels[mi], slot_for(mi));
      lo = labels[mi];
    }
    for (std::size_t mi = 0; mi < ms.size(); ++mi) map_point(ms[mi].point, m_.branching(b).slots.at(labels[mi]).point);
    if (chart && !map_.cyclics.count(chart->first)) {
      int j = chart->second;
      int mi = 0;
      while (!is_pair(mi)) ++mi;
      make_cyclic(chart->first, j, b, labels[mi], labels[mi + 1]);
    }
  }

  void continue_members(int s, int b) {
    const auto& ms = p_.switches[s].members;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      const ModelPoint at = map_.points.at(ms[mi].point);
      int side = 0;
      for (auto& [label, slot] : m_.branching(b).slots)
        if (slot.point == at) side = slot.side;
      if (ms[mi].port) {
        EdgeEnd pe = ix_.port_end.at(*ms[mi].port);
        place_edge_at(pe.edge, pe.end, at, -side);
        continue;
      }
      int x = ix_.point(ms[mi].point);
      for (auto [t, ti] : ix_.point_switches[x])
        if (t != s && !map_.switches.count(t)) {
          int tt = t, tti = ti;
          queue_.push_back([this, tt, tti, at, side] {
            if (!map_.switches.count(tt)) reach_from_member(tt, tti, at, -side);
          });
        }
    }
  }

  void place_trunk(int s, int b) {
    EdgeEnd te = ix_.trunk_end[s];
    const auto& br = m_.branching(b);
    place_edge_at(te.edge, te.end, br.home, br.side);
  }

  // Branching already materialized for chart j of a model cyclic.
  std::optional<int> existing_chart(int s) const {
    auto it = chart_of_.find(s);
    if (it == chart_of_.end()) return std::nullopt;
    auto ci = map_.cyclics.find(it->second.first);
    if (ci == map_.cyclics.end()) return std::nullopt;
    return m_.cyclics()[ci->second].charts[it->second.second];
  }

  void fill_around_chart(int s, int b) {
    // The cyclic pair is in place; other members go below or above it.
    const auto& ms = p_.switches[s].members;
    auto [c, j] = chart_of_.at(s);
    const Cyclic& cy = p_.cyclics[c];
    int first = -1;
    for (int mi = 0; mi < static_cast<int>(ms.size()); ++mi)
      if (ms[mi].point == cy.points[j]) first = mi;
    Rational l1, l2;
    const auto& br = m_.branching(b);
    for (auto& [label, slot] : br.slots) {
      if (slot.point == map_.points.at(ms[first].point)) l1 = label;
      if (slot.point == map_.points.at(ms[first + 1].point)) l2 = label;
    }
    const int side = br.side;
    std::optional<Rational> hi = l1;
    for (int mi = first - 1; mi >= 0; --mi) {
      Rational l = m_.fresh_label(b, std::nullopt, hi);
      m_.fill(b, l, fresh_slot(side));
      map_point(ms[mi].point, m_.branching(b).slots.at(l).point);
      hi = l;
    }
    Rational lo = l2;
    for (int mi = first + 2; mi < static_cast<int>(ms.size()); ++mi) {
      Rational l = m_.fresh_label(b, lo, std::nullopt);
      m_.fill(b, l, fresh_slot(side));
      map_point(ms[mi].point, m_.branching(b).slots.at(l).point);
      lo = l;
    }
  }

  void reach_from_trunk(int s, const ModelPoint& at, int side) {
    if (auto b = existing_chart(s)) {
      map_.switches[s] = *b;
      fill_around_chart(s, *b);
      place_trunk(s, *b);
      continue_members(s, *b);
      return;
    }
    int b = m_.new_branching(at, side);
    map_.switches[s] = b;
    fill_members(s, b, -1, Rational(0), side);
    continue_members(s, b);
  }

  void reach_from_member(int s, int mi, const ModelPoint& at, int side) {
    map_point(p_.switches[s].members[mi].point, at);
    if (auto b = existing_chart(s)) {
      map_.switches[s] = *b;
      fill_around_chart(s, *b);
      place_trunk(s, *b);
      continue_members(s, *b);
      return;
    }
    int b = m_.new_branching(at, side);
    map_.switches[s] = b;
    fill_members(s, b, mi, Rational(1, 2), side);
    place_trunk(s, b);
    continue_members(s, b);
  }
};

}  // namespace detail

inline EmbeddingMap embed(const PlanarPresentation& p, UniversalModel& m, const EmbeddingMap& prior = {}) {
  return detail::Embedder(p, m, prior).run();
}

// ---------------------------------------------------------------------------

struct EmbedVerdict {
  bool pass = true;
  std::vector<std::string> witnesses;  // each starts with its category
  void add(const std::string& w) {
    pass = false;
    witnesses.push_back(w);
  }
};

inline EmbedVerdict verify_embedding(const PlanarPresentation& p, const UniversalModel& m, const EmbeddingMap& map) {
  EmbedVerdict v;
  PresentationIndex ix = index_presentation(p);
  std::map<ModelPoint, std::string> seen;
  for (auto& name : p.points) {
    auto it = map.points.find(name);
    if (it == map.points.end()) {
      v.add("total: point " + name + " is not mapped");
      continue;
    }
    auto [jt, fresh] = seen.emplace(it->second, name);
    if (!fresh) v.add("injective: " + jt->second + " and " + name + " share " + address(it->second));
  }
  if (!v.pass) return v;
  auto edge_end = [&](int e, int end) -> std::optional<std::pair<ModelPoint, int>> {
    auto it = map.edges.find(e);
    if (it == map.edges.end()) return std::nullopt;
    const EdgeImage& im = it->second;
    long n1 = static_cast<long>(p.edges[e].samples.size() + 1);
    if (end == 0) return std::make_pair(ModelPoint{im.line, im.start}, im.dir);
    return std::make_pair(ModelPoint{im.line, im.start + im.dir * n1}, -im.dir);
  };
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    auto it = map.edges.find(e);
    if (it == map.edges.end()) {
      v.add("incidence: edge " + std::to_string(e) + " has no image");
      continue;
    }
    const EdgeImage& im = it->second;
    for (std::size_t i = 0; i < p.edges[e].samples.size(); ++i)
      if (!(map.points.at(p.edges[e].samples[i]) == ModelPoint{im.line, im.start + im.dir * static_cast<long>(i + 1)}))
        v.add("incidence: sample " + p.edges[e].samples[i] + " is off its edge");
  }
  const auto& bs = m.branchings();
  std::map<std::string, std::vector<int>> point_sides;
  for (int s = 0; s < static_cast<int>(p.switches.size()); ++s) {
    auto bi = map.switches.find(s);
    if (bi == map.switches.end() || bi->second < 0 || bi->second >= static_cast<int>(bs.size())) {
      v.add("incidence: switch " + std::to_string(s) + " has no branching");
      continue;
    }
    const ModelBranching& b = bs[bi->second];
    EdgeEnd te = ix.trunk_end[s];
    auto tend = edge_end(te.edge, te.end);
    if (!tend || !(tend->first == b.home) || tend->second != b.side)
      v.add("incidence: trunk of switch " + std::to_string(s) + " does not reach its branching");
    std::vector<Rational> labels;
    for (auto& mem : p.switches[s].members) {
      const ModelPoint& at = map.points.at(mem.point);
      std::optional<std::pair<Rational, ModelSlot>> slot;
      for (auto& [label, sl] : b.slots)
        if (sl.point == at) slot = std::make_pair(label, sl);
      if (!slot) {
        v.add("incidence: " + mem.point + " is not in the branching of switch " + std::to_string(s));
        continue;
      }
      labels.push_back(slot->first);
      point_sides[mem.point].push_back(slot->second.side);
      if (mem.port) {
        EdgeEnd pe = ix.port_end.at(*mem.port);
        auto pend = edge_end(pe.edge, pe.end);
        if (!pend || !(pend->first == at) || pend->second != -slot->second.side)
          v.add("incidence: port edge of " + mem.point + " does not leave it on its free side");
      }
    }
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
      if (!(labels[i] < labels[i + 1])) v.add("order: switch " + std::to_string(s) + " members " + std::to_string(i) + " and " + std::to_string(i + 1) + " are reversed");
  }
  for (auto& [x, sides] : point_sides)
    if (sides.size() == 2 && sides[0] != -sides[1]) v.add("incidence: " + x + " branches twice on the same side");
  const auto& cs = m.cyclics();
  for (int c = 0; c < static_cast<int>(p.cyclics.size()); ++c) {
    const Cyclic& cy = p.cyclics[c];
    const std::size_t k = cy.points.size();
    std::optional<std::pair<int, std::size_t>> found;
    ModelPoint first = map.points.at(cy.points[0]);
    for (int mc = 0; mc < static_cast<int>(cs.size()) && !found; ++mc)
      for (std::size_t off = 0; off < cs[mc].points.size(); ++off)
        if (cs[mc].points[off] == first) found = std::make_pair(mc, off);
    if (!found) {
      v.add("cyclic: cyclic " + std::to_string(c) + " does not land on a model cyclic");
      continue;
    }
    const ModelCyclic& mc = cs[found->first];
    if (mc.points.size() != k) {
      v.add("cyclic: degree mismatch for cyclic " + std::to_string(c));
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = (i + found->second) % k;
      if (!(map.points.at(cy.points[i]) == mc.points[j])) v.add("cyclic: cyclic order of cyclic " + std::to_string(c) + " is not preserved");
      if (side_of(cy, i) != mc.side[j]) v.add("side: chart " + std::to_string(i) + " of cyclic " + std::to_string(c) + " lands on the other side");
      int x = ix.point(cy.points[i]), y = ix.point(cy.points[(i + 1) % k]);
      for (auto [s, si] : ix.point_switches[x])
        for (auto [t, ti] : ix.point_switches[y])
          if (s == t && map.switches.count(s) && map.switches.at(s) != mc.charts[j])
            v.add("cyclic: chart " + std::to_string(i) + " of cyclic " + std::to_string(c) + " maps to a foreign branching");
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Finite evidence that an order is dense without endpoints: after round r of
// a generator, no element of round r-1 is extreme and every two consecutive
// ones are separated.

using OrderGenerator = std::function<std::vector<Rational>(int round)>;

inline OrderGenerator dyadic_generator() {
  return [](int round) {
    std::vector<Rational> xs{Rational(1, 2)};
    for (int i = 0; i < round; ++i) {
      std::vector<Rational> next{xs.front() - 1};
      for (std::size_t j = 0; j < xs.size(); ++j) {
        next.push_back(xs[j]);
        if (j + 1 < xs.size()) next.push_back((xs[j] + xs[j + 1]) / 2);
      }
      next.push_back(xs.back() + 1);
      xs = std::move(next);
    }
    return xs;
  };
}

inline OrderGenerator fixed_generator(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  return [xs](int) { return xs; };
}

inline OrderGenerator naturals_generator() {
  return [](int round) {
    std::vector<Rational> xs;
    for (int i = 0; i <= round; ++i) xs.emplace_back(i);
    return xs;
  };
}

inline EmbedVerdict check_maximal_order(const OrderGenerator& gen, int rounds) {
  EmbedVerdict v;
  if (rounds < 1) fail(ErrorKind::DomainError, "check_maximal_order needs at least one round");
  std::vector<Rational> before = gen(rounds - 1), after = gen(rounds);
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  if (before.empty() || after.empty()) {
    v.add("empty: generator produced no element");
    return v;
  }
  if (after.front() == before.front()) v.add("min: " + to_string(before.front()) + " stays the least element");
  if (after.back() == before.back()) v.add("max: " + to_string(before.back()) + " stays the greatest element");
  for (std::size_t i = 0; i + 1 < before.size(); ++i) {
    auto it = std::upper_bound(after.begin(), after.end(), before[i]);
    if (it == after.end() || !(*it < before[i + 1]))
      v.add("adjacent: nothing between " + to_string(before[i]) + " and " + to_string(before[i + 1]));
  }
  return v;
}

}  // namespace prelam
