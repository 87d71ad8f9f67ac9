#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace prelam {

using json = nlohmann::json;

using Port = std::optional<std::string>;

struct Edge {
  std::array<Port, 2> ports;
  std::vector<std::string> samples;  // from end 0 to end 1
};

struct Member {
  std::string point;
  Port port;  // edge continuing the point away from the switch; null if the point branches on both sides
};

// A branching: the trunk edge ends at the ordered members.
struct Switch {
  std::string trunk;
  std::vector<Member> members;
};

// Cyclic branching, counterclockwise. side[i] says on which side of the chart
// entering switch i (the one holding points i and i+1) from its trunk the
// other points lie; one letter stands for every chart.
struct Cyclic {
  std::vector<std::string> points;
  std::string side = "L";
};

struct PlanarPresentation {
  std::vector<std::string> points;
  std::vector<Edge> edges;
  std::vector<Switch> switches;
  std::vector<Cyclic> cyclics;
};

inline bool operator==(const Edge& x, const Edge& y) { return x.ports == y.ports && x.samples == y.samples; }
inline bool operator==(const Member& x, const Member& y) { return x.point == y.point && x.port == y.port; }
inline bool operator==(const Switch& x, const Switch& y) { return x.trunk == y.trunk && x.members == y.members; }
inline bool operator==(const Cyclic& x, const Cyclic& y) { return x.points == y.points && x.side == y.side; }
inline bool operator==(const PlanarPresentation& x, const PlanarPresentation& y) {
  return x.points == y.points && x.edges == y.edges && x.switches == y.switches && x.cyclics == y.cyclics;
}

inline char side_of(const Cyclic& c, std::size_t chart) { return c.side.size() == 1 ? c.side[0] : c.side[chart]; }

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const PlanarPresentation& p) {
  auto port = [](const Port& x) { return x ? json(*x) : json(nullptr); };
  json edges = json::array(), switches = json::array(), cyclics = json::array();
  for (auto& e : p.edges) edges.push_back(json{{"ports", json::array({port(e.ports[0]), port(e.ports[1])})}, {"samples", e.samples}});
  for (auto& s : p.switches) {
    json br = json::array();
    for (auto& m : s.members) br.push_back(json::array({m.point, port(m.port)}));
    switches.push_back(json{{"trunk", s.trunk}, {"branches", br}});
  }
  for (auto& c : p.cyclics) cyclics.push_back(json{{"points", c.points}, {"side", c.side}});
  return json{{"points", p.points}, {"edges", edges}, {"switches", switches}, {"cyclics", cyclics}};
}

inline PlanarPresentation presentation_from_json(const json& j) {
  auto bad = [](const std::string& m) { fail(ErrorKind::Parse, "presentation: " + m); };
  auto str = [&](const json& x, const char* what) {
    if (!x.is_string()) bad(std::string(what) + " must be a string");
    return x.get<std::string>();
  };
  auto port = [&](const json& x) -> Port {
    if (x.is_null()) return std::nullopt;
    return str(x, "port");
  };
  if (!j.is_object()) bad("expected an object");
  PlanarPresentation p;
  if (j.contains("points"))
    for (auto& x : j["points"]) p.points.push_back(str(x, "point"));
  if (j.contains("edges"))
    for (auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("ports") || !e["ports"].is_array() || e["ports"].size() != 2) bad("edge needs two ports");
      Edge ed;
      ed.ports = {port(e["ports"][0]), port(e["ports"][1])};
      if (e.contains("samples"))
        for (auto& x : e["samples"]) ed.samples.push_back(str(x, "sample"));
      p.edges.push_back(std::move(ed));
    }
  if (j.contains("switches"))
    for (auto& s : j["switches"]) {
      if (!s.is_object() || !s.contains("trunk") || !s.contains("branches")) bad("switch needs trunk and branches");
      Switch sw;
      sw.trunk = str(s["trunk"], "trunk");
      for (auto& b : s["branches"]) {
        if (!b.is_array() || b.size() != 2) bad("branch must be [point, port]");
        sw.members.push_back({str(b[0], "branch point"), port(b[1])});
      }
      p.switches.push_back(std::move(sw));
    }
  if (j.contains("cyclics"))
    for (auto& c : j["cyclics"]) {
      if (!c.is_object() || !c.contains("points")) bad("cyclic needs points");
      Cyclic cy;
      for (auto& x : c["points"]) cy.points.push_back(str(x, "cyclic point"));
      if (c.contains("side")) cy.side = str(c["side"], "side");
      p.cyclics.push_back(std::move(cy));
    }
  return p;
}

// ---------------------------------------------------------------------------
// Incidence index; construction enforces the structural rules.

struct EdgeEnd {
  int edge = -1;
  int end = 0;
  friend bool operator==(const EdgeEnd& x, const EdgeEnd& y) { return x.edge == y.edge && x.end == y.end; }
  friend bool operator<(const EdgeEnd& x, const EdgeEnd& y) { return x.edge < y.edge || (x.edge == y.edge && x.end < y.end); }
};

struct Attachment {
  int sw = -1;
  int member = -1;  // -1 for the trunk
};

struct PresentationIndex {
  std::map<std::string, EdgeEnd> port_end;
  std::map<EdgeEnd, Attachment> end_attachment;
  std::map<std::string, int> point_id;                  // position in p.points
  std::vector<std::optional<std::pair<int, int>>> sample_of;  // (edge, index) per point
  std::vector<std::vector<std::pair<int, int>>> point_switches;  // (switch, member) per point
  std::vector<EdgeEnd> trunk_end;                       // per switch
  std::vector<int> cyclic_of;                           // per point, -1 if none

  int point(const std::string& name) const {
    auto it = point_id.find(name);
    if (it == point_id.end()) fail(ErrorKind::UnknownPoint, "unknown point '" + name + "'");
    return it->second;
  }
  bool is_sample(int x) const { return sample_of[x].has_value(); }
};

inline PresentationIndex index_presentation(const PlanarPresentation& p) {
  auto bad = [](const std::string& m) { fail(ErrorKind::StructuralError, m); };
  PresentationIndex ix;
  const int np = static_cast<int>(p.points.size());
  for (int i = 0; i < np; ++i)
    if (!ix.point_id.emplace(p.points[i], i).second) bad("duplicate point '" + p.points[i] + "'");
  ix.sample_of.assign(np, std::nullopt);
  ix.point_switches.assign(np, {});
  ix.cyclic_of.assign(np, -1);
  auto pid = [&](const std::string& name) {
    auto it = ix.point_id.find(name);
    if (it == ix.point_id.end()) bad("point '" + name + "' is not declared");
    return it->second;
  };
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    for (int end = 0; end < 2; ++end) {
      const Port& port = p.edges[e].ports[end];
      if (port && !ix.port_end.emplace(*port, EdgeEnd{e, end}).second) bad("duplicate port '" + *port + "'");
    }
    for (int i = 0; i < static_cast<int>(p.edges[e].samples.size()); ++i) {
      int x = pid(p.edges[e].samples[i]);
      if (ix.sample_of[x]) bad("point '" + p.points[x] + "' is sampled twice");
      ix.sample_of[x] = std::make_pair(e, i);
    }
  }
  auto use = [&](const std::string& port, Attachment a) {
    auto it = ix.port_end.find(port);
    if (it == ix.port_end.end()) bad("dangling port '" + port + "'");
    if (!ix.end_attachment.emplace(it->second, a).second) bad("port '" + port + "' is used twice");
    return it->second;
  };
  for (int s = 0; s < static_cast<int>(p.switches.size()); ++s) {
    const Switch& sw = p.switches[s];
    if (sw.members.size() < 2) bad("switch " + std::to_string(s) + " has fewer than 2 branches");
    ix.trunk_end.push_back(use(sw.trunk, {s, -1}));
    std::set<int> here;
    for (int m = 0; m < static_cast<int>(sw.members.size()); ++m) {
      int x = pid(sw.members[m].point);
      if (ix.sample_of[x]) bad("sample point '" + p.points[x] + "' is a branch point");
      if (!here.insert(x).second) bad("point '" + p.points[x] + "' repeated in switch " + std::to_string(s));
      ix.point_switches[x].emplace_back(s, m);
      if (sw.members[m].port) use(*sw.members[m].port, {s, m});
    }
  }
  for (auto& [port, end] : ix.port_end)
    if (!ix.end_attachment.count(end)) bad("unused port '" + port + "'");
  for (int x = 0; x < np; ++x) {
    if (ix.sample_of[x]) continue;
    auto& sws = ix.point_switches[x];
    if (sws.empty()) bad("point '" + p.points[x] + "' is neither sampled nor branching");
    if (sws.size() > 2) bad("point '" + p.points[x] + "' lies in more than 2 switches");
    int with_port = 0;
    for (auto [s, m] : sws) with_port += p.switches[s].members[m].port ? 1 : 0;
    if (sws.size() == 1 && with_port != 1) bad("point '" + p.points[x] + "' has no continuation on its free side");
    if (sws.size() == 2 && with_port != 0) bad("point '" + p.points[x] + "' in two switches cannot carry a port");
  }
  for (int c = 0; c < static_cast<int>(p.cyclics.size()); ++c) {
    const Cyclic& cy = p.cyclics[c];
    if (cy.side.size() != 1 && cy.side.size() != cy.points.size()) bad("cyclic " + std::to_string(c) + " side flags do not match its size");
    for (char ch : cy.side)
      if (ch != 'L' && ch != 'R') bad("cyclic side flags must be L or R");
    for (auto& name : cy.points) {
      int x = pid(name);
      if (ix.sample_of[x]) bad("cyclic point '" + name + "' is a sample");
      if (ix.cyclic_of[x] < 0) ix.cyclic_of[x] = c;
    }
  }
  return ix;
}

inline void validate(const PlanarPresentation& p) { index_presentation(p); }

// ---------------------------------------------------------------------------
// Connectivity graph: one node per edge piece (edges cut at samples) and per
// branch point; samples are nodes between consecutive pieces.

namespace detail {

struct PortGraph {
  int nodes = 0;
  std::vector<int> point_node;                  // per point
  std::vector<std::vector<int>> piece;          // per edge, its pieces
  std::vector<std::vector<int>> adj;

  void link(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int end_node(const EdgeEnd& e) const { return e.end == 0 ? piece[e.edge].front() : piece[e.edge].back(); }
};

inline PortGraph port_graph(const PlanarPresentation& p, const PresentationIndex& ix) {
  PortGraph g;
  g.point_node.assign(p.points.size(), -1);
  for (std::size_t x = 0; x < p.points.size(); ++x) g.point_node[x] = g.nodes++;
  for (auto& e : p.edges) {
    std::vector<int> pieces;
    for (std::size_t i = 0; i <= e.samples.size(); ++i) pieces.push_back(g.nodes++);
    g.piece.push_back(pieces);
  }
  g.adj.assign(g.nodes, {});
  for (std::size_t e = 0; e < p.edges.size(); ++e)
    for (std::size_t i = 0; i < p.edges[e].samples.size(); ++i) {
      int x = g.point_node[ix.point_id.at(p.edges[e].samples[i])];
      g.link(g.piece[e][i], x);
      g.link(x, g.piece[e][i + 1]);
    }
  for (std::size_t s = 0; s < p.switches.size(); ++s) {
    int trunk = g.end_node(ix.trunk_end[s]);
    for (auto& m : p.switches[s].members) {
      int x = g.point_node[ix.point_id.at(m.point)];
      g.link(trunk, x);
      if (m.port) g.link(x, g.end_node(ix.port_end.at(*m.port)));
    }
  }
  return g;
}

inline int count_components(const PortGraph& g, const std::vector<bool>& removed) {
  std::vector<bool> seen(g.nodes, false);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.nodes; ++s) {
    if (seen[s] || removed[s]) continue;
    ++comps;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[u])
        if (!seen[v] && !removed[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

}  // namespace detail

inline int components_after_removal(const PlanarPresentation& p, const std::vector<std::string>& removed) {
  PresentationIndex ix = index_presentation(p);
  auto g = detail::port_graph(p, ix);
  std::vector<bool> cut(g.nodes, false);
  for (auto& name : removed) cut[g.point_node[ix.point(name)]] = true;
  return detail::count_components(g, cut);
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomReport {
  static constexpr int kItems = 6;
  // 0 connected, 1 cyclics disjoint, 2 cyclic size, 3 branchings meet cyclics
  // in consecutive pairs, 4 cyclics disconnect, 5 other points disconnect.
  std::array<std::vector<std::string>, kItems> witnesses;

  bool pass() const {
    return std::all_of(witnesses.begin(), witnesses.end(), [](auto& w) { return w.empty(); });
  }
  bool item_pass(int i) const { return witnesses[i].empty(); }
};

inline const char* axiom_name(int i) {
  static const char* names[] = {"connected", "cyclics-disjoint", "cyclic-size", "branching-meets-cyclic", "cyclic-disconnects", "point-disconnects"};
  return names[i];
}

inline json to_json(const AxiomReport& r) {
  json items = json::object();
  for (int i = 0; i < AxiomReport::kItems; ++i) items[axiom_name(i)] = json{{"pass", r.item_pass(i)}, {"witnesses", r.witnesses[i]}};
  return json{{"pass", r.pass()}, {"items", items}};
}

inline AxiomReport check_axioms(const PlanarPresentation& p) {
  PresentationIndex ix = index_presentation(p);
  auto g = detail::port_graph(p, ix);
  AxiomReport r;
  std::vector<bool> none(g.nodes, false);
  int base = detail::count_components(g, none);
  if (base > 1) r.witnesses[0].push_back("presentation has " + std::to_string(base) + " components");

  std::map<std::string, int> owner;
  for (int c = 0; c < static_cast<int>(p.cyclics.size()); ++c) {
    const Cyclic& cy = p.cyclics[c];
    std::set<std::string> here;
    for (auto& x : cy.points) {
      if (!here.insert(x).second) r.witnesses[1].push_back("point '" + x + "' repeated in cyclic " + std::to_string(c));
      auto [it, fresh] = owner.emplace(x, c);
      if (!fresh && it->second != c)
        r.witnesses[1].push_back("point '" + x + "' lies in cyclics " + std::to_string(it->second) + " and " + std::to_string(c));
    }
    if (cy.points.size() < 3) r.witnesses[2].push_back("cyclic " + std::to_string(c) + " has " + std::to_string(cy.points.size()) + " points");
  }

  for (int c = 0; c < static_cast<int>(p.cyclics.size()); ++c) {
    const Cyclic& cy = p.cyclics[c];
    const std::size_t k = cy.points.size();
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos.emplace(cy.points[i], i);
    for (int s = 0; s < static_cast<int>(p.switches.size()); ++s) {
      const auto& ms = p.switches[s].members;
      std::vector<int> hits;
      for (int m = 0; m < static_cast<int>(ms.size()); ++m)
        if (pos.count(ms[m].point)) hits.push_back(m);
      if (hits.empty()) continue;
      std::string where = "switch " + std::to_string(s) + " and cyclic " + std::to_string(c);
      if (hits.size() != 2) {
        r.witnesses[3].push_back(where + " share " + std::to_string(hits.size()) + " points");
        continue;
      }
      if (hits[1] != hits[0] + 1) r.witnesses[3].push_back(where + ": shared points are not consecutive in the switch");
      else if (k > 0 && (pos[ms[hits[0]].point] + 1) % k != pos[ms[hits[1]].point])
        r.witnesses[3].push_back(where + ": switch successor is not the cyclic successor");
    }
    for (std::size_t i = 0; i < k && k >= 2; ++i) {
      int a = ix.point(cy.points[i]), b = ix.point(cy.points[(i + 1) % k]);
      bool common = false;
      for (auto [s, m] : ix.point_switches[a])
        for (auto [t, n] : ix.point_switches[b]) common = common || s == t;
      if (!common) r.witnesses[3].push_back("cyclic " + std::to_string(c) + ": '" + cy.points[i] + "' and '" + cy.points[(i + 1) % k] + "' share no switch");
    }
    std::vector<bool> cut(g.nodes, false);
    for (auto& x : cy.points) cut[g.point_node[ix.point(x)]] = true;
    int comps = detail::count_components(g, cut);
    if (comps != static_cast<int>(k))
      r.witnesses[4].push_back("removing cyclic " + std::to_string(c) + " leaves " + std::to_string(comps) + " components, expected " + std::to_string(k));
  }

  for (int x = 0; x < static_cast<int>(p.points.size()); ++x) {
    if (owner.count(p.points[x])) continue;
    std::vector<bool> cut(g.nodes, false);
    cut[g.point_node[x]] = true;
    int comps = detail::count_components(g, cut);
    if (comps != 2) r.witnesses[5].push_back("removing '" + p.points[x] + "' leaves " + std::to_string(comps) + " components");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Orientations: one flip bit per edge. An edge whose bit is 0 runs from end 0
// to end 1, so it flows into the switch at its end-1 port.

struct OrientationResult {
  std::vector<std::vector<bool>> assignments;
  std::vector<std::string> diagnostics;
};

namespace detail {

class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::pair<int, int> find(int x) {
    int par = 0, r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Path compression.
    int acc = par;
    while (parent_[x] != x) {
      int next = parent_[x], p = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= p;
      x = next;
    }
    return {r, par};
  }
  // Records x xor y == bit; false on contradiction.
  bool unite(int x, int y, int bit) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == bit;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ bit;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace detail

inline OrientationResult orientations(const PlanarPresentation& p) {
  PresentationIndex ix = index_presentation(p);
  const int ne = static_cast<int>(p.edges.size());
  detail::ParityUnionFind uf(ne);
  OrientationResult res;
  // flows_into(a) xor flows_into(b) == 1  <=>  o_a xor o_b == 1 xor end_a xor end_b
  auto opposite = [&](EdgeEnd a, EdgeEnd b, const std::string& where) {
    if (!uf.unite(a.edge, b.edge, 1 ^ a.end ^ b.end)) res.diagnostics.push_back("orientation conflict at " + where);
  };
  for (int s = 0; s < static_cast<int>(p.switches.size()); ++s)
    for (auto& m : p.switches[s].members)
      if (m.port) opposite(ix.trunk_end[s], ix.port_end.at(*m.port), "point '" + m.point + "'");
  for (int x = 0; x < static_cast<int>(p.points.size()); ++x) {
    auto& sws = ix.point_switches[x];
    if (sws.size() == 2) opposite(ix.trunk_end[sws[0].first], ix.trunk_end[sws[1].first], "point '" + p.points[x] + "'");
  }
  for (int c = 0; c < static_cast<int>(p.cyclics.size()); ++c) {
    const Cyclic& cy = p.cyclics[c];
    for (std::size_t i = 0; i < cy.points.size(); ++i)
      if (side_of(cy, i) != side_of(cy, 0))
        res.diagnostics.push_back("cyclic " + std::to_string(c) + ": side flag of chart " + std::to_string(i) + " disagrees with chart 0");
  }
  if (!res.diagnostics.empty()) return res;
  std::vector<int> roots;
  for (int e = 0; e < ne; ++e)
    if (uf.find(e).first == e) roots.push_back(e);
  if (roots.size() > 16) {
    res.diagnostics.push_back("too many independent edges to enumerate");
    return res;
  }
  for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
    std::map<int, int> root_bit;
    for (std::size_t i = 0; i < roots.size(); ++i) root_bit[roots[i]] = (mask >> i) & 1;
    std::vector<bool> a(ne);
    for (int e = 0; e < ne; ++e) {
      auto [r, par] = uf.find(e);
      a[e] = (root_bit[r] ^ par) != 0;
    }
    res.assignments.push_back(std::move(a));
  }
  return res;
}

// Flips edges so that edge orientations agree across switches wherever the
// constraints allow (the first edge of each class keeps its direction), then
// renames every port "p<edge>.<end>".
inline PlanarPresentation coherently_oriented(PlanarPresentation p) {
  PresentationIndex ix = index_presentation(p);
  const int ne = static_cast<int>(p.edges.size());
  detail::ParityUnionFind uf(ne);
  for (int s = 0; s < static_cast<int>(p.switches.size()); ++s)
    for (auto& m : p.switches[s].members)
      if (m.port) {
        EdgeEnd a = ix.trunk_end[s], b = ix.port_end.at(*m.port);
        uf.unite(a.edge, b.edge, 1 ^ a.end ^ b.end);
      }
  for (int x = 0; x < static_cast<int>(p.points.size()); ++x) {
    auto& sws = ix.point_switches[x];
    if (sws.size() != 2) continue;
    EdgeEnd a = ix.trunk_end[sws[0].first], b = ix.trunk_end[sws[1].first];
    uf.unite(a.edge, b.edge, 1 ^ a.end ^ b.end);
  }
  std::map<std::string, std::string> rename;
  for (int e = 0; e < ne; ++e) {
    Edge& ed = p.edges[e];
    if (uf.find(e).second) {
      std::swap(ed.ports[0], ed.ports[1]);
      std::reverse(ed.samples.begin(), ed.samples.end());
    }
    for (int end = 0; end < 2; ++end)
      if (ed.ports[end]) {
        std::string fresh = "p" + std::to_string(e) + "." + std::to_string(end);
        rename[*ed.ports[end]] = fresh;
        ed.ports[end] = fresh;
      }
  }
  for (auto& sw : p.switches) {
    sw.trunk = rename.at(sw.trunk);
    for (auto& m : sw.members)
      if (m.port) m.port = rename.at(*m.port);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Isomorphisms: edge ends to edge ends, switch members in order, cyclic
// orders up to rotation, side flags exactly.

struct PresentationIsomorphism {
  std::map<std::string, std::string> points;
  std::vector<std::pair<int, bool>> edges;  // image edge, ends swapped
  std::vector<int> switches;

  PresentationIsomorphism inverse() const {
    PresentationIsomorphism inv;
    for (auto& [a, b] : points) inv.points[b] = a;
    inv.edges.assign(edges.size(), {-1, false});
    for (std::size_t e = 0; e < edges.size(); ++e) inv.edges[edges[e].first] = {static_cast<int>(e), edges[e].second};
    inv.switches.assign(switches.size(), -1);
    for (std::size_t s = 0; s < switches.size(); ++s) inv.switches[switches[s]] = static_cast<int>(s);
    return inv;
  }
};

inline json to_json(const PresentationIsomorphism& iso) {
  json edges = json::array();
  for (auto& [f, flip] : iso.edges) edges.push_back(json{{"edge", f}, {"flip", flip}});
  return json{{"points", iso.points}, {"edges", edges}, {"switches", iso.switches}};
}

namespace detail {

struct IsoSearch {
  const PlanarPresentation &p1, &p2;
  const PresentationIndex &ix1, &ix2;
  std::vector<int> pmap, smap;
  std::vector<std::pair<int, bool>> emap;
  std::vector<int> pending_edges, pending_switches, pending_points;

  IsoSearch(const PlanarPresentation& a, const PlanarPresentation& b, const PresentationIndex& ia, const PresentationIndex& ib)
      : p1(a), p2(b), ix1(ia), ix2(ib) {}

  bool set_point(int x, int y) {
    if (pmap[x] >= 0) return pmap[x] == y;
    pmap[x] = y;
    pending_points.push_back(x);
    return true;
  }
  bool set_switch(int s, int t) {
    if (smap[s] >= 0) return smap[s] == t;
    smap[s] = t;
    pending_switches.push_back(s);
    return true;
  }
  bool set_end(const EdgeEnd& a, const EdgeEnd& b) {
    bool flip = a.end != b.end;
    if (emap[a.edge].first >= 0) return emap[a.edge] == std::make_pair(b.edge, flip);
    emap[a.edge] = {b.edge, flip};
    pending_edges.push_back(a.edge);
    return true;
  }

  bool process_edge(int e) {
    auto [f, flip] = emap[e];
    const Edge &a = p1.edges[e], &b = p2.edges[f];
    if (a.samples.size() != b.samples.size()) return false;
    const std::size_t n = a.samples.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!set_point(ix1.point_id.at(a.samples[i]), ix2.point_id.at(b.samples[flip ? n - 1 - i : i]))) return false;
    for (int end = 0; end < 2; ++end) {
      int end2 = end ^ (flip ? 1 : 0);
      if (a.ports[end].has_value() != b.ports[end2].has_value()) return false;
      if (!a.ports[end]) continue;
      Attachment x = ix1.end_attachment.at({e, end}), y = ix2.end_attachment.at({f, end2});
      if ((x.member < 0) != (y.member < 0) || x.member != y.member) return false;
      if (!set_switch(x.sw, y.sw)) return false;
    }
    return true;
  }

  bool process_switch(int s) {
    int t = smap[s];
    const Switch &a = p1.switches[s], &b = p2.switches[t];
    if (a.members.size() != b.members.size()) return false;
    if (!set_end(ix1.trunk_end[s], ix2.trunk_end[t])) return false;
    for (std::size_t m = 0; m < a.members.size(); ++m) {
      if (a.members[m].port.has_value() != b.members[m].port.has_value()) return false;
      if (!set_point(ix1.point_id.at(a.members[m].point), ix2.point_id.at(b.members[m].point))) return false;
      if (a.members[m].port && !set_end(ix1.port_end.at(*a.members[m].port), ix2.port_end.at(*b.members[m].port))) return false;
    }
    return true;
  }

  bool process_point(int x) {
    int y = pmap[x];
    if (ix1.is_sample(x) != ix2.is_sample(y)) return false;
    if (ix1.is_sample(x)) return true;
    auto &sx = ix1.point_switches[x], &sy = ix2.point_switches[y];
    if (sx.size() != sy.size()) return false;
    if (sx.size() == 1) return sx[0].second == sy[0].second && set_switch(sx[0].first, sy[0].first);
    int i = smap[sx[0].first] >= 0 ? 0 : 1;
    int t = smap[sx[i].first];
    int j = sy[0].first == t ? 0 : (sy[1].first == t ? 1 : -1);
    if (j < 0 || sx[i].second != sy[j].second || sx[1 - i].second != sy[1 - j].second) return false;
    return set_switch(sx[1 - i].first, sy[1 - j].first);
  }

  std::optional<PresentationIsomorphism> run(int f, bool flip) {
    pmap.assign(p1.points.size(), -1);
    smap.assign(p1.switches.size(), -1);
    emap.assign(p1.edges.size(), {-1, false});
    pending_edges.clear();
    pending_switches.clear();
    pending_points.clear();
    emap[0] = {f, flip};
    pending_edges.push_back(0);
    while (!pending_edges.empty() || !pending_switches.empty() || !pending_points.empty()) {
      if (!pending_edges.empty()) {
        int e = pending_edges.back();
        pending_edges.pop_back();
        if (!process_edge(e)) return std::nullopt;
      } else if (!pending_switches.empty()) {
        int s = pending_switches.back();
        pending_switches.pop_back();
        if (!process_switch(s)) return std::nullopt;
      } else {
        int x = pending_points.back();
        pending_points.pop_back();
        if (!process_point(x)) return std::nullopt;
      }
    }
    auto bijective = [](const std::vector<int>& m, std::size_t n2) {
      std::set<int> img(m.begin(), m.end());
      return !img.count(-1) && img.size() == m.size() && m.size() == n2;
    };
    if (!bijective(pmap, p2.points.size()) || !bijective(smap, p2.switches.size())) return std::nullopt;
    std::vector<int> eimg;
    for (auto& [g, fl] : emap) eimg.push_back(g);
    if (!bijective(eimg, p2.edges.size())) return std::nullopt;
    if (p1.cyclics.size() != p2.cyclics.size()) return std::nullopt;
    for (auto& c1 : p1.cyclics) {
      const std::size_t k = c1.points.size();
      std::string first = p2.points[pmap[ix1.point_id.at(c1.points[0])]];
      bool found = false;
      for (auto& c2 : p2.cyclics) {
        if (c2.points.size() != k) continue;
        auto it = std::find(c2.points.begin(), c2.points.end(), first);
        if (it == c2.points.end()) continue;
        std::size_t off = static_cast<std::size_t>(it - c2.points.begin());
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = p2.points[pmap[ix1.point_id.at(c1.points[i])]] == c2.points[(i + off) % k];
          ok = ok && side_of(c1, i) == side_of(c2, (i + off) % k);
        }
        found = ok;
        break;
      }
      if (!found) return std::nullopt;
    }
    PresentationIsomorphism iso;
    for (std::size_t x = 0; x < pmap.size(); ++x) iso.points[p1.points[x]] = p2.points[pmap[x]];
    iso.edges = emap;
    iso.switches = smap;
    return iso;
  }
};

}  // namespace detail

inline constexpr std::size_t kDefaultIsoBound = 200000;

inline std::vector<PresentationIsomorphism> all_isomorphisms(const PlanarPresentation& p1, const PlanarPresentation& p2,
                                                             std::size_t bound = kDefaultIsoBound) {
  auto size = [](const PlanarPresentation& p) { return p.points.size() + p.edges.size() + p.switches.size(); };
  if (size(p1) > bound || size(p2) > bound) fail(ErrorKind::SizeExceeded, "presentation exceeds the isomorphism size bound");
  PresentationIndex ix1 = index_presentation(p1), ix2 = index_presentation(p2);
  std::vector<PresentationIsomorphism> out;
  if (p1.edges.size() != p2.edges.size() || p1.points.size() != p2.points.size() || p1.switches.size() != p2.switches.size() ||
      p1.cyclics.size() != p2.cyclics.size())
    return out;
  if (p1.edges.empty()) {
    if (p1.points.empty()) out.push_back({});
    return out;
  }
  detail::IsoSearch search(p1, p2, ix1, ix2);
  for (int f = 0; f < static_cast<int>(p2.edges.size()); ++f)
    for (bool flip : {false, true})
      if (auto iso = search.run(f, flip)) out.push_back(std::move(*iso));
  return out;
}

inline std::optional<PresentationIsomorphism> isomorphic(const PlanarPresentation& p1, const PlanarPresentation& p2,
                                                         std::size_t bound = kDefaultIsoBound) {
  auto all = all_isomorphisms(p1, p2, bound);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Checks that iso maps p1 onto p2 respecting every structure.
inline bool is_isomorphism(const PlanarPresentation& p1, const PlanarPresentation& p2, const PresentationIsomorphism& iso) {
  if (iso.edges.size() != p1.edges.size() || p1.edges.empty()) return p1.edges.empty() && p2.edges.empty() && p1.points.empty() && p2.points.empty();
  PresentationIndex ix1 = index_presentation(p1), ix2 = index_presentation(p2);
  detail::IsoSearch search(p1, p2, ix1, ix2);
  auto again = search.run(iso.edges[0].first, iso.edges[0].second);
  return again && again->points == iso.points && again->edges == iso.edges && again->switches == iso.switches;
}

}  // namespace prelam
