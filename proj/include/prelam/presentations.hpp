#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "planar.hpp"

namespace prelam {

// A cyclic of degree k, each chart carrying one dangling trunk edge.
inline PlanarPresentation prong_presentation(int k, const std::string& side = "L") {
  if (k < 3) fail(ErrorKind::DomainError, "a cyclic needs at least 3 points, got " + std::to_string(k));
  PlanarPresentation p;
  for (int j = 0; j < k; ++j) p.points.push_back("z" + std::to_string(j));
  for (int j = 0; j < k; ++j) {
    std::string t = "t" + std::to_string(j);
    p.edges.push_back(Edge{{Port(t), std::nullopt}, {}});
    p.switches.push_back(Switch{t, {Member{"z" + std::to_string(j), std::nullopt}, Member{"z" + std::to_string((j + 1) % k), std::nullopt}}});
  }
  p.cyclics.push_back(Cyclic{p.points, side});
  return p;
}

namespace detail {

// Grows a presentation one attachment at a time; every stage is valid and
// extends the previous one (edges, switches and cyclics are only appended).
class PresentationGrower {
 public:
  PresentationGrower(std::uint64_t seed, int max_switches) : rng_(seed), max_switches_(max_switches) {
    open_.push_back({new_edge(), 0});
    open_.push_back({0, 1});
  }

  bool step() {
    if (open_.empty() || static_cast<int>(p_.switches.size()) >= max_switches_) return false;
    std::size_t pick = rng_.below(open_.size());
    EdgeEnd at = open_[pick];
    open_.erase(open_.begin() + static_cast<long>(pick));
    int room = max_switches_ - static_cast<int>(p_.switches.size());
    int roll = static_cast<int>(rng_.below(100));
    if (roll < 25 && room >= 3) grow_cyclic(at, std::min<int>(room, 3 + static_cast<int>(rng_.below(3))));
    else if (roll < 60) grow_from_trunk(at, room >= 2);
    else grow_from_member(at);
    return true;
  }

  const PlanarPresentation& presentation() const { return p_; }

 private:
  Rng rng_;
  int max_switches_;
  PlanarPresentation p_;
  std::vector<EdgeEnd> open_;
  int points_ = 0, ports_ = 0;

  std::string point() {
    p_.points.push_back("x" + std::to_string(points_++));
    return p_.points.back();
  }
  std::string port() { return "q" + std::to_string(ports_++); }

  // New edge with a random number of samples; both ends open.
  int new_edge() {
    Edge e;
    int n = static_cast<int>(rng_.below(3));
    for (int i = 0; i < n; ++i) e.samples.push_back(point());
    p_.edges.push_back(e);
    return static_cast<int>(p_.edges.size()) - 1;
  }

  // New edge attached at a random end to port q; the other end stays open.
  void edge_at(const std::string& q) {
    int e = new_edge();
    int end = static_cast<int>(rng_.below(2));
    p_.edges[e].ports[end] = q;
    open_.push_back({e, 1 - end});
  }

  std::string close(const EdgeEnd& at) {
    std::string q = port();
    p_.edges[at.edge].ports[at.end] = q;
    return q;
  }

  Member fresh_member() {
    std::string q = port();
    Member m{point(), q};
    edge_at(q);
    return m;
  }

  void grow_from_trunk(const EdgeEnd& at, bool allow_double) {
    Switch s{close(at), {}};
    int r = 2 + static_cast<int>(rng_.below(2));
    int twice = allow_double && rng_.chance(30) ? static_cast<int>(rng_.below(r)) : -1;
    std::vector<std::string> doubled;
    for (int i = 0; i < r; ++i) {
      if (i == twice) {
        s.members.push_back(Member{point(), std::nullopt});
        doubled.push_back(s.members.back().point);
      } else {
        s.members.push_back(fresh_member());
      }
    }
    p_.switches.push_back(s);
    for (auto& x : doubled) second_switch(x);
  }

  // Switch on the far side of x, with x at a random position.
  void second_switch(const std::string& x) {
    std::string t = port();
    edge_at(t);
    Switch s{t, {}};
    int r = 2 + static_cast<int>(rng_.below(2));
    int pos = static_cast<int>(rng_.below(r));
    for (int i = 0; i < r; ++i) s.members.push_back(i == pos ? Member{x, std::nullopt} : fresh_member());
    p_.switches.push_back(s);
  }

  void grow_from_member(const EdgeEnd& at) {
    std::string q = close(at);
    std::string t = port();
    edge_at(t);
    Switch s{t, {}};
    int r = 2 + static_cast<int>(rng_.below(2));
    int pos = static_cast<int>(rng_.below(r));
    for (int i = 0; i < r; ++i) s.members.push_back(i == pos ? Member{point(), q} : fresh_member());
    p_.switches.push_back(s);
  }

  void grow_cyclic(const EdgeEnd& at, int k) {
    std::vector<std::string> zs;
    for (int j = 0; j < k; ++j) zs.push_back(point());
    for (int j = 0; j < k; ++j) {
      std::string t = j == 0 ? close(at) : port();
      if (j > 0) edge_at(t);
      Switch s{t, {}};
      if (rng_.chance(25)) s.members.push_back(fresh_member());
      s.members.push_back(Member{zs[j], std::nullopt});
      s.members.push_back(Member{zs[(j + 1) % k], std::nullopt});
      if (rng_.chance(25)) s.members.push_back(fresh_member());
      p_.switches.push_back(s);
    }
    p_.cyclics.push_back(Cyclic{zs, rng_.chance(50) ? "L" : "R"});
  }
};

}  // namespace detail

// Random valid presentation with at most max_switches switches and cyclics
// of degree 3 to 5.
inline PlanarPresentation gen_presentation(std::uint64_t seed, int max_switches = 20) {
  detail::PresentationGrower g(seed, max_switches);
  Rng steps(seed ^ 0x9e3779b97f4a7c15ULL);
  int target = 1 + static_cast<int>(steps.below(static_cast<std::uint64_t>(max_switches)));
  for (int i = 0; i < target && g.step(); ++i) {
  }
  return g.presentation();
}

// Every stage of one growth run, each extending the previous one.
inline std::vector<PlanarPresentation> gen_presentation_stages(std::uint64_t seed, int max_switches = 20) {
  detail::PresentationGrower g(seed, max_switches);
  std::vector<PlanarPresentation> out{g.presentation()};
  while (g.step()) out.push_back(g.presentation());
  return out;
}

}  // namespace prelam
