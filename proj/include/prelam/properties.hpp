#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lamination.hpp"

namespace prelam {

using json = nlohmann::json;

inline json to_json(const CirclePoint& x) { return x.str(); }
inline json to_json(const Chord& c) { return json::array({c.a.str(), c.b.str()}); }

struct Witness {
  std::string property;
  std::string message;
  json data;
};

struct Verdict {
  bool pass = true;
  std::vector<Witness> witnesses;

  void add(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

namespace property {
inline constexpr const char* density = "density";
inline constexpr const char* countability = "countability-proxy";
inline constexpr const char* coverage = "coverage";
inline constexpr const char* star_uniqueness = "star-uniqueness";
inline constexpr const char* no_bad_accumulation = "no-bad-accumulation";
inline constexpr const char* few_common_ends = "few-common-ends";
}  // namespace property

struct PropertyReport {
  std::map<std::string, Verdict> verdicts;

  bool pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](auto& kv) { return kv.second.pass; });
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (auto& [name, v] : verdicts)
      if (!v.pass) out.push_back(name);
    return out;
  }
};

// ---------------------------------------------------------------------------

inline std::vector<CirclePoint> leaf_endpoints(const AnnotatedLamination& al) {
  std::set<CirclePoint> pts;
  for (auto& c : al.base.leaves) {
    pts.insert(c.a);
    pts.insert(c.b);
  }
  return {pts.begin(), pts.end()};
}

inline Verdict check_density(const AnnotatedLamination& al, const Rational& eps) {
  Verdict v;
  auto pts = leaf_endpoints(al);
  if (pts.empty()) {
    v.add({property::density, "no leaf endpoints", json{{"arc", "circle"}}});
    return v;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const CirclePoint& x = pts[i];
    const CirclePoint& y = pts[(i + 1) % pts.size()];
    Rational gap = pts.size() == 1 ? Rational(1) : ccw_offset(x, y);
    if (gap > eps)
      v.add({property::density, "arc of length " + to_string(gap) + " without endpoint",
             json{{"arc", json::array({x.str(), y.str()})}}});
  }
  return v;
}

inline Verdict check_star_uniqueness(const AnnotatedLamination& al) {
  Verdict v;
  std::map<Chord, std::vector<int>> owners;
  for (std::size_t i = 0; i < al.stars.size(); ++i)
    for (auto& c : al.stars[i].polygon) owners[c].push_back(static_cast<int>(i));
  for (auto& [c, ids] : owners)
    if (ids.size() > 1)
      v.add({property::star_uniqueness, "leaf " + c.str() + " belongs to several stars",
             json{{"leaf", to_json(c)}, {"stars", ids}}});
  return v;
}

inline Verdict check_coverage(const AnnotatedLamination& al) {
  Verdict v;
  Subdivision sub(chord_system(al));
  std::map<int, std::string> claimed;
  auto claim = [&](int f, const std::string& who) {
    auto [it, fresh] = claimed.emplace(f, who);
    if (!fresh)
      v.add({property::coverage, "region claimed by " + it->second + " and " + who,
             json{{"face", f}, {"claims", json::array({it->second, who})}}});
  };
  for (std::size_t i = 0; i < al.shells.size(); ++i) {
    const ShellSpec& s = al.shells[i];
    std::string who = "shell " + std::to_string(i);
    int f = face_with_chords(sub, shell_chords(s));
    if (f < 0) {
      v.add({property::coverage, who + " does not bound a single region", json{{"shell", i}, {"reason", "region"}}});
      continue;
    }
    claim(f, who);
    if (clockwise_sorted(shell_side(s), s.boundary) != s.boundary)
      v.add({property::coverage, who + " boundary is not in clockwise order", json{{"shell", i}, {"reason", "order"}}});
    int rc = sub.find_chord(s.root);
    if (sub.face_size(sub.other_face(rc, f)) >= 3)
      v.add({property::coverage, who + " root is not accumulated from outside", json{{"shell", i}, {"reason", "root"}}});
  }
  for (std::size_t i = 0; i < al.stars.size(); ++i) {
    std::string who = "star " + std::to_string(i);
    int f = face_with_chords(sub, al.stars[i].polygon);
    if (f < 0) {
      v.add({property::coverage, who + " does not bound a single region", json{{"star", i}, {"reason", "region"}}});
      continue;
    }
    claim(f, who);
  }
  for (int f = 0; f < sub.face_count(); ++f) {
    if (sub.face_size(f) < 3 || claimed.count(f)) continue;
    json cs = json::array();
    for (int c : sub.face_chords(f)) cs.push_back(to_json(sub.chord(c)));
    v.add({property::coverage, "region is neither a shell nor a star", json{{"face", f}, {"chords", cs}}});
  }
  return v;
}

namespace detail {

inline bool shell_violates(const ShellSpec& s, const Rational& delta) {
  std::vector<Rational> gaps{minor_arc_gap(s.root)};
  for (auto& c : s.boundary) gaps.push_back(minor_arc_gap(c));
  std::sort(gaps.rbegin(), gaps.rend());
  if (!(gaps[0] > delta)) return false;
  return minor_arc_gap(s.root) < gaps[1];
}

inline bool star_violates(const StarSpec& st, const Rational& delta) {
  const std::size_t k = st.polygon.size();
  std::vector<Rational> g;
  for (auto& c : st.polygon) g.push_back(minor_arc_gap(c));
  Rational top = *std::max_element(g.begin(), g.end());
  if (!(top > delta)) return false;
  std::size_t ntop = std::count(g.begin(), g.end(), top);
  if (ntop >= 2) {
    for (std::size_t i = 0; i < k; ++i)
      if (g[i] == top && g[(i + 1) % k] == top) return false;
    return true;
  }
  std::size_t i = std::max_element(g.begin(), g.end()) - g.begin();
  Rational second = -1;
  for (std::size_t j = 0; j < k; ++j)
    if (j != i) second = std::max(second, g[j]);
  return !(g[(i + 1) % k] == second || g[(i + k - 1) % k] == second);
}

}  // namespace detail

inline Verdict check_no_bad_accumulation(const AnnotatedLamination& al, const Rational& delta) {
  std::vector<Witness> bad;
  for (std::size_t i = 0; i < al.shells.size(); ++i)
    if (detail::shell_violates(al.shells[i], delta))
      bad.push_back({property::no_bad_accumulation, "root of shell " + std::to_string(i) + " is not one of its two long edges",
                     json{{"shell", i}, {"root", to_json(al.shells[i].root)}}});
  for (std::size_t i = 0; i < al.stars.size(); ++i)
    if (detail::star_violates(al.stars[i], delta))
      bad.push_back({property::no_bad_accumulation, "two long edges of star " + std::to_string(i) + " are not adjacent",
                     json{{"star", i}}});
  Verdict v;
  if (static_cast<int>(bad.size()) > al.exceptions)
    for (auto& w : bad) v.add(std::move(w));
  return v;
}

inline Verdict check_few_common_ends(const AnnotatedLamination& al) {
  Verdict v;
  const std::vector<Chord> all = chord_system(al);
  const int nleaves = static_cast<int>(al.base.leaves.size());
  Subdivision sub(all);
  std::map<CirclePoint, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    at[all[i].a].push_back(i);
    at[all[i].b].push_back(i);
  }
  for (auto& [theta, ids] : at) {
    std::sort(ids.begin(), ids.end(), [&, &theta = theta](int x, int y) {
      return ccw_offset(theta, all[x].other(theta)) < ccw_offset(theta, all[y].other(theta));
    });
    int prev_leaf = -1;
    bool wedge = false;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      int c = ids[j];
      if (c < nleaves) {
        if (prev_leaf >= 0 && wedge)
          v.add({property::few_common_ends, "leaves " + all[prev_leaf].str() + " and " + all[c].str() + " at " + theta.str() +
                                                 " are not successive boundary components of one region",
                 json{{"theta", theta.str()}, {"pair", json::array({to_json(all[prev_leaf]), to_json(all[c])})}}});
        prev_leaf = c;
        wedge = false;
      }
      if (j + 1 < ids.size() && prev_leaf >= 0) {
        int f = sub.face_toward(c, all[ids[j + 1]].other(theta));
        if (sub.face_size(f) < 3) wedge = true;
      }
    }
    for (std::size_t i = 0; i < al.shells.size(); ++i) {
      int n = 0;
      for (auto& b : al.shells[i].boundary) n += b.has_endpoint(theta) ? 1 : 0;
      if (n > 2)
        v.add({property::few_common_ends, "shell " + std::to_string(i) + " has " + std::to_string(n) + " boundary leaves at " + theta.str(),
               json{{"theta", theta.str()}, {"shell", i}}});
    }
    for (std::size_t i = 0; i < al.stars.size(); ++i) {
      int n = 0;
      for (auto& e : al.stars[i].polygon) n += e.has_endpoint(theta) ? 1 : 0;
      if (n > 2)
        v.add({property::few_common_ends, "star " + std::to_string(i) + " has several separatrixes at " + theta.str(),
               json{{"theta", theta.str()}, {"star", i}}});
    }
  }
  return v;
}

inline PropertyReport classify(const AnnotatedLamination& al, const Rational& eps, const Rational& delta) {
  validate(al);
  PropertyReport r;
  r.verdicts[property::density] = check_density(al, eps);
  r.verdicts[property::countability] = Verdict{};
  r.verdicts[property::coverage] = check_coverage(al);
  r.verdicts[property::star_uniqueness] = check_star_uniqueness(al);
  r.verdicts[property::no_bad_accumulation] = check_no_bad_accumulation(al, delta);
  r.verdicts[property::few_common_ends] = check_few_common_ends(al);
  return r;
}

// Re-runs the checker named by the witness; true when the same witness is produced again.
inline bool replay_witness(const AnnotatedLamination& al, const Witness& w, const Rational& eps, const Rational& delta) {
  Verdict v;
  if (w.property == property::density) v = check_density(al, eps);
  else if (w.property == property::coverage) v = check_coverage(al);
  else if (w.property == property::star_uniqueness) v = check_star_uniqueness(al);
  else if (w.property == property::no_bad_accumulation) v = check_no_bad_accumulation(al, delta);
  else if (w.property == property::few_common_ends) v = check_few_common_ends(al);
  else return false;
  return std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](const Witness& x) { return x.data == w.data; });
}

inline json to_json(const Verdict& v) {
  json ws = json::array();
  for (auto& w : v.witnesses) ws.push_back(json{{"property", w.property}, {"message", w.message}, {"data", w.data}});
  return json{{"pass", v.pass}, {"witnesses", ws}};
}

inline json to_json(const PropertyReport& r) {
  json out = json::object();
  for (auto& [name, v] : r.verdicts) out[name] = to_json(v);
  out["pass"] = r.pass();
  return out;
}

}  // namespace prelam
