#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>

#include "lamination.hpp"

namespace prelam {

using json = nlohmann::json;

inline CirclePoint point_from_json(const json& j) {
  if (!j.is_string()) fail(ErrorKind::Parse, "circle point must be a \"p/q\" string");
  return parse_point(j.get<std::string>());
}

inline Chord chord_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "chord must be a pair of points");
  return Chord(point_from_json(j[0]), point_from_json(j[1]));
}

inline json chord_to_json(const Chord& c) { return json::array({c.a.str(), c.b.str()}); }

inline json chords_to_json(const std::vector<Chord>& cs) {
  json out = json::array();
  for (auto& c : cs) out.push_back(chord_to_json(c));
  return out;
}

inline std::vector<Chord> chords_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected a list of chords");
  std::vector<Chord> out;
  for (auto& c : j) out.push_back(chord_from_json(c));
  return out;
}

inline json to_json(const AnnotatedLamination& al) {
  std::vector<Chord> leaves = al.base.leaves;
  std::sort(leaves.begin(), leaves.end());
  json shells = json::array(), stars = json::array();
  for (auto& s : al.shells) shells.push_back(json{{"root", chord_to_json(s.root)}, {"boundary", chords_to_json(s.boundary)}});
  for (auto& s : al.stars) stars.push_back(json{{"polygon", chords_to_json(s.polygon)}});
  return json{{"leaves", chords_to_json(leaves)}, {"shells", shells}, {"stars", stars}, {"exceptions", al.exceptions}};
}

inline json to_json(const RawAnnotatedLamination& raw) {
  json j = to_json(raw.al);
  std::vector<Chord> v = raw.virtuals;
  std::sort(v.begin(), v.end());
  j["virtual"] = chords_to_json(v);
  return j;
}

inline AnnotatedLamination lamination_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "lamination must be a JSON object");
  AnnotatedLamination al;
  if (j.contains("leaves")) al.base.leaves = chords_from_json(j["leaves"]);
  std::sort(al.base.leaves.begin(), al.base.leaves.end());
  if (j.contains("shells")) {
    for (auto& s : j["shells"]) {
      if (!s.is_object() || !s.contains("root")) fail(ErrorKind::Parse, "shell needs a root");
      al.shells.push_back({chord_from_json(s["root"]), s.contains("boundary") ? chords_from_json(s["boundary"]) : std::vector<Chord>{}});
    }
  }
  if (j.contains("stars")) {
    for (auto& s : j["stars"]) {
      if (!s.is_object() || !s.contains("polygon")) fail(ErrorKind::Parse, "star needs a polygon");
      al.stars.push_back({chords_from_json(s["polygon"])});
    }
  }
  if (j.contains("exceptions")) {
    if (!j["exceptions"].is_number_integer()) fail(ErrorKind::Parse, "exceptions must be an integer");
    al.exceptions = j["exceptions"].get<int>();
  }
  return al;
}

inline RawAnnotatedLamination raw_from_json(const json& j) {
  RawAnnotatedLamination raw;
  raw.al = lamination_from_json(j);
  if (j.contains("virtual")) raw.virtuals = chords_from_json(j["virtual"]);
  return raw;
}

}  // namespace prelam
