#pragma once

#include <map>
#include <set>
#include <vector>

#include "properties.hpp"

namespace prelam {

inline AnnotatedLamination complete(const RawAnnotatedLamination& raw) {
  validate(raw);
  const AnnotatedLamination& in = raw.al;
  std::vector<Chord> all = chord_system(in);
  const int nfixed = static_cast<int>(all.size());
  const int nleaves = static_cast<int>(in.base.leaves.size());
  all.insert(all.end(), raw.virtuals.begin(), raw.virtuals.end());
  Subdivision sub(all);

  std::set<int> claimed;
  for (auto& s : in.shells) claimed.insert(face_with_chords(sub, shell_chords(s)));
  for (auto& st : in.stars) claimed.insert(face_with_chords(sub, st.polygon));
  auto open_face = [&](int f) { return sub.face_size(f) >= 3 && !claimed.count(f); };
  auto region_text = [&](int f) {
    std::string s;
    for (int c : sub.face_chords(f)) s += sub.chord(c).str();
    return s;
  };

  std::vector<Chord> promoted;
  std::map<int, std::vector<int>> virtual_of;
  for (int v = nfixed; v < sub.chord_count(); ++v) {
    int fi = sub.inner_face(v), fo = sub.outer_face(v);
    bool gi = open_face(fi), go = open_face(fo);
    if (gi && go)
      fail(ErrorKind::PreconditionViolated, "virtual chord " + sub.chord(v).str() + " bounds two regions");
    if (!gi && !go) promoted.push_back(sub.chord(v));
    else virtual_of[gi ? fi : fo].push_back(v);
  }

  AnnotatedLamination out = in;
  for (int f = 0; f < sub.face_count(); ++f) {
    if (!open_face(f)) continue;
    auto it = virtual_of.find(f);
    if (it == virtual_of.end())
      fail(ErrorKind::PreconditionViolated, "region " + region_text(f) + " has no virtual boundary component");
    int root = it->second.front();
    for (int v : it->second) {
      Rational gv = minor_arc_gap(sub.chord(v)), gr = minor_arc_gap(sub.chord(root));
      if (gv > gr || (gv == gr && sub.chord(v) < sub.chord(root))) root = v;
    }
    ShellSpec s{sub.chord(root), {}};
    for (int c : sub.face_chords(f)) {
      if (c == root) continue;
      if (c >= nleaves && c < nfixed)
        fail(ErrorKind::PreconditionViolated, "region " + region_text(f) + " touches the root of another shell");
      if (c >= nfixed) promoted.push_back(sub.chord(c));
      s.boundary.push_back(sub.chord(c));
    }
    s.boundary = clockwise_sorted(shell_side(s), s.boundary);
    out.shells.push_back(std::move(s));
  }
  out.base.leaves.insert(out.base.leaves.end(), promoted.begin(), promoted.end());
  out = canonical(out);

  Verdict few = check_few_common_ends(out);
  if (!few.pass) fail(ErrorKind::PreconditionViolated, "few common ends: " + few.witnesses.front().message);
  return out;
}

// Shells forgotten, roots turned back into virtual chords.
inline RawAnnotatedLamination raw_form(const AnnotatedLamination& al) {
  RawAnnotatedLamination raw;
  raw.al = al;
  raw.al.shells.clear();
  raw.virtuals = roots_of(al);
  return raw;
}

}  // namespace prelam
