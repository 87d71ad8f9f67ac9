#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <prelam/prelam.hpp>

namespace th {

inline prelam::Rational Q(const std::string& s) { return prelam::parse_rational(s); }
inline prelam::Chord C(const std::string& a, const std::string& b) { return prelam::Chord(Q(a), Q(b)); }

inline prelam::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const prelam::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("no error raised");
}

// Corpus laminations that pass the full suite at eps = delta = resolution.
inline std::vector<prelam::AnnotatedLamination> positive_corpus(const prelam::Rational& res, int seeds = 2) {
  std::vector<prelam::AnnotatedLamination> out;
  for (int s = 0; s < seeds; ++s) {
    for (int k = 3; k <= 6; ++k) out.push_back(prelam::gen_prong(k, res, s));
    for (int m = 2; m <= 5; ++m) out.push_back(prelam::gen_shell_family(m, res, s));
    out.push_back(prelam::gen_trivial(res, s));
  }
  auto [raw, c1, c2] = prelam::gen_regular_two_completions(res);
  out.push_back(c1);
  out.push_back(c2);
  return out;
}

}  // namespace th
