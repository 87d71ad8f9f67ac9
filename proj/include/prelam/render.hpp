#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "lamination.hpp"

namespace prelam {

struct RenderStyle {
  std::string leaf_stroke = "#1f2a44";
  std::string root_stroke = "#b03a2e";
  std::string shell_fill = "#f5d76e";
  std::string star_fill = "#9ec9e8";
  int size = 512;
};

namespace detail {

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::pair<std::string, std::string> svg_xy(const CirclePoint& p, int size) {
  const double pi = std::acos(-1.0);
  double c = size / 2.0, r = size / 2.0 - 8;
  double t = 2 * pi * p.angle().convert_to<double>();
  return {fixed3(c + r * std::cos(t)), fixed3(c - r * std::sin(t))};
}

}  // namespace detail

// Unit circle, straight chords, dashed roots, shaded shells and stars.
inline std::string render(const AnnotatedLamination& al, const RenderStyle& style = {}) {
  validate(al);
  std::ostringstream out;
  const int n = style.size;
  const std::string c = detail::fixed3(n / 2.0), r = detail::fixed3(n / 2.0 - 8);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << n << "\" height=\"" << n << "\" viewBox=\"0 0 " << n << " " << n
      << "\">\n";
  out << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r << "\" fill=\"none\" stroke=\"" << style.leaf_stroke << "\" stroke-width=\"1.5\"/>\n";
  for (const RegionReport& reg : regions(al)) {
    if (reg.kind != RegionReport::Kind::Shell && reg.kind != RegionReport::Kind::Star) continue;
    std::vector<CirclePoint> vs;
    for (const Chord& ch : reg.chords())
      for (const CirclePoint& x : {ch.a, ch.b})
        if (std::find(vs.begin(), vs.end(), x) == vs.end()) vs.push_back(x);
    std::sort(vs.begin(), vs.end());
    out << "<polygon class=\"" << kind_name(reg.kind) << "\" fill=\"" << (reg.kind == RegionReport::Kind::Shell ? style.shell_fill : style.star_fill)
        << "\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      auto [x, y] = detail::svg_xy(vs[i], n);
      out << (i ? " " : "") << x << "," << y;
    }
    out << "\"/>\n";
  }
  auto line = [&](const Chord& ch, const std::string& cls, const std::string& stroke, bool dashed) {
    auto [x1, y1] = detail::svg_xy(ch.a, n);
    auto [x2, y2] = detail::svg_xy(ch.b, n);
    out << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  };
  std::vector<Chord> leaves = al.base.leaves;
  std::sort(leaves.begin(), leaves.end());
  for (const Chord& ch : leaves) line(ch, "leaf", style.leaf_stroke, false);
  std::vector<Chord> roots = roots_of(al);
  std::sort(roots.begin(), roots.end());
  for (const Chord& ch : roots) line(ch, "root", style.root_stroke, true);
  out << "</svg>\n";
  return out.str();
}

}  // namespace prelam
