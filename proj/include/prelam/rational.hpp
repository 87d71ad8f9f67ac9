#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace prelam {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& r) { return floor_div(num(r), den(r)); }

// r - floor(r), in [0,1)
inline Rational frac(const Rational& r) {
  if (r >= 0 && r < 1) return r;
  if (r >= -1 && r < 0) return r + 1;
  return r - Rational(floor(r));
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view s) {
  auto bad = [&]() -> Rational { fail(ErrorKind::Parse, "bad rational '" + std::string(s) + "'"); };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  auto digits = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string_view n = s.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits(n, true) || !digits(d, false)) return bad();
  std::string ns(n);
  if (ns[0] == '+') ns.erase(0, 1);
  Integer ni(ns), di{std::string(d)};
  if (di == 0) return bad();
  return Rational(ni, di);
}

}  // namespace prelam
