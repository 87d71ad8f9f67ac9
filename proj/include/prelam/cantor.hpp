#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace prelam {

inline bool in_cantor(const Rational& q) {
  if (q < 0 || q > 1) fail(ErrorKind::OutOfRange, "Cantor membership needs 0 <= q <= 1, got " + to_string(q));
  std::set<Rational> seen;
  Rational x = q;
  while (true) {
    if (x == 0 || x == 1) return true;
    if (!seen.insert(x).second) return true;
    Rational t = x * 3;
    if (t == 1 || t == 2) return true;
    if (t > 1 && t < 2) return false;
    x = t < 1 ? t : t - 2;
  }
}

// p/q in lowest terms with q > 0.
struct Level {
  Integer p, q;
  explicit Level(const Rational& r) : p(num(r)), q(den(r)) {}
};

inline bool in_K(const Rational& x, const Rational& y) {
  Level lv(y);
  // x - 2n in [0,1] pins down n.
  Integer n = floor_div(num(x), den(x) * 2);
  Rational u = x - Rational(n * 2);
  if (u > 1) return false;
  Integer an = n < 0 ? Integer(-n) : n;
  return an >= lv.q && in_cantor(u);
}

namespace detail {

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Integer d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline int psi(const Rational& r) {
  Integer q = den(r);
  if (q == 1 || q % 2 == 0) return 0;
  Integer lpf = q;
  for (Integer d = 3; d * d <= q; d += 2)
    if (q % d == 0) {
      lpf = d;
      break;
    }
  int index = 1;
  for (Integer c = 3; c <= lpf; c += 2)
    if (detail::is_prime(c)) ++index;
  return 1 + index;
}

inline int theta(int phi) {
  if (phi < 3) fail(ErrorKind::DomainError, "theta needs phi >= 3, got " + std::to_string(phi));
  return phi % 2 == 0 ? phi / 2 : (phi + 1) / 2;
}

// ---------------------------------------------------------------------------
// Gaps of the middle-thirds Cantor set, indexed by dyadic rationals in (0,1):
// the j-th gap of depth d (left to right) has index (2j+1)/2^d.

struct CantorGap {
  Rational lo, hi;
};

inline Integer pow3(int d) {
  Integer p = 1;
  for (int i = 0; i < d; ++i) p *= 3;
  return p;
}

inline CantorGap gap_by_index(const Rational& s) {
  if (s <= 0 || s >= 1) fail(ErrorKind::NotAGap, "index must lie in (0,1), got " + to_string(s));
  Integer d2 = den(s);
  int d = 0;
  while (d2 > 1) {
    if (d2 % 2 != 0) fail(ErrorKind::NotAGap, "index is not dyadic: " + to_string(s));
    d2 /= 2;
    ++d;
  }
  Integer j = (num(s) - 1) / 2;
  // Left endpoint in base 3: binary digits of j as 0/2, then a final 1.
  Integer l = 0;
  for (int i = d - 2; i >= 0; --i) l = l * 3 + (((j >> i) & 1) != 0 ? 2 : 0);
  l = l * 3 + 1;
  Integer p = pow3(d);
  return {Rational(l, p), Rational(l + 1, p)};
}

inline Rational gap_index(const Rational& lo, const Rational& hi) {
  auto not_gap = [&]() -> Rational { fail(ErrorKind::NotAGap, "(" + to_string(lo) + "," + to_string(hi) + ") is not a Cantor gap"); };
  if (!(lo > 0 && hi < 1 && lo < hi)) return not_gap();
  Rational len = hi - lo;
  if (num(len) != 1) return not_gap();
  Integer p = den(len);
  int d = 0;
  for (Integer t = p; t > 1; t /= 3) {
    if (t % 3 != 0) return not_gap();
    ++d;
  }
  Rational scaled = lo * Rational(p);
  if (den(scaled) != 1) return not_gap();
  Integer l = num(scaled);
  if (l % 3 != 1) return not_gap();
  l /= 3;
  Integer j = 0;
  for (int i = 0; i < d - 1; ++i) {
    int digit = static_cast<int>(l % 3);
    if (digit == 1) return not_gap();
    if (digit == 2) j += Integer(1) << i;
    l /= 3;
  }
  return Rational(j * 2 + 1, Integer(1) << d);
}

// Increasing bijection from dyadics in (0,1) onto Q: the Stern-Brocot tree
// rooted at 0, shifted by 1/3.
inline Rational gap_rational(const Rational& s) {
  gap_by_index(s);
  std::optional<Rational> lo, hi;
  Rational node(1, 2), step(1, 4), val(0);
  auto next = [&]() -> Rational {
    if (!lo && !hi) return Rational(0);
    if (!lo) return *hi - 1;
    if (!hi) return *lo + 1;
    return Rational(num(*lo) + num(*hi), den(*lo) + den(*hi));
  };
  while (node != s) {
    if (s < node) {
      hi = val;
      node -= step;
    } else {
      lo = val;
      node += step;
    }
    step /= 2;
    val = next();
  }
  return val + Rational(1, 3);
}

// ---------------------------------------------------------------------------
// Slices of K at level r.

struct GapLabel {
  enum class Kind { Central, CantorCopy, InterBlock };
  Kind kind = Kind::Central;
  long n = 0;        // block of a Cantor copy
  Rational s = 0;    // dyadic index of a Cantor copy
  long k = 0;        // inter-block gap ]2k-1, 2k[
  Rational lo, hi;   // open interval
  Rational r;        // level

  friend bool operator==(const GapLabel& x, const GapLabel& y) {
    return x.kind == y.kind && x.n == y.n && x.s == y.s && x.k == y.k && x.lo == y.lo && x.hi == y.hi && x.r == y.r;
  }
};

inline const char* kind_name(GapLabel::Kind k) {
  switch (k) {
    case GapLabel::Kind::Central: return "central";
    case GapLabel::Kind::CantorCopy: return "cantor-copy";
    case GapLabel::Kind::InterBlock: return "inter-block";
  }
  return "?";
}

inline GapLabel central_gap(const Rational& r) {
  long q = static_cast<long>(den(r));
  GapLabel g;
  g.kind = GapLabel::Kind::Central;
  g.lo = Rational(-2 * q + 1);
  g.hi = Rational(2 * q);
  g.r = r;
  return g;
}

// Components of the slice complement meeting [lo, hi], in increasing order,
// with Cantor-copy gaps down to the given depth.
inline std::vector<GapLabel> slice_gaps(const Rational& r, const Rational& lo, const Rational& hi, int depth) {
  if (!(lo < hi)) fail(ErrorKind::DomainError, "window needs lo < hi");
  if (depth < 0) fail(ErrorKind::DomainError, "depth must be non-negative");
  long q = static_cast<long>(den(r));
  auto meets = [&](const Rational& a, const Rational& b) { return a < hi && b > lo; };
  std::vector<GapLabel> out;
  GapLabel c = central_gap(r);
  if (meets(c.lo, c.hi)) out.push_back(c);
  long nmin = static_cast<long>(floor((lo - 1) / 2)), nmax = static_cast<long>(floor(hi / 2)) + 1;
  for (long n = nmin; n <= nmax; ++n) {
    if (std::abs(n) < q) continue;
    // Inter-block gap on the left of block n.
    long k = n;
    if ((k >= q + 1 || k <= -q) && meets(Rational(2 * k - 1), Rational(2 * k))) {
      GapLabel g;
      g.kind = GapLabel::Kind::InterBlock;
      g.k = k;
      g.lo = Rational(2 * k - 1);
      g.hi = Rational(2 * k);
      g.r = r;
      out.push_back(g);
    }
    if (!meets(Rational(2 * n), Rational(2 * n + 1))) continue;
    for (int d = 1; d <= depth; ++d) {
      Integer two_d = Integer(1) << d;
      Integer count = Integer(1) << (d - 1);
      for (Integer j = 0; j < count; ++j) {
        Rational s(j * 2 + 1, two_d);
        CantorGap cg = gap_by_index(s);
        Rational a = cg.lo + 2 * n, b = cg.hi + 2 * n;
        if (!meets(a, b)) continue;
        GapLabel g;
        g.kind = GapLabel::Kind::CantorCopy;
        g.n = n;
        g.s = s;
        g.lo = a;
        g.hi = b;
        g.r = r;
        out.push_back(g);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.lo < y.lo; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int phi(const GapLabel& g) {
  switch (g.kind) {
    case GapLabel::Kind::Central: return psi(g.r);
    case GapLabel::Kind::CantorCopy: return psi(gap_rational(g.s));
    case GapLabel::Kind::InterBlock: return 0;
  }
  return 0;
}

struct MarkedPoint {
  Rational x;
  GapLabel component;
};

inline std::optional<MarkedPoint> marked_point(const GapLabel& g) {
  if (phi(g) == 0) return std::nullopt;
  if (g.kind == GapLabel::Kind::Central) {
    Level lv(g.r);
    Rational x = lv.p % 2 == 0 ? Rational(-2 * lv.q + 2) : Rational(2 * lv.q - 1);
    return MarkedPoint{x, g};
  }
  return MarkedPoint{(g.lo + g.hi) / 2, g};
}

// ---------------------------------------------------------------------------

struct SliceOrderReport {
  bool pass = true;
  bool q_like = true;
  std::vector<std::string> witnesses;
  std::map<long, std::set<int>> psi_by_block;  // blocks lying inside the window
  std::set<int> left_of_centre, right_of_centre;
};

inline const std::vector<int>& default_requested_psi() {
  static const std::vector<int> v{0, 3};
  return v;
}

inline SliceOrderReport slice_order_report(const Rational& r, const Rational& lo, const Rational& hi, int depth,
                                           const std::vector<int>& requested = default_requested_psi()) {
  SliceOrderReport rep;
  if (depth <= 0) return rep;
  auto gaps = slice_gaps(r, lo, hi, depth);
  std::map<long, std::vector<const GapLabel*>> blocks;
  for (auto& g : gaps)
    if (g.kind == GapLabel::Kind::CantorCopy) blocks[g.n].push_back(&g);
  for (auto& [n, gs] : blocks) {
    // gs is sorted by position; coarse gaps must be separated by fine ones.
    auto fine = [&](const GapLabel* g) { return den(g->s) == (Integer(1) << depth); };
    if (fine(gs.front()) == false || fine(gs.back()) == false) {
      rep.q_like = false;
      rep.witnesses.push_back("block " + std::to_string(n) + " has an extreme coarse gap");
    }
    for (std::size_t i = 0; i + 1 < gs.size(); ++i)
      if (!fine(gs[i]) && !fine(gs[i + 1])) {
        rep.q_like = false;
        rep.witnesses.push_back("adjacent coarse gaps " + to_string(gs[i]->s) + " and " + to_string(gs[i + 1]->s) + " in block " + std::to_string(n));
      }
    if (Rational(2 * n) >= lo && Rational(2 * n + 1) <= hi) {
      auto& found = rep.psi_by_block[n];
      for (auto* g : gs) found.insert(phi(*g));
      for (int want : requested)
        if (!found.count(want))
          rep.witnesses.push_back("psi value " + std::to_string(want) + " missing in block " + std::to_string(n));
    }
  }
  Rational centre = (lo + hi) / 2;
  for (auto& g : gaps) {
    auto m = marked_point(g);
    if (!m) continue;
    (m->x < centre ? rep.left_of_centre : rep.right_of_centre).insert(phi(g));
  }
  rep.pass = rep.witnesses.empty();
  return rep;
}

}  // namespace prelam
