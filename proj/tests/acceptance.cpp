// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace prelam;
using th::Q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s  %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

std::vector<AnnotatedLamination> lamination_corpus() {
  auto out = th::positive_corpus(Q("1/16"), 3);
  for (std::uint64_t s = 0; s < 10; ++s) out.push_back(complete(gen_random_raw(s, Q("1/16")).raw));
  return out;
}

std::vector<std::vector<std::string>> subsets_up_to(const std::vector<std::string>& pts, std::size_t k) {
  std::vector<std::vector<std::string>> out{{}};
  std::vector<std::string> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < pts.size(); ++i) {
      cur.push_back(pts[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Rational> levels_up_to(long qmax) {
  std::vector<Rational> out;
  for (long q = 1; q <= qmax; ++q)
    for (long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

}  // namespace

int main() {
  criterion("crossing = interleaving (10000)", 1.0, [] {
    Outcome o;
    Rng rng(2024);
    int done = 0;
    while (done < 10000) {
      auto pt = [&] {
        long d = 1 + static_cast<long>(rng.below(1000));
        return CirclePoint(Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(d))), d));
      };
      CirclePoint a = pt(), b = pt(), c = pt(), d = pt();
      if (a == b || c == d) continue;
      Chord x(a, b), y(c, d);
      if (chords_cross(x, y) != oracle::crosses(x, y)) o.fail("mismatch on " + x.str() + " " + y.str());
      ++done;
    }
    o.detail = o.pass ? "0 mismatches" : o.detail;
    return o;
  });

  criterion("regions = n+1 (grid 16, random 200)", 10.0, [] {
    Outcome o;
    long systems = 0;
    oracle::for_each_noncrossing(16, [&](const std::vector<Chord>& cs) {
      if (regions(FiniteLamination{cs}).size() != cs.size() + 1) o.fail("grid system of " + std::to_string(cs.size()) + " chords");
      ++systems;
    });
    if (systems != 853467) o.fail("enumerated " + std::to_string(systems) + " grid systems");
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
      int n = 1 + static_cast<int>(rng.below(200));
      auto cs = oracle::random_noncrossing(rng, n);
      if (static_cast<int>(regions(FiniteLamination{cs}).size()) != n + 1) o.fail("random system with n=" + std::to_string(n));
    }
    if (o.pass) o.detail = std::to_string(systems) + " grid systems, 200 random";
    return o;
  });

  criterion("components = reachability oracle", 0, [] {
    Outcome o;
    std::vector<PlanarPresentation> pool;
    for (std::uint64_t s = 0; s < 400; ++s) pool.push_back(gen_presentation(s, 6));
    for (int k = 3; k <= 5; ++k) pool.push_back(prong_presentation(k));
    for (auto& al : th::positive_corpus(Q("1/8"), 1)) pool.push_back(build_leaf_space(al).presentation);
    long checks = 0, used = 0;
    for (auto& p : pool) {
      if (p.points.size() > 12) continue;
      ++used;
      for (auto& s : subsets_up_to(p.points, 3)) {
        if (components_after_removal(p, s) != oracle::components(p, {s.begin(), s.end()})) o.fail("mismatch");
        ++checks;
      }
    }
    for (int k = 3; k <= 5; ++k) {
      auto p = prong_presentation(k);
      if (components_after_removal(p, p.cyclics[0].points) != k) o.fail("prong " + std::to_string(k));
    }
    if (o.pass) o.detail = std::to_string(used) + " presentations, " + std::to_string(checks) + " removal sets";
    return o;
  });

  criterion("psi/theta values, central gaps", 0, [] {
    Outcome o;
    if (psi(Q("1/2")) != 0) o.fail("psi(1/2)");
    if (psi(Q("1/3")) != 3) o.fail("psi(1/3)");
    if (theta(3) != 2 || theta(4) != 2 || theta(5) != 3) o.fail("theta");
    for (auto& r : levels_up_to(6)) {
      long q = static_cast<long>(den(r));
      auto g = central_gap(r);
      if (g.lo != Rational(-2 * q + 1) || g.hi != Rational(2 * q)) o.fail("central gap at " + to_string(r));
    }
    return o;
  });

  criterion("slice gaps = subtraction oracle", 30.0, [] {
    Outcome o;
    long total = 0;
    for (auto& r : levels_up_to(6)) {
      auto got = slice_gaps(r, Q("-12"), Q("12"), 12);
      auto want = oracle::slice_complement(r, Q("-12"), Q("12"), 12);
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i].lo == want[i].first && got[i].hi == want[i].second;
      if (!same) o.fail("level " + to_string(r));
      total += static_cast<long>(got.size());
    }
    if (o.pass) o.detail = std::to_string(total) + " gaps over " + std::to_string(levels_up_to(6).size()) + " levels";
    return o;
  });

  criterion("embedding suite (100)", 0, [] {
    Outcome o;
    int ok = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto p = gen_presentation(s, 20);
      bool shape = p.switches.size() <= 20;
      for (auto& c : p.cyclics) shape = shape && c.points.size() <= 5;
      if (!shape) o.fail("seed " + std::to_string(s) + " outside the corpus bounds");
      UniversalModel m;
      auto v = verify_embedding(p, m, embed(p, m));
      if (v.pass) ++ok;
      else o.fail("seed " + std::to_string(s) + ": " + v.witnesses.front());
    }
    if (o.pass) o.detail = std::to_string(ok) + "/100";
    return o;
  });

  criterion("completion suite (100)", 0, [] {
    Outcome o;
    int ok = 0, rejected = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto rr = gen_random_raw(s, Q("1/16"));
      try {
        if (classify(complete(rr.raw), rr.eps, rr.delta).pass()) ++ok;
        else o.fail("seed " + std::to_string(s) + " fails classify");
      } catch (const Error& e) {
        o.fail("seed " + std::to_string(s) + ": " + e.what());
      }
      auto bad = gen_random_raw(s, Q("1/16"), true);
      try {
        complete(bad.raw);
        o.fail("counterexample " + std::to_string(s) + " accepted");
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PreconditionViolated) ++rejected;
        else o.fail("counterexample " + std::to_string(s) + ": " + e.what());
      }
    }
    if (o.pass) o.detail = std::to_string(ok) + "/100 complete, " + std::to_string(rejected) + "/100 counterexamples rejected";
    return o;
  });

  criterion("rotation round trip (1/7)", 0, [] {
    Outcome o;
    const Rational t = Q("1/7");
    int ok = 0;
    auto corpus = lamination_corpus();
    for (auto& al : corpus) {
      auto rot = rotate(al, t);
      auto p1 = build_leaf_space(al).presentation, p2 = build_leaf_space(rot).presentation;
      bool recovered = false;
      for (auto& iso : all_isomorphisms(p1, p2)) {
        std::map<CirclePoint, CirclePoint> f;
        try {
          f = induced_circle_map(iso, al, rot);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotMonotone) throw;
          continue;
        }
        auto ends = leaf_endpoints(al);
        bool exact = f.size() == ends.size();
        for (auto& x : ends) exact = exact && f.count(x) && f.at(x) == rotate(x, t);
        recovered = exact;
        break;
      }
      if (recovered) ++ok;
      else o.fail("rotation not recovered on " + std::to_string(al.base.leaves.size()) + "-leaf lamination");
    }
    if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(corpus.size());
    return o;
  });

  criterion("negative suite (50 per mutation)", 0, [] {
    Outcome o;
    struct Instance {
      AnnotatedLamination al;
      Rational eps, delta;
    };
    std::vector<Instance> pool;
    for (std::uint64_t s = 0; s < 20; ++s) {
      for (int k = 3; k <= 7; ++k) pool.push_back({gen_prong(k, Q("1/16"), s), Q("1/16"), Q("1/16")});
      for (int m = 2; m <= 5; ++m) pool.push_back({gen_shell_family(m, Q("1/16"), s), Q("1/16"), Q("1/16")});
    }
    for (std::uint64_t s = 0; s < 60; ++s) {
      auto rr = gen_random_raw(s, Q("1/16"));
      pool.push_back({complete(rr.raw), rr.eps, rr.delta});
    }
    std::string summary;
    for (MutationKind k : {MutationKind::ShareStarEdge, MutationKind::ShrinkRoot, MutationKind::BreakOrder, MutationKind::DropAnnotation}) {
      int flipped = 0;
      for (auto& in : pool) {
        if (flipped == 50) break;
        AnnotatedLamination bad;
        try {
          bad = mutate(in.al, k, in.delta);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotApplicable) o.fail(std::string(mutation_name(k)) + ": " + e.what());
          continue;
        }
        try {
          auto rep = classify(bad, in.eps, in.delta);
          if (rep.failing() == std::vector<std::string>{targeted_property(k)}) ++flipped;
          else o.fail(std::string(mutation_name(k)) + " flipped " + json(rep.failing()).dump());
        } catch (const Error& e) {
          o.fail(std::string(mutation_name(k)) + " raised " + e.what());
        }
      }
      if (flipped < 50) o.fail(std::string(mutation_name(k)) + " only " + std::to_string(flipped) + " instances");
      summary += std::string(summary.empty() ? "" : ", ") + mutation_name(k) + " " + std::to_string(flipped) + "/50";
    }
    if (o.pass) o.detail = summary;
    return o;
  });

  return failures == 0 ? 0 : 1;
}
