#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace prelam;
using th::Q;

namespace {

PlanarPresentation single_edge() {
  return presentation_from_json(json::parse(R"({"points":["a","b"],"edges":[{"ports":[null,null],"samples":["a","b"]}],"switches":[]})"));
}

std::vector<std::vector<std::string>> subsets_up_to(const std::vector<std::string>& pts, std::size_t k) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos == size) {
        std::vector<std::string> s;
        for (auto i : idx) s.push_back(pts[i]);
        out.push_back(s);
        return;
      }
      for (std::size_t i = from; i < pts.size(); ++i) {
        idx[pos] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

}  // namespace

TEST(Axioms, ProngAndSingleEdgePass) {
  EXPECT_TRUE(check_axioms(single_edge()).pass());
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(check_axioms(prong_presentation(k)).pass()) << k;
}

TEST(Axioms, CyclicOfTwoFailsTheSizeItem) {
  auto p = prong_presentation(3);
  p.cyclics[0].points.pop_back();
  auto rep = check_axioms(p);
  EXPECT_FALSE(rep.item_pass(2));
}

TEST(Axioms, LeafSpacesPass) {
  for (auto& al : th::positive_corpus(Q("1/16"), 1)) EXPECT_TRUE(check_axioms(build_leaf_space(al).presentation).pass());
}

TEST(Validate, UnusedPortIsStructural) {
  auto j = json::parse(R"({"points":["a","b"],"edges":[{"ports":["t9",null],"samples":["a","b"]}],"switches":[]})");
  EXPECT_EQ(th::kind_of([&] { validate(presentation_from_json(j)); }), ErrorKind::StructuralError);
}

TEST(Validate, UnknownPointInSwitch) {
  auto p = prong_presentation(3);
  p.switches[0].members[0].point = "nowhere";
  ErrorKind k = th::kind_of([&] { validate(p); });
  EXPECT_TRUE(k == ErrorKind::UnknownPoint || k == ErrorKind::StructuralError);
}

TEST(Components, Examples) {
  auto e = single_edge();
  EXPECT_EQ(components_after_removal(e, {}), 1);
  EXPECT_EQ(components_after_removal(e, {"a"}), 2);
  EXPECT_EQ(components_after_removal(e, {"a", "b"}), 3);
  for (int k = 3; k <= 5; ++k) {
    auto p = prong_presentation(k);
    EXPECT_EQ(components_after_removal(p, p.cyclics[0].points), k);
    EXPECT_EQ(components_after_removal(p, {p.points[0]}), 1);
  }
  EXPECT_EQ(th::kind_of([&] { components_after_removal(e, {"zz"}); }), ErrorKind::UnknownPoint);
}

TEST(Components, MatchUnionFindOracle) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 3000; ++seed) {
    auto p = gen_presentation(seed, 4);
    if (p.points.size() > 12) continue;
    for (auto& s : subsets_up_to(p.points, 3)) {
      ASSERT_EQ(components_after_removal(p, s), oracle::components(p, {s.begin(), s.end()})) << seed;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Isomorphism, ReflexiveAndSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = gen_presentation(seed, 6);
    auto self = isomorphic(p, p);
    ASSERT_TRUE(self);
    EXPECT_TRUE(is_isomorphism(p, p, *self));
  }
  for (auto& al : th::positive_corpus(Q("1/16"), 1)) {
    auto p1 = build_leaf_space(al).presentation;
    auto p2 = build_leaf_space(rotate(al, Q("1/7"))).presentation;
    auto f = isomorphic(p1, p2);
    ASSERT_TRUE(f);
    EXPECT_TRUE(is_isomorphism(p1, p2, *f));
    EXPECT_TRUE(is_isomorphism(p2, p1, f->inverse()));
  }
}

TEST(Isomorphism, DistinguishesDegreeAndOrder) {
  EXPECT_FALSE(isomorphic(prong_presentation(3), prong_presentation(4)));
  auto p = prong_presentation(4);
  auto q = p;
  std::reverse(q.cyclics[0].points.begin() + 1, q.cyclics[0].points.end());
  // Same cyclic order read backwards with the switches left as they were.
  EXPECT_FALSE(isomorphic(p, q));
  EXPECT_FALSE(isomorphic(p, prong_presentation(4, "R")));
}

TEST(Orientations, Counts) {
  EXPECT_EQ(orientations(single_edge()).assignments.size(), 2u);
  auto shell = build_leaf_space(gen_shell_family(2, Q("1/8"))).presentation;
  EXPECT_EQ(orientations(shell).assignments.size(), 2u);
  EXPECT_EQ(orientations(prong_presentation(4)).assignments.size(), 2u);
  EXPECT_EQ(orientations(prong_presentation(3)).assignments.size(), 0u);
  auto flipped = prong_presentation(4);
  flipped.cyclics[0].side = "LRLL";
  auto r = orientations(flipped);
  EXPECT_TRUE(r.assignments.empty());
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Orientations, CoherentOrientationKeepsIsomorphismClass) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = gen_presentation(seed, 6);
    EXPECT_TRUE(isomorphic(p, coherently_oriented(p))) << seed;
  }
}

TEST(Json, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = gen_presentation(seed);
    EXPECT_EQ(presentation_from_json(to_json(p)), p);
  }
}
