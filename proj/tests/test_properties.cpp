#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace prelam;
using th::C;
using th::Q;

namespace {

// Three triangles, each with a short root and two long leaves.
AnnotatedLamination three_bad_shells() {
  AnnotatedLamination al;
  const char* v[3][3] = {{"0", "1/100", "1/3"}, {"1/3", "34/100", "2/3"}, {"2/3", "67/100", "0"}};
  for (auto& t : v) {
    Chord root = C(t[0], t[1]);
    std::vector<Chord> b{C(t[1], t[2]), C(t[0], t[2])};
    for (auto& c : b)
      if (std::find(al.base.leaves.begin(), al.base.leaves.end(), c) == al.base.leaves.end()) al.base.leaves.push_back(c);
    ShellSpec s{root, {}};
    s.boundary = clockwise_sorted(Arc(root.b, root.a), b);
    al.shells.push_back(s);
  }
  return al;
}

}  // namespace

TEST(Classify, ProngPassesEverything) {
  auto rep = classify(gen_prong(3, Q("1/16")), Q("1/16"), Q("1/16"));
  EXPECT_TRUE(rep.pass()) << to_json(rep).dump();
  EXPECT_EQ(rep.verdicts.size(), 6u);
}

TEST(Classify, SharedStarEdgeFailsStarUniqueness) {
  auto al = gen_prong(3, Q("1/16"));
  auto bad = mutate(al, MutationKind::ShareStarEdge);
  auto rep = classify(bad, Q("1/16"), Q("1/16"));
  EXPECT_EQ(rep.failing(), std::vector<std::string>{"star-uniqueness"});
}

TEST(Classify, RootCrossingALeafIsInvalid) {
  auto al = gen_shell_family(2, Q("1/16"));
  al.shells[0].root = C("1/100", "3/5");
  EXPECT_EQ(th::kind_of([&] { classify(al, Q("1/16"), Q("1/16")); }), ErrorKind::InvalidLamination);
}

TEST(Density, GapsAgainstResolution) {
  AnnotatedLamination al;
  EXPECT_FALSE(check_density(al, Q("1/2")).pass);
  al.base.leaves = {C("0", "1/2")};
  EXPECT_TRUE(check_density(al, Q("1/2")).pass);
  auto v = check_density(al, Q("1/3"));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witnesses.size(), 2u);
}

TEST(NoBadAccumulation, CalibratedShellFamilyPasses) {
  for (int m = 2; m <= 5; ++m) EXPECT_TRUE(check_no_bad_accumulation(gen_shell_family(m, Q("1/32")), Q("1/8")).pass);
}

TEST(NoBadAccumulation, ShortRootsFailWithOneWitnessEach) {
  auto al = three_bad_shells();
  ASSERT_NO_THROW(validate(al));
  auto v = check_no_bad_accumulation(al, Q("1/8"));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witnesses.size(), 3u);
  al.exceptions = 2;
  EXPECT_FALSE(check_no_bad_accumulation(al, Q("1/8")).pass);
  al.exceptions = 3;
  EXPECT_TRUE(check_no_bad_accumulation(al, Q("1/8")).pass);
}

TEST(NoBadAccumulation, SmallRegionsAreIgnored) {
  auto al = three_bad_shells();
  EXPECT_TRUE(check_no_bad_accumulation(al, Q("1/2")).pass);
}

TEST(NoBadAccumulation, EmptyPasses) { EXPECT_TRUE(check_no_bad_accumulation(AnnotatedLamination{}, Q("1/8")).pass); }

TEST(NoBadAccumulation, StarLongEdgesMustBeAdjacent) {
  // Quadrilateral 0, 1/10, 1/2, 6/10: the long edges (1/10,1/2) and (6/10,0) are opposite.
  AnnotatedLamination al;
  std::vector<Chord> poly{C("0", "1/10"), C("1/10", "1/2"), C("1/2", "6/10"), C("6/10", "0")};
  al.base.leaves = poly;
  al.stars.push_back({poly});
  ASSERT_NO_THROW(validate(al));
  EXPECT_FALSE(check_no_bad_accumulation(al, Q("1/8")).pass);
  // Kite 0, 1/10, 1/2, 9/10: long edges (1/10,1/2) and (1/2,9/10) are adjacent.
  AnnotatedLamination ok;
  std::vector<Chord> kite{C("0", "1/10"), C("1/10", "1/2"), C("1/2", "9/10"), C("9/10", "0")};
  ok.base.leaves = kite;
  ok.stars.push_back({kite});
  EXPECT_TRUE(check_no_bad_accumulation(ok, Q("1/8")).pass);
}

TEST(FewCommonEnds, SuccessiveShellComponentsPass) {
  AnnotatedLamination al;
  al.base.leaves = {C("0", "1/4"), C("0", "3/4")};
  ShellSpec s{C("1/4", "3/4"), {}};
  s.boundary = clockwise_sorted(Arc(Q("3/4"), Q("1/4")), al.base.leaves);
  al.shells.push_back(s);
  ASSERT_NO_THROW(validate(al));
  EXPECT_TRUE(check_few_common_ends(al).pass);
}

TEST(FewCommonEnds, ThreeShellLeavesAtOnePointFail) {
  AnnotatedLamination al;
  al.base.leaves = {C("0", "1/4"), C("0", "1/2"), C("0", "3/4")};
  ShellSpec s{C("1/8", "1/4"), {}};
  s.boundary = clockwise_sorted(Arc(Q("1/4"), Q("1/8")), al.base.leaves);
  al.shells.push_back(s);
  ASSERT_NO_THROW(validate(al));
  auto v = check_few_common_ends(al);
  EXPECT_FALSE(v.pass);
  bool count_witness = false;
  for (auto& w : v.witnesses) count_witness = count_witness || w.data.contains("shell");
  EXPECT_TRUE(count_witness);
}

TEST(FewCommonEnds, DistinctEndpointsPass) {
  AnnotatedLamination al;
  al.base.leaves = {C("0", "1/2"), C("1/8", "3/8"), C("5/8", "7/8")};
  EXPECT_TRUE(check_few_common_ends(al).pass);
}

TEST(FewCommonEnds, FanOfPlainLeavesFails) {
  AnnotatedLamination al;
  al.base.leaves = {C("0", "1/4"), C("0", "1/2")};
  EXPECT_FALSE(check_few_common_ends(al).pass);
}

TEST(Coverage, UnannotatedPolygonFails) {
  AnnotatedLamination al;
  al.base.leaves = {C("0", "1/3"), C("1/3", "2/3"), C("0", "2/3")};
  auto v = check_coverage(al);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witnesses.size(), 1u);
}

TEST(Classify, RotationEquivariant) {
  Rng rng(4);
  std::vector<AnnotatedLamination> pool = th::positive_corpus(Q("1/16"), 1);
  for (auto& al : th::positive_corpus(Q("1/16"), 1))
    for (MutationKind k : {MutationKind::ShareStarEdge, MutationKind::ShrinkRoot, MutationKind::BreakOrder, MutationKind::DropAnnotation}) {
      try {
        pool.push_back(mutate(al, k, Q("1/16")));
      } catch (const Error&) {
      }
    }
  for (auto& al : pool) {
    Rational t(static_cast<long>(1 + rng.below(50)), 51);
    auto a = classify(al, Q("1/16"), Q("1/16")), b = classify(rotate(al, t), Q("1/16"), Q("1/16"));
    for (auto& [name, v] : a.verdicts) {
      EXPECT_EQ(v.pass, b.verdicts.at(name).pass) << name;
      EXPECT_EQ(v.witnesses.size(), b.verdicts.at(name).witnesses.size()) << name;
    }
  }
}

TEST(Classify, WitnessesReplay) {
  std::vector<AnnotatedLamination> pool{three_bad_shells()};
  for (auto& al : th::positive_corpus(Q("1/16"), 2))
    for (MutationKind k : {MutationKind::ShareStarEdge, MutationKind::ShrinkRoot, MutationKind::BreakOrder, MutationKind::DropAnnotation}) {
      try {
        pool.push_back(mutate(al, k, Q("1/16")));
      } catch (const Error&) {
      }
    }
  int replayed = 0;
  for (auto& al : pool) {
    auto rep = classify(al, Q("1/32"), Q("1/16"));
    for (auto& [name, v] : rep.verdicts) {
      EXPECT_EQ(v.pass, v.witnesses.empty());
      for (auto& w : v.witnesses) {
        EXPECT_TRUE(replay_witness(al, w, Q("1/32"), Q("1/16"))) << w.message;
        ++replayed;
      }
    }
  }
  EXPECT_GT(replayed, 20);
}
