#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace prelam;
using th::Q;

namespace {

bool has_prefix(const EmbedVerdict& v, const std::string& prefix) {
  return std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](auto& w) { return w.rfind(prefix, 0) == 0; });
}

std::vector<Rational> labels(const UniversalModel& m, int b) {
  std::vector<Rational> out;
  for (auto& [l, s] : m.branching(b).slots) out.push_back(l);
  return out;
}

}  // namespace

TEST(Model, NewBranchingHasHomeSlot) {
  UniversalModel m;
  int line = m.new_line();
  int b = m.new_branching(ModelPoint{line, Q("3/2")}, 1);
  EXPECT_EQ(labels(m, b), std::vector<Rational>{Q("1/2")});
  EXPECT_EQ(m.branching(b).slots.at(Q("1/2")).point, (ModelPoint{line, Q("3/2")}));
  EXPECT_EQ(address(ModelPoint{line, Q("3/2")}), "L0/p3/2");
  EXPECT_EQ(m.slot_address(b, Q("1/2")), "B0/s1/2");
}

TEST(Model, InsertBetweenExamples) {
  UniversalModel m;
  int b = m.new_branching(ModelPoint{m.new_line(), Q("0")}, 1);
  EXPECT_EQ(m.insert_between(b, Q("1/2"), std::nullopt), Q("3/2"));
  EXPECT_EQ(m.insert_between(b, std::nullopt, Q("1/2")), Q("-1/2"));
  EXPECT_EQ(m.insert_between(b, Q("1/2"), Q("3/2")), Q("1"));
  EXPECT_EQ(m.fresh_label(b, Q("1/4"), Q("1/2")), Q("3/8"));
  EXPECT_EQ(labels(m, b), (std::vector<Rational>{Q("-1/2"), Q("1/2"), Q("1"), Q("3/2")}));
}

TEST(Model, BadBounds) {
  UniversalModel m;
  int b = m.new_branching(ModelPoint{m.new_line(), Q("0")}, 1);
  EXPECT_EQ(th::kind_of([&] { m.insert_between(b, Q("1"), Q("1/2")); }), ErrorKind::BadBounds);
  EXPECT_EQ(th::kind_of([&] { m.insert_between(b, Q("1/2"), Q("1/2")); }), ErrorKind::BadBounds);
  EXPECT_EQ(th::kind_of([&] { m.insert_between(7, std::nullopt, std::nullopt); }), ErrorKind::BadBounds);
  EXPECT_EQ(th::kind_of([&] { m.slot_address(b, Q("5")); }), ErrorKind::BadBounds);
}

TEST(Model, InsertGrowsByOneAndKeepsOrder) {
  UniversalModel m;
  int b = m.new_branching(ModelPoint{m.new_line(), Q("0")}, 1);
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    auto before = labels(m, b);
    std::optional<Rational> lo, hi;
    std::size_t pick = rng.below(before.size() + 1);
    if (pick > 0) lo = before[pick - 1];
    if (pick < before.size()) hi = before[pick];
    Rational l = m.insert_between(b, lo, hi);
    auto after = labels(m, b);
    ASSERT_EQ(after.size(), before.size() + 1);
    if (lo) {
      EXPECT_LT(*lo, l);
    }
    if (hi) {
      EXPECT_LT(l, *hi);
    }
    std::vector<Rational> kept;
    for (auto& x : after)
      if (x != l) kept.push_back(x);
    EXPECT_EQ(kept, before);
  }
}

TEST(Embed, EmptyPresentationPasses) {
  UniversalModel m;
  PlanarPresentation p;
  auto map = embed(p, m);
  EXPECT_TRUE(verify_embedding(p, m, map).pass);
}

TEST(Embed, ProngsAndLeafSpaces) {
  for (int k = 3; k <= 5; ++k) {
    UniversalModel m;
    auto p = prong_presentation(k);
    auto map = embed(p, m);
    auto v = verify_embedding(p, m, map);
    EXPECT_TRUE(v.pass) << (v.witnesses.empty() ? "" : v.witnesses[0]);
    ASSERT_EQ(m.cyclics().size(), 1u);
    EXPECT_EQ(m.cyclics()[0].points.size(), static_cast<std::size_t>(k));
  }
  for (auto& al : th::positive_corpus(Q("1/16"), 1)) {
    UniversalModel m;
    auto p = build_leaf_space(al).presentation;
    auto map = embed(p, m);
    EXPECT_TRUE(verify_embedding(p, m, map).pass);
    EXPECT_EQ(map.addresses().size(), p.points.size());
  }
}

TEST(Embed, GeneratedPresentations) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    UniversalModel m;
    auto p = gen_presentation(s);
    auto map = embed(p, m);
    auto v = verify_embedding(p, m, map);
    EXPECT_TRUE(v.pass) << s << " " << (v.witnesses.empty() ? "" : v.witnesses[0]);
    std::set<std::string> addrs;
    for (auto& [name, a] : map.addresses()) addrs.insert(a);
    EXPECT_EQ(addrs.size(), p.points.size());
  }
}

TEST(Embed, SwappedMembersAreCaught) {
  int tried = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    UniversalModel m;
    auto p = gen_presentation(s);
    auto map = embed(p, m);
    for (auto& sw : p.switches) {
      if (sw.members.size() < 2) continue;
      auto bad = map;
      std::swap(bad.points.at(sw.members[0].point), bad.points.at(sw.members[1].point));
      auto v = verify_embedding(p, m, bad);
      EXPECT_FALSE(v.pass);
      EXPECT_TRUE(has_prefix(v, "order") || has_prefix(v, "incidence")) << s;
      ++tried;
      break;
    }
  }
  EXPECT_GT(tried, 30);
}

TEST(Embed, FlippedSideIsCaught) {
  UniversalModel m;
  auto p = prong_presentation(4);
  auto map = embed(p, m);
  auto flipped = p;
  flipped.cyclics[0].side = "R";
  auto v = verify_embedding(flipped, m, map);
  EXPECT_FALSE(v.pass);
  EXPECT_TRUE(has_prefix(v, "side"));
}

TEST(Embed, MissingPointIsNotTotal) {
  UniversalModel m;
  auto p = prong_presentation(3);
  auto map = embed(p, m);
  map.points.erase(p.points[0]);
  EXPECT_TRUE(has_prefix(verify_embedding(p, m, map), "total"));
}

TEST(Embed, CollapsedPointsAreNotInjective) {
  UniversalModel m;
  auto p = gen_presentation(3);
  auto map = embed(p, m);
  ASSERT_GE(p.points.size(), 2u);
  map.points[p.points[1]] = map.points[p.points[0]];
  EXPECT_TRUE(has_prefix(verify_embedding(p, m, map), "injective"));
}

TEST(Embed, StagesComposeWithEarlierMaps) {
  for (std::uint64_t s = 0; s < 25; ++s) {
    auto stages = gen_presentation_stages(s, 12);
    ASSERT_FALSE(stages.empty());
    UniversalModel m;
    EmbeddingMap map;
    for (auto& p : stages) {
      auto before = map.addresses();
      map = embed(p, m, map);
      auto after = map.addresses();
      for (auto& [name, a] : before) EXPECT_EQ(after.at(name), a) << s;
      EXPECT_TRUE(verify_embedding(p, m, map).pass) << s;
    }
    EXPECT_NE(std::find(stages.begin(), stages.end(), gen_presentation(s, 12)), stages.end());
  }
}

TEST(Embed, Deterministic) {
  auto p = gen_presentation(11);
  UniversalModel m1, m2;
  EXPECT_EQ(to_json(embed(p, m1)).dump(), to_json(embed(p, m2)).dump());
  EXPECT_EQ(m1.log().dump(), m2.log().dump());
}

TEST(MaximalOrder, Examples) {
  EXPECT_TRUE(check_maximal_order(dyadic_generator(), 5).pass);
  auto fixed = check_maximal_order(fixed_generator({Q("0"), Q("1"), Q("2")}), 3);
  EXPECT_FALSE(fixed.pass);
  EXPECT_EQ(fixed.witnesses.size(), 4u);
  EXPECT_TRUE(has_prefix(fixed, "max"));
  auto nat = check_maximal_order(naturals_generator(), 4);
  ASSERT_FALSE(nat.pass);
  EXPECT_EQ(nat.witnesses.front().rfind("min: 0", 0), 0u);
  EXPECT_TRUE(has_prefix(check_maximal_order(fixed_generator({}), 1), "empty"));
  EXPECT_EQ(th::kind_of([] { check_maximal_order(dyadic_generator(), 0); }), ErrorKind::DomainError);
}

TEST(MaximalOrder, SlotLabelsOfABranchingAreDense) {
  // Round r: every existing label gains neighbours on both sides.
  auto gen = [](int round) {
    UniversalModel m;
    int b = m.new_branching(ModelPoint{m.new_line(), Q("0")}, 1);
    for (int i = 0; i < round; ++i) {
      auto ls = labels(m, b);
      m.insert_between(b, std::nullopt, ls.front());
      m.insert_between(b, ls.back(), std::nullopt);
      for (std::size_t j = 0; j + 1 < ls.size(); ++j) m.insert_between(b, ls[j], ls[j + 1]);
    }
    return labels(m, b);
  };
  for (int r = 1; r <= 6; ++r) EXPECT_TRUE(check_maximal_order(gen, r).pass) << r;
}
