#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace prelam;
using th::C;
using th::Q;

TEST(Complete, LongestVirtualBecomesTheRoot) {
  RawAnnotatedLamination raw;
  raw.al.base.leaves = {C("0", "8/15")};
  raw.virtuals = {C("0", "1/3"), C("1/3", "8/15")};
  auto al = complete(raw);
  ASSERT_EQ(al.shells.size(), 1u);
  EXPECT_EQ(al.shells[0].root, C("0", "1/3"));
  std::set<Chord> leaves(al.base.leaves.begin(), al.base.leaves.end());
  EXPECT_EQ(leaves, (std::set<Chord>{C("0", "8/15"), C("1/3", "8/15")}));
  std::set<Chord> boundary(al.shells[0].boundary.begin(), al.shells[0].boundary.end());
  EXPECT_EQ(boundary, leaves);
  EXPECT_NO_THROW(validate(al));
}

TEST(Complete, SingleVirtualGivesOneShell) {
  RawAnnotatedLamination raw;
  raw.al.base.leaves = {C("0", "1/4"), C("1/4", "1/2")};
  raw.virtuals = {C("0", "1/2")};
  auto al = complete(raw);
  ASSERT_EQ(al.shells.size(), 1u);
  EXPECT_EQ(al.shells[0].root, C("0", "1/2"));
  EXPECT_EQ(al.shells[0].boundary.size(), 2u);
  EXPECT_EQ(al.base.leaves.size(), 2u);
}

TEST(Complete, RegionWithoutVirtualIsRejected) {
  RawAnnotatedLamination raw;
  raw.al.base.leaves = {C("0", "1/3"), C("1/3", "2/3"), C("0", "2/3")};
  EXPECT_EQ(th::kind_of([&] { complete(raw); }), ErrorKind::PreconditionViolated);
}

TEST(Complete, VirtualBetweenTwoRegionsIsRejected) {
  RawAnnotatedLamination raw;
  raw.al.base.leaves = {C("0", "1/4"), C("1/4", "1/2"), C("1/2", "3/4"), C("3/4", "0")};
  raw.virtuals = {C("0", "1/2")};
  EXPECT_EQ(th::kind_of([&] { complete(raw); }), ErrorKind::PreconditionViolated);
}

TEST(Complete, VirtualThatIsALeafIsInvalid) {
  RawAnnotatedLamination raw;
  raw.al.base.leaves = {C("0", "1/2")};
  raw.virtuals = {C("0", "1/2")};
  EXPECT_EQ(th::kind_of([&] { complete(raw); }), ErrorKind::InvalidLamination);
}

TEST(Complete, Idempotent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto rr = gen_random_raw(seed, Q("1/16"));
    auto once = complete(rr.raw);
    EXPECT_EQ(complete(raw_form(once)), once) << seed;
  }
}

TEST(Complete, RandomRawsSatisfyTheSuite) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rr = gen_random_raw(seed, Q("1/16"));
    auto al = complete(rr.raw);
    auto rep = classify(al, rr.eps, rr.delta);
    EXPECT_TRUE(rep.pass()) << seed << " " << to_json(rep).dump();
    std::set<Chord> leaves(al.base.leaves.begin(), al.base.leaves.end());
    for (auto& c : rr.raw.al.base.leaves) EXPECT_TRUE(leaves.count(c));
  }
}

TEST(Complete, CounterexamplesAreRejected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto rr = gen_random_raw(seed, Q("1/16"), true);
    EXPECT_TRUE(rr.counterexample);
    EXPECT_EQ(th::kind_of([&] { complete(rr.raw); }), ErrorKind::PreconditionViolated) << seed;
  }
}

TEST(RawForm, RootsBecomeVirtuals) {
  auto al = gen_shell_family(3, Q("1/16"));
  auto raw = raw_form(al);
  EXPECT_TRUE(raw.al.shells.empty());
  ASSERT_EQ(raw.virtuals.size(), 1u);
  EXPECT_EQ(raw.virtuals[0], al.shells[0].root);
  EXPECT_EQ(canonical(complete(raw)), canonical(al));
}
