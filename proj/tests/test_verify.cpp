#include <gtest/gtest.h>

#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/verify.hpp"

using namespace tanglekit;

namespace {

VerifyOptions small(unsigned threads) {
  VerifyOptions o;
  o.instances = 40;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(Verify, AllFamiliesPass) {
  const auto results = run_verification(builtin_corpus(), small(0));
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.family << "/" << r.name << ": " << r.detail;
}

TEST(Verify, FamilyFilter) {
  auto o = small(1);
  o.families = {"jones"};
  const auto results = run_verification(builtin_corpus(), o);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_EQ(r.family, "jones");
  o.families = {"no-such-family"};
  EXPECT_THROW(run_verification(builtin_corpus(), o), Error);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  const auto a = run_verification(builtin_corpus(), small(1));
  const auto b = run_verification(builtin_corpus(), small(4));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].family, b[i].family);
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Verify, SeedChangesInstancesNotOutcome) {
  auto o = small(1);
  o.families = {"coloring", "tangle"};
  o.seed = 99;
  for (const auto& r : run_verification(builtin_corpus(), o)) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, BruteForceCounter) {
  EXPECT_EQ(brute_force_coloring_count(find_builtin("3_1")->diagram, 3), 9u);
  EXPECT_EQ(brute_force_coloring_count(find_builtin("4_1")->diagram, 5), 25u);
  EXPECT_EQ(brute_force_coloring_count(LinkDiagram::unlink(2), 4), 16u);
}
