#include <gtest/gtest.h>

#include <boost/integer/common_factor.hpp>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/verify.hpp"

using namespace tanglekit;

namespace {

LinkDiagram entry(const char* name) { return find_builtin(name)->diagram; }

}  // namespace

TEST(Fractions, TwistWords) {
  EXPECT_EQ(fraction_of_twists({}), rational_tangle(0, 1));
  EXPECT_EQ(fraction_of_twists({2, 2}), rational_tangle(5, 2));
  for (long long n = -6; n <= 6; ++n) EXPECT_EQ(fraction_of_twists({n}), rational_tangle(n, 1));
  EXPECT_EQ(fraction_of_twists({3, 2}), rational_tangle(7, 3));
  EXPECT_TRUE(fraction_of_twists({0, 0}).is_infinity());
  EXPECT_EQ(rational_tangle(10, -4).to_string(), "-5/2");
  EXPECT_EQ(rational_tangle(-3, 0).to_string(), "inf");
  EXPECT_THROW(rational_tangle(0, 0), Error);
}

TEST(Fractions, Rotation) {
  EXPECT_TRUE(rotate(rational_tangle(0, 1)).is_infinity());
  EXPECT_EQ(rotate(rational_tangle(5, 2)), rational_tangle(-2, 5));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const long long p = static_cast<long long>(rng() % 81) - 40;
    const long long q = 1 + static_cast<long long>(rng() % 40);
    const auto t = rational_tangle(p, q);
    EXPECT_EQ(rotate(rotate(t)), t);
    EXPECT_EQ(fraction_of_twists(twists_for(p, q)), t) << p << "/" << q;
  }
}

TEST(Expressions, ParseAndSerialize) {
  for (const char* s : {"t0", "tinf", "x+", "x-", "(tw 2 -2 3)", "(comp 0 1 (tw 2 2) (comp 1 0 x+ t0))"}) {
    EXPECT_EQ(serialize_tangle(parse_tangle(s)), s);
  }
  EXPECT_EQ(serialize_tangle(parse_tangle("(comp 3 2 t0 t0)")), "(comp 1 0 t0 t0)");
  EXPECT_THROW(parse_tangle("(comp 0 1 t0)"), ParseError);
  EXPECT_THROW(parse_tangle("(tw 1 x)"), ParseError);
  EXPECT_THROW(parse_tangle("t1"), ParseError);
  EXPECT_THROW(parse_tangle("t0 t0"), ParseError);
}

TEST(Expressions, FractionOfSums) {
  EXPECT_EQ(*parse_tangle("(comp 0 0 (tw 2 2) x+)").fraction(), rational_tangle(7, 2));
  EXPECT_EQ(*parse_tangle("(comp 1 0 x+ x+)").fraction(), rational_tangle(0, 1));
  EXPECT_FALSE(parse_tangle("(comp 0 0 (tw 2 2) (tw 2 2))").fraction().has_value());
}

TEST(Moves, RationalMoveReplacesZeroLeaf) {
  const auto t = parse_tangle("(comp 0 1 t0 x+)");
  EXPECT_EQ(serialize_tangle(apply_rational_move(t, "0", 5, 2, 1)), "(comp 0 1 (tw 2 2) x+)");
  EXPECT_EQ(serialize_tangle(apply_rational_move(t, "0", 5, 2, -1)), "(comp 0 1 (tw -2 -2) x+)");
  EXPECT_EQ(serialize_tangle(apply_rational_move(t, "0", 5, 1, 1)), "(comp 0 1 (tw 5) x+)");
  EXPECT_THROW(apply_rational_move(t, "1", 5, 2, 1), InvalidMoveSite);
  EXPECT_THROW(apply_rational_move(t, "", 5, 2, 1), InvalidMoveSite);
  EXPECT_THROW(apply_rational_move(t, "00", 5, 2, 1), InvalidMoveSite);
  EXPECT_THROW(apply_rational_move(t, "2", 5, 2, 1), InvalidMoveSite);
  EXPECT_EQ(zero_sites(t), (std::vector<std::string>{"0"}));
}

TEST(Closures, Conventions) {
  EXPECT_EQ(closure_diagram(TangleExpr::zero(), ClosureKind::Numerator).component_count(), 2);
  EXPECT_EQ(closure_diagram(TangleExpr::zero(), ClosureKind::Denominator).component_count(), 1);
  EXPECT_EQ(closure_diagram(TangleExpr::infinity(), ClosureKind::Numerator).component_count(), 1);
  // Rotation swaps the two closures.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_tangle(rng, 3);
    const auto r = TangleExpr::comp(1, 0, t, TangleExpr::zero());
    for (int n : {3, 5}) {
      EXPECT_EQ(col_group(closure_diagram(r, ClosureKind::Numerator), n),
                col_group(closure_diagram(t, ClosureKind::Denominator), n))
          << serialize_tangle(t);
    }
  }
}

TEST(Closures, TwoBridgeColorings) {
  // |Col_n(N(p/q))| = n * gcd(n, p), counted exhaustively.
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    std::vector<long long> tw(1 + rng() % 3);
    for (auto& a : tw) a = static_cast<long long>(rng() % 7) - 3;
    const auto fr = fraction_of_twists(tw);
    const auto d = closure_diagram(TangleExpr::twist(tw), ClosureKind::Numerator);
    if (fr.is_infinity() || d.arc_count() > 7) continue;
    for (int n : {3, 5}) {
      const auto expected = static_cast<std::uint64_t>(n) * boost::integer::gcd(static_cast<long long>(n), std::llabs(fr.p));
      EXPECT_EQ(oracle::coloring_count(d, n), expected)
          << fr.to_string();
    }
  }
  const auto n52 = closure_diagram(TangleExpr::twist({2, 2}), ClosureKind::Numerator);
  EXPECT_EQ(oracle::coloring_count(n52, 5), 25u);
  EXPECT_EQ(oracle::coloring_count(closure_diagram(TangleExpr::twist({3}), ClosureKind::Numerator), 3), 9u);
  EXPECT_EQ(determinant(closure_diagram(TangleExpr::twist({3, 2}), ClosureKind::Numerator)), 7);
}

TEST(Obstruction, Examples) {
  const auto split = parse_tangle("(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))");
  EXPECT_TRUE(embedding_obstruction(split, entry("unknot"), 5).obstructed);
  EXPECT_FALSE(embedding_obstruction(TangleExpr::zero(), entry("unknot"), 5).obstructed);
  EXPECT_FALSE(embedding_obstruction(TangleExpr::twist({2, 2}), entry("4_1"), 5).obstructed);
  EXPECT_THROW(embedding_obstruction(TangleExpr::zero(), entry("unknot"), 1), InvalidModulus);
}

TEST(Obstruction, SplitCircleTangleMissesTrivialTargets) {
  const auto split = parse_tangle("(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))");
  for (const char* name : {"unknot", "hopf", "3_1"}) {
    EXPECT_TRUE(embedding_obstruction(split, entry(name), 5).obstructed) << name;
  }
  // Every closure of it has a nontrivial 5-coloring.
  for (auto k : {ClosureKind::Numerator, ClosureKind::Denominator}) {
    const auto d = closure_diagram(split, k);
    EXPECT_GT(col_group(d, 5).order(), 5);
  }
}

TEST(TangleProperty, FiveHalvesMovePreservesCol5) {
  const auto r = check_tangle_moves(kDefaultSeed, 200, 5, 2);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(TangleProperty, IntegerMovesPreserveColN) {
  for (int n : {3, 4, 5}) {
    const auto r = check_tangle_moves(kDefaultSeed, 200, n, 1);
    EXPECT_TRUE(r.passed) << r.detail;
  }
}

TEST(TangleProperty, FractionFunctoriality) {
  const auto r = check_fraction_functoriality(kDefaultSeed, 200, 5);
  EXPECT_TRUE(r.passed) << r.detail;
}
