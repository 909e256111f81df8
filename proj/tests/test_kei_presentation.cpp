#include <gtest/gtest.h>

#include <array>
#include <set>

#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/kei.hpp"
#include "tanglekit/kei_presentation.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/verify.hpp"

using namespace tanglekit;

namespace {

int q_size(int m, int n) {
  const auto r = enumerate(free_burnside_presentation(m, n));
  EXPECT_TRUE(r.completed) << "Q(" << m << "," << n << ")";
  return r.completed ? r.kei.size() : -1;
}

LinkDiagram entry(const char* name) { return find_builtin(name)->diagram; }

// Z_k^2 semidirect Z_3, with Z_3 acting by (x, y) -> (-y, x - y).
struct Triangle {
  int k;
  int order() const { return 3 * k * k; }
  std::array<int, 3> decode(int e) const { return {e % k, (e / k) % k, e / (k * k)}; }
  int encode(int x, int y, int t) const { return ((x % k + k) % k) + k * ((y % k + k) % k) + k * k * (t % 3); }
  std::pair<int, int> rot(int x, int y, int t) const {
    for (int i = 0; i < t; ++i) {
      const int nx = -y;
      const int ny = x - y;
      x = nx;
      y = ny;
    }
    return {x, y};
  }
  int mul(int a, int b) const {
    const auto [ax, ay, at] = decode(a);
    const auto [bx, by, bt] = decode(b);
    const auto [rx, ry] = rot(bx, by, at);
    return encode(ax + rx, ay + ry, at + bt);
  }
  GroupTable table() const {
    GroupTable g{order(), std::vector<int>(static_cast<std::size_t>(order()) * order())};
    for (int a = 0; a < order(); ++a) {
      for (int b = 0; b < order(); ++b) g.mult[a * order() + b] = mul(a, b);
    }
    return g;
  }
};

}  // namespace

TEST(Presentation, RnRelation) {
  EXPECT_EQ(format_word(r_n_relation(5).rhs, 2), "b*a*b*a*b");
  EXPECT_EQ(format_word(r_n_relation(4).rhs, 2), "a*b*a*b");
  EXPECT_EQ(phi_eval(r_n_relation(5).rhs), 5);
  EXPECT_THROW(r_n_relation(1), Error);
}

TEST(Presentation, TextRoundTrip) {
  const auto p = parse_presentation("# demo\ngens 3\nrel a*b = c\nrel c*a = b*c\nburnside 5\n");
  EXPECT_EQ(p.generator_count, 3);
  EXPECT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.burnside_exponent, 5);
  const auto again = parse_presentation(serialize_presentation(p));
  EXPECT_EQ(again.relations, p.relations);
  EXPECT_EQ(again.burnside_exponent, p.burnside_exponent);
  EXPECT_THROW(parse_presentation("gens 2\nrel a*z = b\n"), ParseError);
}

TEST(Presentation, FundamentalKeiShape) {
  const auto p = fundamental_kei(entry("3_1"));
  EXPECT_EQ(p.generator_count, 3);
  EXPECT_EQ(p.relations.size(), 3u);
  EXPECT_EQ(fundamental_kei(LinkDiagram::unlink(3)).generator_count, 3);
  const auto g = core_group_presentation(entry("4_1"));
  EXPECT_EQ(g.generator_count, 4);
  EXPECT_EQ(g.relators.size(), 4u);
  for (const auto& r : g.relators) EXPECT_EQ(r.size(), 4u);
}

TEST(Enumeration, FreeBurnsideSizes) {
  EXPECT_EQ(q_size(2, 3), 3);
  EXPECT_EQ(q_size(3, 3), 9);
  EXPECT_EQ(q_size(4, 3), 81);
  EXPECT_EQ(q_size(3, 4), 96);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(q_size(m, 2), m);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(q_size(1, n), 1);
}

TEST(Enumeration, TwoGeneratorQuotientsAreDihedral) {
  for (int n = 2; n <= 9; ++n) {
    const auto r = enumerate(free_burnside_presentation(2, n));
    ASSERT_TRUE(r.completed);
    EXPECT_TRUE(kei_isomorphic(r.kei, dihedral_kei(n)).has_value()) << n;
  }
}

TEST(Enumeration, ResultsSatisfyTheirPresentation) {
  for (auto [m, n] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {
    const auto p = free_burnside_presentation(m, n);
    const auto r = enumerate(p);
    ASSERT_TRUE(r.completed);
    EXPECT_TRUE(check_axioms(r.kei).empty());
    EXPECT_TRUE(burnside_violations(r.kei, n).empty());
    std::set<int> images(r.generator_images.begin(), r.generator_images.end());
    EXPECT_EQ(static_cast<int>(images.size()), m);
    EXPECT_EQ(subkei_closure(r.kei, r.generator_images).size(), static_cast<std::size_t>(r.kei.size()));
  }
}

TEST(Enumeration, Q33IsCoreOfZ3Squared) {
  const auto r = enumerate(free_burnside_presentation(3, 3));
  ASSERT_TRUE(r.completed);
  EXPECT_TRUE(kei_isomorphic(r.kei, core_kei(direct_product(cyclic_group(3), cyclic_group(3)))).has_value());
}

TEST(Enumeration, FundamentalKeiOfTwoBridgeKnots) {
  const auto t = enumerate(fundamental_kei(entry("3_1")));
  ASSERT_TRUE(t.completed);
  EXPECT_EQ(t.kei.size(), 3);
  EXPECT_TRUE(kei_isomorphic(t.kei, dihedral_kei(3)).has_value());
  const auto f = enumerate(fundamental_kei(entry("4_1")));
  ASSERT_TRUE(f.completed);
  EXPECT_EQ(f.kei.size(), 5);
  EXPECT_TRUE(kei_isomorphic(f.kei, dihedral_kei(5)).has_value());
  for (auto tw : {std::vector<long long>{2, 2}, {3, 2}, {7}}) {
    const auto fr = fraction_of_twists(tw);
    const auto r = enumerate(fundamental_kei(closure_diagram(TangleExpr::twist(tw), ClosureKind::Numerator)));
    ASSERT_TRUE(r.completed);
    EXPECT_EQ(r.kei.size(), fr.p) << fr.to_string();
  }
}

TEST(Enumeration, ExceptionalKnotsHaveTheSameBurnsideKei) {
  const auto a = burnside_kei(entry("9_40"), 5);
  const auto b = burnside_kei(entry("9_49"), 5);
  ASSERT_TRUE(a.completed);
  ASSERT_TRUE(b.completed);
  EXPECT_EQ(a.kei.size(), 25);
  EXPECT_EQ(b.kei.size(), 25);
  EXPECT_TRUE(kei_isomorphic(a.kei, b.kei).has_value());
  EXPECT_TRUE(kei_isomorphic(a.kei, core_kei(direct_product(cyclic_group(5), cyclic_group(5)))).has_value());
}

TEST(Enumeration, UnknotBurnsideKeiIsTrivial) {
  const auto r = burnside_kei(entry("unknot"), 5);
  ASSERT_TRUE(r.completed);
  EXPECT_EQ(r.kei.size(), 1);
  EXPECT_THROW(burnside_kei(entry("unknot"), 1), InvalidModulus);
}

TEST(Enumeration, CapStopsGracefully) {
  EnumerationOptions o;
  o.cap = 20;
  const auto r = enumerate(free_burnside_presentation(4, 3), o);
  EXPECT_FALSE(r.completed);
  EXPECT_EQ(r.cap, 20u);
}

TEST(Enumeration, CapFromEnvironment) {
  ::setenv("TANGLEKIT_CAP", "1234", 1);
  EXPECT_EQ(cap_from_environment(), 1234u);
  ::setenv("TANGLEKIT_CAP", "junk", 1);
  EXPECT_EQ(cap_from_environment(77), 77u);
  ::unsetenv("TANGLEKIT_CAP");
  EXPECT_EQ(cap_from_environment(), kDefaultKeiCap);
}

// r_3 imposed only between the generators does not give Q(3,3): the core Kei
// of a triangle-group quotient has three generators pairwise satisfying r_3
// but generates more than nine elements.
TEST(GeneratorPairs, TriangleGroupWitness) {
  const Triangle tri{4};
  const auto k = core_kei(tri.table());
  const auto rel = r_n_relation(3);
  auto pair_ok = [&](int u, int w) {
    return evaluate(k, rel.lhs, {u, w}) == evaluate(k, rel.rhs, {u, w}) &&
           evaluate(k, rel.lhs, {w, u}) == evaluate(k, rel.rhs, {w, u});
  };
  std::size_t best = 0;
  const int e = tri.encode(0, 0, 0);
  for (int b = 0; b < tri.order(); ++b) {
    for (int c = 0; c < tri.order(); ++c) {
      if (b == e || c == e || b == c) continue;
      if (!pair_ok(e, b) || !pair_ok(e, c) || !pair_ok(b, c)) continue;
      best = std::max(best, subkei_closure(k, {e, b, c}).size());
    }
  }
  EXPECT_GT(best, 9u);
}

TEST(GeneratorPairs, DoesNotCloseWithinTheDefaultCap) {
  EnumerationOptions o;
  o.burnside_scope = BurnsideScope::GeneratorPairsOnly;
  o.cap = 3000;
  const auto r = enumerate(free_burnside_presentation(3, 3), o);
  if (r.completed) EXPECT_GT(r.kei.size(), 9);
}

TEST(KeiProperty, Bq3InvariantUnderCubeInsertion) {
  const auto r = check_bq3_power_moves(kDefaultSeed, 200, kDefaultKeiCap);
  EXPECT_TRUE(r.passed) << r.detail;
}
