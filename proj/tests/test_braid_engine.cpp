#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tanglekit/braid_engine.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/verify.hpp"

using namespace tanglekit;

namespace {

// B_3/(sigma_1^5) realized inside SL(2,5) x Z_5: reduce the SL2(Z) image mod 5
// and keep the exponent sum mod 5.
struct Model {
  std::array<int, 4> m{1, 0, 0, 1};
  int e = 0;
  friend bool operator<(const Model& a, const Model& b) { return std::tie(a.m, a.e) < std::tie(b.m, b.e); }
  friend bool operator==(const Model& a, const Model& b) = default;
};

Model mul(const Model& a, const Model& b) {
  Model c;
  c.m = {(a.m[0] * b.m[0] + a.m[1] * b.m[2]) % 5, (a.m[0] * b.m[1] + a.m[1] * b.m[3]) % 5,
         (a.m[2] * b.m[0] + a.m[3] * b.m[2]) % 5, (a.m[2] * b.m[1] + a.m[3] * b.m[3]) % 5};
  c.e = (a.e + b.e) % 5;
  return c;
}

Model letter(int l) {
  const auto s = oracle::sl2_letter(l);
  Model x;
  for (int i = 0; i < 4; ++i) x.m[i] = static_cast<int>(((s[i] % 5) + 5) % 5);
  x.e = l > 0 ? 1 : 4;
  return x;
}

Model model_of(const BraidWord& w) {
  Model x;
  for (int l : w.letters()) x = mul(x, letter(l));
  return x;
}

// Breadth-first search over the model gives every element with its word length.
std::map<Model, int> model_lengths() {
  std::map<Model, int> dist{{Model{}, 0}};
  std::vector<Model> frontier{Model{}};
  while (!frontier.empty()) {
    std::vector<Model> next;
    for (const auto& x : frontier) {
      for (int l : {1, -1, 2, -2}) {
        const auto y = mul(x, letter(l));
        if (dist.emplace(y, dist[x] + 1).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST(Burau, GeneratorsSatisfyBraidRelation) {
  EXPECT_EQ(burau_image(parse_braid("1 2 1", 3)), burau_image(parse_braid("2 1 2", 3)));
  EXPECT_EQ(burau_image(parse_braid("1 -1 2 -2", 3)), LaurentMatrix2::identity());
  EXPECT_EQ(burau_image(parse_braid("1", 3)).determinant(), -LaurentPoly::power(1));
  EXPECT_THROW(burau_image(parse_braid("1", 4)), UnsupportedStrandCount);
}

TEST(Burau, EqualityAgreesWithSl2AndExponentSum) {
  std::mt19937_64 rng(21);
  int equal_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    const auto a = random_braid(rng, 3, 8);
    // Rewrite with a random braid or commutation relation to get equal pairs.
    BraidWord b = a;
    if (i % 2 == 0) {
      const auto at = static_cast<std::size_t>(rng() % (a.length() + 1));
      const auto rel = (rng() % 2) ? parse_braid("1 2 1 -2 -1 -2", 3) : parse_braid("1 2 1 2 1 2 -1 -2 -1 -2 -1 -2", 3);
      b = a.spliced(at, rel);
    } else {
      b = random_braid(rng, 3, 8);
    }
    const bool expected = oracle::equal_in_b3(a, b);
    equal_pairs += expected ? 1 : 0;
    EXPECT_EQ(equal_in_b3(a, b), expected) << a.to_string() << " vs " << b.to_string();
  }
  EXPECT_GE(equal_pairs, 200);
}

TEST(Burau, FullTwistIsCentral) {
  const auto d2 = garside_delta(3).pow(2);
  EXPECT_TRUE(equal_in_b3(d2 * parse_braid("1", 3), parse_braid("1", 3) * d2));
  EXPECT_TRUE(equal_in_b3(d2, parse_braid("1 2", 3).pow(3)));
  EXPECT_FALSE(equal_in_b3(garside_delta(3).pow(4), BraidWord(3, {})));
}

TEST(Quotient, OrdersOfPowerQuotients) {
  // The model for k = 5 has order 600; smaller k by the same construction
  // give S_3, SL(2,3), and a group of order 96.
  EXPECT_EQ(b3_power_quotient(2).order(), 6);
  EXPECT_EQ(b3_power_quotient(3).order(), 24);
  EXPECT_EQ(b3_power_quotient(4).order(), 96);
  const auto lengths = model_lengths();
  EXPECT_EQ(lengths.size(), 600u);
  EXPECT_EQ(coxeter_quotient().order(), 600);
  EXPECT_THROW(b3_power_quotient(5, 100), EnumerationFailure);
}

TEST(Quotient, AgreesWithMatrixModel) {
  const auto& g = coxeter_quotient();
  const auto lengths = model_lengths();
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_braid(rng, 3, 12);
    const auto b = random_braid(rng, 3, 12);
    EXPECT_EQ(g.image(a) == g.image(b), model_of(a) == model_of(b));
  }
  for (int x = 0; x < g.order(); ++x) {
    const BraidWord w(3, g.word(x));
    EXPECT_EQ(lengths.at(model_of(w)), static_cast<int>(w.length())) << "element " << x;
  }
}

TEST(Quotient, ConjugacyCensus) {
  const auto& g = coxeter_quotient();
  const auto c = conjugacy_census(g);
  // Independent count on the matrix model.
  const auto lengths = model_lengths();
  std::vector<Model> elems;
  for (const auto& [x, len] : lengths) elems.push_back(x);
  std::map<Model, int> cls;
  std::vector<int> min_len;
  for (const auto& x : elems) {
    if (cls.count(x)) continue;
    const int id = static_cast<int>(min_len.size());
    min_len.push_back(1 << 30);
    for (const auto& h : elems) {
      Model hinv = h;
      for (const auto& y : elems) {
        if (mul(h, y) == Model{}) hinv = y;
      }
      const auto conj = mul(mul(hinv, x), h);
      if (cls.emplace(conj, id).second) min_len[id] = std::min(min_len[id], lengths.at(conj));
    }
  }
  const int expected_classes = static_cast<int>(min_len.size());
  const int expected_short = static_cast<int>(std::count_if(min_len.begin(), min_len.end(), [](int l) { return l <= 8; }));
  EXPECT_EQ(c.class_count, expected_classes);
  EXPECT_EQ(c.classes_with_length_at_most(8), expected_short);
  EXPECT_EQ(expected_classes, 45);
  EXPECT_GE(expected_short, 36);
  int total = 0;
  for (int s : c.class_size) total += s;
  EXPECT_EQ(total, 600);
}

TEST(Quotient, FullTwistPowers) {
  const auto& g = coxeter_quotient();
  const int full = g.image(parse_braid("1 2", 3).pow(6));
  EXPECT_EQ(g.element_order(full), 5);
  EXPECT_EQ(g.element_order(g.image(garside_delta(3).pow(2))), 10);
  std::set<int> powers;
  for (int k = 0; k < 5; ++k) powers.insert(g.power(full, k));
  EXPECT_EQ(powers.size(), 5u);
  EXPECT_EQ(g.image(parse_braid("1 2", 3).pow(30)), g.identity());
  EXPECT_EQ(model_of(parse_braid("1 2", 3).pow(30)), Model{});
}

TEST(Identities, EveryStepPasses) {
  const auto report = verify_five_move_identities();
  EXPECT_TRUE(report.all_passed());
  for (const auto& s : report.steps) {
    EXPECT_TRUE(s.passed) << s.label;
    switch (s.kind) {
      case StepKind::ExactInB3:
        EXPECT_TRUE(oracle::equal_in_b3(s.lhs, s.rhs)) << s.label;
        break;
      case StepKind::EqualInQuotient:
        EXPECT_EQ(model_of(s.lhs), model_of(s.rhs)) << s.label;
        break;
      default:
        break;
    }
  }
  EXPECT_GE(report.steps.size(), 20u);
}

TEST(Identities, ExactStepsAreNotTriviallyTrue) {
  // A quotient-only equality must not pass as an exact one.
  EXPECT_FALSE(equal_in_b3(parse_braid("1 1 1 1 1", 3), BraidWord(3, {})));
  EXPECT_EQ(coxeter_quotient().image(parse_braid("1 1 1 1 1", 3)), 0);
}
