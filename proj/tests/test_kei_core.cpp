#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tanglekit/errors.hpp"
#include "tanglekit/kei.hpp"

using namespace tanglekit;

namespace {

// Exhaustive axiom check written out independently of check_axioms.
bool satisfies_axioms(const FiniteKei& k) {
  const int n = k.size();
  for (int a = 0; a < n; ++a) {
    if (k.op(a, a) != a) return false;
    for (int b = 0; b < n; ++b) {
      if (k.op(k.op(a, b), b) != a) return false;
      for (int c = 0; c < n; ++c) {
        if (k.op(k.op(a, b), c) != k.op(k.op(a, c), k.op(b, c))) return false;
      }
    }
  }
  return true;
}

FiniteKei relabeled(const FiniteKei& k, const std::vector<int>& perm) {
  const int n = k.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[perm[a] * n + perm[b]] = perm[k.op(a, b)];
  }
  return FiniteKei(n, t);
}

GroupTable symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g{6, std::vector<int>(36)};
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mult[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

}  // namespace

TEST(Kei, DihedralOperation) {
  const auto d5 = dihedral_kei(5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) EXPECT_EQ(d5.op(i, j), ((2 * j - i) % 5 + 5) % 5);
  }
}

TEST(Kei, ConstructionsSatisfyAxioms) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_TRUE(satisfies_axioms(dihedral_kei(n))) << n;
    EXPECT_TRUE(check_axioms(dihedral_kei(n)).empty()) << n;
  }
  EXPECT_TRUE(satisfies_axioms(FiniteKei::trivial(4)));
  EXPECT_TRUE(satisfies_axioms(core_kei(symmetric_group_3())));
  EXPECT_TRUE(satisfies_axioms(core_kei(direct_product(cyclic_group(5), cyclic_group(5)))));
  EXPECT_TRUE(satisfies_axioms(direct_product(dihedral_kei(3), dihedral_kei(4))));
}

TEST(Kei, CoreOfCyclicIsDihedral) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(core_kei(cyclic_group(n)), dihedral_kei(n));
}

TEST(Kei, CoreRejectsNonGroups) {
  GroupTable bad{2, {0, 0, 0, 0}};
  EXPECT_THROW(core_kei(bad), NotAGroup);
  // Z3 with a broken associativity: swap two products.
  auto g = cyclic_group(3);
  std::swap(g.mult[1 * 3 + 1], g.mult[1 * 3 + 2]);
  EXPECT_THROW(core_kei(g), NotAGroup);
}

TEST(Kei, AxiomViolationsAreReported) {
  std::vector<int> t = dihedral_kei(3).table();
  t[0] = 1;  // 0*0 = 1
  const FiniteKei broken(3, t);
  const auto v = check_axioms(broken);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, 1);
  EXPECT_FALSE(satisfies_axioms(broken));
  EXPECT_THROW(FiniteKei(2, {0, 1, 5, 1}), Error);
}

TEST(Kei, IsomorphismFindsRelabelings) {
  std::mt19937_64 rng(5);
  const std::vector<FiniteKei> keis = {dihedral_kei(9), core_kei(direct_product(cyclic_group(3), cyclic_group(3))),
                                       core_kei(symmetric_group_3()),
                                       direct_product(dihedral_kei(5), dihedral_kei(5))};
  for (const auto& k : keis) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(k.size()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto other = relabeled(k, perm);
      const auto map = kei_isomorphic(k, other);
      ASSERT_TRUE(map.has_value());
      for (int a = 0; a < k.size(); ++a) {
        for (int b = 0; b < k.size(); ++b) EXPECT_EQ((*map)[k.op(a, b)], other.op((*map)[a], (*map)[b]));
      }
      EXPECT_EQ(invariant_hash(k), invariant_hash(other));
    }
  }
}

TEST(Kei, NonIsomorphicPairs) {
  EXPECT_FALSE(kei_isomorphic(dihedral_kei(9), core_kei(direct_product(cyclic_group(3), cyclic_group(3)))));
  EXPECT_FALSE(kei_isomorphic(dihedral_kei(4), FiniteKei::trivial(4)));
  EXPECT_FALSE(kei_isomorphic(dihedral_kei(5), dihedral_kei(6)));
}

TEST(Kei, DirectProductOfDihedralsIsCoreOfProduct) {
  EXPECT_TRUE(kei_isomorphic(direct_product(dihedral_kei(5), dihedral_kei(5)),
                             core_kei(direct_product(cyclic_group(5), cyclic_group(5))))
                  .has_value());
}

TEST(Kei, SubkeiClosure) {
  const auto d6 = dihedral_kei(6);
  auto even = subkei_closure(d6, {0, 2});
  std::sort(even.begin(), even.end());
  EXPECT_EQ(even, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(subkei_closure(d6, {0, 1}).size(), 6u);
}

TEST(Kei, TableTextRoundTrip) {
  const auto k = core_kei(symmetric_group_3());
  EXPECT_EQ(parse_kei_table(serialize_kei_table(k)), k);
  EXPECT_THROW(parse_kei_table("2\n0 1\n"), ParseError);
}

TEST(KeiWords, ParseFormatEvaluate) {
  const auto w = parse_word("a*b*a", 2);
  EXPECT_EQ(w.letters, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(format_word(w, 2), "a*b*a");
  EXPECT_THROW(parse_word("a*c", 2), ParseError);
  EXPECT_EQ(generator_name(3, 30), "x3");
  const auto d7 = dihedral_kei(7);
  // (a*b)*a = 2a - (2b - a) = 3a - 2b
  EXPECT_EQ(evaluate(d7, w, {1, 3}), ((3 * 1 - 2 * 3) % 7 + 7) % 7);
}

TEST(KeiWords, PhiMatchesDihedralEvaluation) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    LeftNormedWord w;
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(rng() % 2));
    // In Z with a = 0, b = 1 the operation is 2y - x, so phi is evaluation in
    // a large dihedral Kei.
    const auto big = dihedral_kei(1031);
    const long long phi = phi_eval(w);
    EXPECT_EQ(((phi % 1031) + 1031) % 1031, evaluate(big, w, {0, 1}));
  }
  EXPECT_THROW(phi_eval(LeftNormedWord{{0, 2}}), Error);
}
