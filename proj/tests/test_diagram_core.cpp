#include <gtest/gtest.h>

#include <random>

#include "tanglekit/braid_word.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/link_diagram.hpp"

using namespace tanglekit;

namespace {

const LinkDiagram& entry(const char* name) {
  static std::vector<CorpusEntry> corpus = builtin_corpus();
  for (const auto& e : corpus) {
    if (e.name == name) return e.diagram;
  }
  throw std::runtime_error(name);
}

}  // namespace

TEST(PdFormat, RoundTripsEveryCorpusEntry) {
  for (const auto& e : builtin_corpus()) {
    EXPECT_EQ(parse_pd(serialize_pd(e.diagram)), e.diagram) << e.name;
  }
}

TEST(PdFormat, AcceptsSeparatorsAndComments) {
  const auto a = parse_pd("X 1 4 2 5 / X 3 6 4 1 ; X 5 2 6 3 # trefoil");
  EXPECT_EQ(a, entry("3_1"));
  EXPECT_EQ(parse_pd("O 2").component_count(), 2);
}

TEST(PdFormat, RejectsBadInput) {
  EXPECT_THROW(parse_pd("X 1 2 3"), ParseError);
  EXPECT_THROW(parse_pd("Y 1 2 3 4"), ParseError);
  EXPECT_THROW(parse_pd("X 1 2 3 q"), ParseError);
  EXPECT_THROW(parse_pd("X 1 2 3 4"), MalformedDiagram);
  EXPECT_THROW(parse_pd("X 1 1 1 2 / X 2 3 3 4"), MalformedDiagram);
}

TEST(LinkDiagram, ComponentsAndArcs) {
  EXPECT_EQ(entry("unknot").component_count(), 1);
  EXPECT_EQ(entry("hopf").component_count(), 2);
  EXPECT_EQ(entry("3_1").component_count(), 1);
  EXPECT_EQ(entry("9^2_40").component_count(), 2);
  EXPECT_EQ(entry("3_1").arc_count(), 3);
  EXPECT_EQ(entry("4_1").arc_count(), 4);
  EXPECT_EQ(LinkDiagram::unlink(4).component_count(), 4);
}

TEST(LinkDiagram, LabelsAreDensified) {
  const auto d = parse_pd("X 10 40 20 50 / X 30 60 40 10 / X 50 20 60 30");
  EXPECT_EQ(d, entry("3_1"));
}

TEST(LinkDiagram, MirrorIsAnInvolution) {
  for (const auto& e : builtin_corpus()) {
    EXPECT_EQ(e.diagram.mirror().mirror().canonical(), e.diagram.canonical()) << e.name;
  }
}

TEST(Orientation, TrefoilWritheAndMirror) {
  const auto& t = entry("3_1");
  EXPECT_EQ(std::abs(orient(t).writhe()), 3);
  EXPECT_EQ(orient(t.mirror()).writhe(), -orient(t).writhe());
  EXPECT_EQ(orient(entry("4_1")).writhe(), 0);
}

TEST(Orientation, ReversingAComponentFlipsLinkingCrossings) {
  const auto& hopf = entry("hopf");
  const bool rev[2] = {false, true};
  EXPECT_EQ(orient(hopf, rev).writhe(), -orient(hopf).writhe());
  const bool both[2] = {true, true};
  EXPECT_EQ(orient(hopf, both).writhe(), orient(hopf).writhe());
}

TEST(BraidWord, ParsingAndPowers) {
  const auto w = parse_braid("1^3 -2 2^-2", 3);
  EXPECT_EQ(w.letters(), (std::vector<int>{1, 1, 1, -2, -2, -2}));
  EXPECT_THROW(parse_braid("3", 3), ParseError);
  EXPECT_THROW(parse_braid("0", 3), ParseError);
  EXPECT_THROW(parse_braid("1 x", 3), ParseError);
  EXPECT_EQ(w.inverse().inverse(), w);
  EXPECT_EQ(parse_braid("1 2", 3).pow(-1), parse_braid("-2 -1", 3));
  EXPECT_EQ(garside_delta(3), parse_braid("1 2 1", 3));
}

TEST(BraidClosure, ComponentsMatchPermutationCycles) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int strands = std::uniform_int_distribution<int>(2, 5)(rng);
    const int len = std::uniform_int_distribution<int>(0, 9)(rng);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k) {
      const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      letters.push_back(rng() % 2 ? g : -g);
    }
    const BraidWord w(strands, letters);
    const auto d = braid_closure(w);
    EXPECT_EQ(d.crossing_count(), len);
    EXPECT_EQ(d.component_count(), w.permutation_cycles()) << w.to_string();
  }
}

TEST(BraidClosure, PositiveLettersArePositiveCrossings) {
  const auto d = braid_closure(parse_braid("1 1 1", 2));
  EXPECT_EQ(orient(d).writhe(), 3);
  EXPECT_EQ(orient(braid_closure(parse_braid("-1 -1 -1", 2))).writhe(), -3);
}

TEST(Corpus, ParsesRecordsAndNamesBadOnes) {
  const auto c = parse_corpus("name: a\ndet: 3\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n\nname: b\nO 1\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].determinant, 3);
  EXPECT_EQ(c[1].diagram.component_count(), 1);
  try {
    parse_corpus("name: broken_trefoil\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 7\n");
    FAIL() << "expected MalformedDiagram";
  } catch (const MalformedDiagram& e) {
    EXPECT_NE(std::string(e.what()).find("broken_trefoil"), std::string::npos);
  }
  EXPECT_THROW(load_corpus_file("/nonexistent/corpus.txt"), CorpusError);
}

TEST(Corpus, BuiltinAliases) {
  EXPECT_EQ(find_builtin("trefoil")->name, "3_1");
  EXPECT_EQ(find_builtin("figure-eight")->name, "4_1");
  EXPECT_FALSE(find_builtin("10_1").has_value());
}
