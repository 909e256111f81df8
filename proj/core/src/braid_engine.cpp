#include "tanglekit/braid_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tanglekit/coset_table.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/union_find.hpp"

namespace tanglekit {

std::string LaurentMatrix2::to_string() const {
  std::ostringstream out;
  out << "[[" << e[0].to_string("t") << ", " << e[1].to_string("t") << "], [" << e[2].to_string("t") << ", "
      << e[3].to_string("t") << "]]";
  return out.str();
}

LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b) {
  LaurentMatrix2 c;
  c.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
  c.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
  c.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
  c.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  return c;
}

LaurentMatrix2 burau_generator(int letter) {
  const LaurentPoly t = LaurentPoly::power(1);
  const LaurentPoly ti = LaurentPoly::power(-1);
  switch (letter) {
    case 1:
      return {{-t, 1, 0, 1}};
    case -1:
      return {{-ti, ti, 0, 1}};
    case 2:
      return {{1, 0, t, -t}};
    case -2:
      return {{1, 0, 1, -ti}};
    default:
      throw UnsupportedStrandCount("Burau image is implemented for B_3 only");
  }
}

LaurentMatrix2 burau_image(const BraidWord& w) {
  if (w.strands() != 3) {
    throw UnsupportedStrandCount("Burau image needs 3 strands, got " + std::to_string(w.strands()));
  }
  LaurentMatrix2 m;
  for (int letter : w.letters()) m = m * burau_generator(letter);
  return m;
}

bool equal_in_b3(const BraidWord& a, const BraidWord& b) { return burau_image(a) == burau_image(b); }

QuotientGroup::QuotientGroup(std::vector<int> mult, std::vector<std::vector<int>> words)
    : order_(static_cast<int>(words.size())), mult_(std::move(mult)), words_(std::move(words)) {
  if (mult_.size() != static_cast<std::size_t>(order_) * order_) throw Error("group table has the wrong shape");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (multiply(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw Error("group table element without inverse");
  }
}

int QuotientGroup::generator(int letter) const {
  const int positive = std::abs(letter);
  if (positive != 1 && positive != 2) throw UnsupportedStrandCount("B_3 has generators 1 and 2 only");
  for (int a = 0; a < order_; ++a) {
    if (words_[a].size() == 1 && words_[a][0] == positive) return letter > 0 ? a : inverse(a);
  }
  return 0;  // the generator maps to the identity
}

int QuotientGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

int QuotientGroup::power(int a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  int out = 0;
  for (long long i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

int QuotientGroup::image(const BraidWord& w) const {
  if (w.strands() != 3) {
    throw UnsupportedStrandCount("quotient image needs 3 strands, got " + std::to_string(w.strands()));
  }
  const int g[5] = {generator(-2), generator(-1), 0, generator(1), generator(2)};
  int x = 0;
  for (int letter : w.letters()) x = multiply(x, g[letter + 2]);
  return x;
}

int QuotientGroup::find_conjugator(int a, int b) const {
  for (int h = 0; h < order_; ++h) {
    if (multiply(multiply(inverse(h), a), h) == b) return h;
  }
  return -1;
}

QuotientGroup b3_power_quotient(int k, std::size_t cap) {
  if (k < 2) throw Error("b3_power_quotient needs k >= 2");
  // Columns: s1, s1^-1, s2, s2^-1.
  CosetTable table(4, {1, 0, 3, 2}, cap);
  const std::vector<int> braid = {0, 2, 0, 3, 1, 3};
  const std::vector<int> power1(static_cast<std::size_t>(k), 0);
  const std::vector<int> power2(static_cast<std::size_t>(k), 2);
  try {
    table.add_row();
    for (std::size_t r = 0; r < table.allocated(); ++r) {
      const int row = static_cast<int>(r);
      for (const auto* rel : {&power1, &braid, &power2}) {
        if (!table.alive(row)) break;
        table.scan_and_fill(row, *rel, row);
      }
      if (!table.alive(row)) continue;
      for (int c = 0; c < 4; ++c) {
        if (table.get(row, c) == CosetTable::kUndefined) table.define(row, c);
      }
    }
  } catch (const CapReached&) {
    throw EnumerationFailure("coset enumeration exceeded " + std::to_string(cap) + " cosets");
  }

  // Breadth-first renumbering gives shortest words.
  const int letters[4] = {1, -1, 2, -2};
  std::vector<int> index(table.allocated(), -1);
  std::vector<int> rows;
  std::vector<std::vector<int>> words;
  const int root = table.find(0);
  index[root] = 0;
  rows.push_back(root);
  words.emplace_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      const int t = table.get(rows[i], c);
      if (index[t] >= 0) continue;
      index[t] = static_cast<int>(rows.size());
      rows.push_back(t);
      auto w = words[i];
      w.push_back(letters[c]);
      words.push_back(std::move(w));
    }
  }
  const std::size_t n = rows.size();
  std::vector<int> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int x = rows[a];
      for (int letter : words[b]) {
        const int c = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
        x = table.get(x, c);
      }
      mult[a * n + b] = index[x];
    }
  }
  return QuotientGroup(std::move(mult), std::move(words));
}

const QuotientGroup& coxeter_quotient() {
  static const QuotientGroup group = b3_power_quotient(5);
  return group;
}

int ConjugacyCensus::classes_with_length_at_most(int length) const {
  return static_cast<int>(std::count_if(min_length.begin(), min_length.end(), [&](int l) { return l <= length; }));
}

ConjugacyCensus conjugacy_census(const QuotientGroup& g) {
  const int n = g.order();
  UnionFind uf(n);
  const int gens[2] = {g.generator(1), g.generator(2)};
  for (int a = 0; a < n; ++a) {
    for (int s : gens) uf.unite(a, g.multiply(g.multiply(g.inverse(s), a), s));
  }
  ConjugacyCensus census;
  census.class_of = uf.dense_classes(&census.class_count);
  census.class_size.assign(census.class_count, 0);
  census.min_length.assign(census.class_count, -1);
  census.representative.assign(census.class_count, {});
  for (int a = 0; a < n; ++a) {
    const int c = census.class_of[a];
    ++census.class_size[c];
    const int len = static_cast<int>(g.word(a).size());
    if (census.min_length[c] < 0 || len < census.min_length[c]) {
      census.min_length[c] = len;
      census.representative[c] = g.word(a);
    }
  }
  return census;
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::ExactInB3:
      return "exact-in-B3";
    case StepKind::EqualInQuotient:
      return "equal-in-quotient";
    case StepKind::ConjugateInB3:
      return "conjugate-in-B3";
    case StepKind::ConjugateInQuotient:
      return "conjugate-in-quotient";
  }
  return "unknown";
}

bool IdentityReport::all_passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const IdentityStep& s) { return s.passed; });
}

namespace {

BraidWord b3(const char* text) { return parse_braid(text, 3); }

std::string word_text(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) out << (i > 0 ? " " : "") << letters[i];
  return out.str();
}

// Short conjugators in B_3 found by breadth-first search over words.
bool find_b3_conjugator(const BraidWord& a, const BraidWord& b, int max_length, std::string& found) {
  const auto target = burau_image(b);
  const auto image_a = burau_image(a);
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 0; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& h : layer) {
      const BraidWord hw(3, h);
      if (burau_image(hw.inverse()) * image_a * burau_image(hw) == target) {
        found = word_text(h);
        return true;
      }
      for (int letter : {1, -1, 2, -2}) {
        if (!h.empty() && h.back() == -letter) continue;
        auto longer = h;
        longer.push_back(letter);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return false;
}

}  // namespace

IdentityReport verify_five_move_identities(const QuotientGroup& g) {
  IdentityReport report;
  auto add = [&](std::string label, StepKind kind, BraidWord lhs, BraidWord rhs) {
    IdentityStep step{std::move(label), kind, std::move(lhs), std::move(rhs), false, {}};
    switch (kind) {
      case StepKind::ExactInB3:
        step.passed = equal_in_b3(step.lhs, step.rhs);
        break;
      case StepKind::EqualInQuotient:
        step.passed = g.image(step.lhs) == g.image(step.rhs);
        break;
      case StepKind::ConjugateInB3:
        step.passed = find_b3_conjugator(step.lhs, step.rhs, 4, step.detail);
        break;
      case StepKind::ConjugateInQuotient: {
        const int h = g.find_conjugator(g.image(step.lhs), g.image(step.rhs));
        step.passed = h >= 0;
        if (step.passed) step.detail = word_text(g.word(h));
        break;
      }
    }
    report.steps.push_back(std::move(step));
  };

  const BraidWord delta = garside_delta(3);
  const BraidWord delta4 = delta.pow(4);
  const BraidWord full = b3("1 2");

  // (sigma_1^-2 sigma_2)^3, the mirror of (sigma_1^2 sigma_2^-1)^3.
  const BraidWord alpha1 = b3("1^2 -2").pow(3);
  const BraidWord alpha1_bar = b3("1^-2 2").pow(3);
  add("A0 mirror of (s1^2 s2^-1)^3", StepKind::ExactInB3, BraidWord(3, [&] {
        auto l = alpha1.letters();
        for (int& x : l) x = -x;
        return l;
      }()),
      alpha1_bar);
  add("A1", StepKind::ExactInB3, alpha1_bar, b3("1^-2 2").pow(2) * b3("-2 -1 -2 1 2 -1 2"));
  add("A2", StepKind::ExactInB3, b3("1^-2 2").pow(2) * b3("-2 -1 -2 1 2 -1 2"),
      b3("1^-2 2 1^-2 -1 -2 1 2 -1 2"));
  add("A3", StepKind::ExactInB3, b3("1^-2 2 1^-2 -1 -2 1 2 -1 2"), b3("1^-2 2 1^-3 2^-2 1 2^2"));
  add("A4 three 5-moves", StepKind::EqualInQuotient, b3("1^-2 2 1^-3 2^-2 1 2^2"), b3("1^3 2 1^2 2^3 1 2^2"));
  add("A5", StepKind::ExactInB3, b3("1^3 2 1^2 2^3 1 2^2"), full.pow(6));
  add("A6 (s1 s2)^6 = Delta^4", StepKind::ExactInB3, full.pow(6), delta4);
  add("A7 Delta^4 commutes with s1", StepKind::ExactInB3, delta4 * b3("1"), b3("1") * delta4);
  add("A8 Delta^4 commutes with s2", StepKind::ExactInB3, delta4 * b3("2"), b3("2") * delta4);
  add("A9 chain", StepKind::EqualInQuotient, alpha1_bar, full.pow(6));

  const BraidWord alpha2 = b3("1^2 2^2 1^-2 2^2 1^2 2^-2");
  const BraidWord beta = b3("1 2^2 1^-2 2") * b3("2 1^2 2^-2 1");
  const BraidWord beta5 = b3("1 2^2 1^3 2") * b3("2 1^2 2^3 1");
  const BraidWord sandwich = delta4 * b3("2^-3 1^-2 1^-3 2^-2") * delta4;
  add("B1 conjugation", StepKind::ConjugateInB3, alpha2, beta);
  add("B2 two 5-moves", StepKind::EqualInQuotient, beta, beta5);
  add("B3 Delta^4 first form", StepKind::ExactInB3, delta4, b3("1^2 2^3 1 2^2 1^3 2"));
  add("B4 Delta^4 second form", StepKind::ExactInB3, delta4, b3("2^2 1^3 2 1^2 2^3 1"));
  add("B5", StepKind::ExactInB3, beta5, sandwich);
  add("B6 two 5-moves", StepKind::EqualInQuotient, sandwich, delta.pow(8));
  add("B7 chain", StepKind::ConjugateInQuotient, alpha2, full.pow(12));

  const BraidWord u2 = b3("1^3 2") * full.pow(3) * b3("1^2") * full.pow(3) * b3("2 -1") * full.pow(6);
  const BraidWord u3 = b3("1^3 2 2 1^2 2 1^2 1^2 1 2^2 2^2 1 2^2 1 1 1 2^2 1 2^2 2^2 2 -1");
  const BraidWord u4 = b3("1^3 2^2 1^2 2 1^5 2^4 1 2^2 1^3 2^2 1 2^5 -1");
  const BraidWord gamma = b3("1^-2 2^2").pow(3);
  add("C1", StepKind::ExactInB3, full.pow(15), b3("1^3 2 1^2 2 -1") * full.pow(12));
  add("C2", StepKind::ExactInB3, b3("1^3 2 1^2 2 -1") * full.pow(12), u2);
  add("C3", StepKind::ExactInB3, u2, u3);
  add("C4", StepKind::ExactInB3, u3, u4);
  add("C5 5-moves", StepKind::EqualInQuotient, u4, gamma);
  add("C6 conjugation", StepKind::ConjugateInQuotient, gamma, gamma.inverse());
  add("C7 5-moves", StepKind::EqualInQuotient, gamma.inverse(), full.pow(-15));
  add("C8 (s1 s2)^30 is trivial", StepKind::EqualInQuotient, full.pow(30), BraidWord(3, {}));
  add("D1 (s1 s2)^18 = (s1 s2)^-12", StepKind::EqualInQuotient, full.pow(18), full.pow(-12));
  add("D2 (s1 s2)^24 = (s1 s2)^-6", StepKind::EqualInQuotient, full.pow(24), full.pow(-6));
  return report;
}

}  // namespace tanglekit
