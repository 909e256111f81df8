#include "tanglekit/braid_word.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "tanglekit/errors.hpp"
#include "tanglekit/union_find.hpp"

namespace tanglekit {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw ParseError("a braid needs at least one strand");
  for (int letter : letters_) {
    if (letter == 0 || std::abs(letter) > strands_ - 1) {
      throw ParseError("braid letter " + std::to_string(letter) + " invalid for B_" +
                       std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(int exponent) const {
  const BraidWord base = exponent < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int k = 0; k < std::abs(exponent); ++k) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::spliced(std::size_t at, const BraidWord& insert) const {
  std::vector<int> out(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), insert.letters_.begin(), insert.letters_.end());
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(at), letters_.end());
  return BraidWord(std::max(strands_, insert.strands_), std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(std::max(a.strands_, b.strands_), std::move(out));
}

std::vector<int> BraidWord::permutation() const {
  // position -> strand currently there
  std::vector<int> at(strands_);
  std::iota(at.begin(), at.end(), 0);
  for (int letter : letters_) {
    const int i = std::abs(letter) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> result(strands_);
  for (int pos = 0; pos < strands_; ++pos) result[at[pos]] = pos;
  return result;
}

int BraidWord::permutation_cycles() const {
  auto perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  auto to_int = [](std::string_view s) {
    int v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
      throw ParseError("bad braid token '" + std::string(s) + "'");
    }
    return v;
  };
  while (in >> token) {
    std::string_view t = token;
    int power = 1;
    if (auto caret = t.find('^'); caret != std::string_view::npos) {
      power = to_int(t.substr(caret + 1));
      t = t.substr(0, caret);
    }
    const int letter = to_int(t);
    for (int k = 0; k < std::abs(power); ++k) letters.push_back(power < 0 ? -letter : letter);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord garside_delta(int strands) {
  std::vector<int> letters;
  for (int k = strands - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) letters.push_back(i);
  }
  return BraidWord(strands, std::move(letters));
}

LinkDiagram braid_closure(const BraidWord& word) {
  const int n = word.strands();
  int next_label = 0;
  std::vector<int> start(n);
  for (int& s : start) s = next_label++;
  std::vector<int> current = start;
  std::vector<bool> touched(n, false);
  std::vector<Crossing> crossings;
  crossings.reserve(word.length());

  // Strands run upward; at sigma_i the incoming ends are a (left) and b (right),
  // the outgoing ends c (left) and d (right). Strand a runs to d, b runs to c.
  for (int letter : word.letters()) {
    const int i = std::abs(letter) - 1;
    const int a = current[i];
    const int b = current[i + 1];
    const int c = next_label++;
    const int d = next_label++;
    if (letter > 0) {
      crossings.push_back(Crossing{{b, d, c, a}});  // b->c passes under
    } else {
      crossings.push_back(Crossing{{a, b, d, c}});  // a->d passes under
    }
    current[i] = c;
    current[i + 1] = d;
    touched[i] = touched[i + 1] = true;
  }

  UnionFind uf(next_label);
  int circles = 0;
  for (int i = 0; i < n; ++i) {
    if (!touched[i]) {
      ++circles;
      continue;
    }
    uf.unite(current[i], start[i]);
  }
  for (auto& x : crossings) {
    for (int& e : x.edges) e = uf.find(e);
  }
  return LinkDiagram(std::move(crossings), circles);
}

}  // namespace tanglekit
