#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tanglekit/link_diagram.hpp"

namespace tanglekit {

/// Word in the braid group B_n: letter i > 0 is sigma_i, letter -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws ParseError if a letter is zero or references a missing generator.
  BraidWord(int strands, std::vector<int> letters);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  [[nodiscard]] BraidWord inverse() const;
  [[nodiscard]] BraidWord pow(int exponent) const;
  /// Copy with `insert` spliced in before position `at`.
  [[nodiscard]] BraidWord spliced(std::size_t at, const BraidWord& insert) const;

  /// Permutation induced on strand positions: result[i] is where the strand
  /// starting at position i ends.
  [[nodiscard]] std::vector<int> permutation() const;
  [[nodiscard]] int permutation_cycles() const;

  [[nodiscard]] std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace-separated signed generator indices ("1 1 2 -1").
/// A token may carry a power, e.g. "1^-3" stands for three letters -1.
BraidWord parse_braid(std::string_view text, int strands);

/// sigma_1 sigma_2 ... sigma_{n-1} sigma_1 ... : the Garside element Delta_n.
BraidWord garside_delta(int strands);

/// Standard closure of the braid as a PD diagram. Letter count equals crossing
/// count; untouched strands become split circles. Positive letters give
/// positive crossings for the upward orientation of the strands.
LinkDiagram braid_closure(const BraidWord& word);

}  // namespace tanglekit
