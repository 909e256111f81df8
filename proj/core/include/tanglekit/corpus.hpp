#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanglekit/link_diagram.hpp"

namespace tanglekit {

struct CorpusEntry {
  std::string name;
  LinkDiagram diagram;
  /// Published determinant, when the record carries a `det:` line.
  std::optional<long long> determinant;
};

/// Parses corpus text: records start with `name: <id>`, optionally followed by
/// `det: <value>`, then PD lines. A malformed record raises MalformedDiagram
/// (or ParseError) whose message names the record.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// Reads a corpus file; CorpusError when it cannot be opened.
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

/// The embedded corpus: unknot, Hopf link, 3_1, 4_1, 8_18, 9_40, 9_49, 9^2_40.
const std::vector<CorpusEntry>& builtin_corpus();
std::string_view builtin_corpus_text();

/// Looks up a builtin entry by name or alias ("trefoil", "figure-eight").
std::optional<CorpusEntry> find_builtin(std::string_view name);

}  // namespace tanglekit
