#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tanglekit {

/// One crossing of a PD code: four edge labels listed counterclockwise,
/// starting from an end of the under-strand. Positions 0 and 2 are the two
/// halves of the under-strand, positions 1 and 3 the over-strand.
struct Crossing {
  std::array<int, 4> edges{};

  [[nodiscard]] int under_in() const { return edges[0]; }
  [[nodiscard]] int over_a() const { return edges[1]; }
  [[nodiscard]] int under_out() const { return edges[2]; }
  [[nodiscard]] int over_b() const { return edges[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Unoriented link diagram in planar-diagram form.
///
/// Edge labels are dense in 0..edge_count()-1 and each appears exactly twice.
/// Crossing-free components are carried as a counter (`split_circles`) rather
/// than as phantom edges. Values are immutable after construction.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Validates and normalizes: labels are renumbered densely, preserving order.
  /// Throws MalformedDiagram when a label does not occur exactly twice.
  LinkDiagram(std::vector<Crossing> crossings, int split_circles);

  static LinkDiagram unlink(int components) { return LinkDiagram({}, components); }

  [[nodiscard]] std::span<const Crossing> crossings() const { return crossings_; }
  [[nodiscard]] int crossing_count() const { return static_cast<int>(crossings_.size()); }
  /// Number of PD edges ("arcs" of the PD code, not over-strand arcs).
  [[nodiscard]] int edge_count() const { return 2 * crossing_count(); }
  [[nodiscard]] int split_circles() const { return split_circles_; }

  /// Components by strand tracing, plus split circles.
  [[nodiscard]] int component_count() const;

  /// Over-strand arcs: maps each edge label to the diagram arc containing it.
  /// Arcs are numbered densely in order of their smallest edge label.
  [[nodiscard]] std::vector<int> edge_to_arc() const;
  [[nodiscard]] int arc_count() const;

  /// Same diagram with every crossing switched (tuples rotated by one).
  [[nodiscard]] LinkDiagram mirror() const;

  /// Canonical representation: every tuple starts at the smaller under label.
  /// Two diagrams with equal canonical forms differ only by the choice of
  /// under-strand end in each tuple.
  [[nodiscard]] LinkDiagram canonical() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int split_circles_ = 0;
};

/// Parses PD text: lines `X a b c d` and optional `O k` (k crossing-free
/// circles). `/` and `;` also separate records; `#` starts a comment.
/// Throws ParseError on bad syntax and MalformedDiagram on bad label counts.
LinkDiagram parse_pd(std::string_view text);

/// Inverse of parse_pd, one record per line, labels written 1-based.
std::string serialize_pd(const LinkDiagram& diagram);

/// Orientation data obtained by tracing the strands of a diagram.
struct OrientedDiagram {
  /// Component index (0-based, crossing components only) per edge label.
  std::vector<int> edge_component;
  /// For every crossing, the position (0..3) through which each strand enters:
  /// `under_in` is 0 or 2, `over_in` is 1 or 3.
  std::vector<std::array<int, 2>> entry;
  /// +1 / -1 per crossing under the chosen orientation.
  std::vector<int> signs;
  int components = 0;

  [[nodiscard]] int writhe() const;
};

/// Orients every crossing component. Components containing an under-crossing
/// are oriented so that their first under-passage (lowest crossing index)
/// enters at position 0, matching the PD convention; `reverse[i]` flips
/// component i afterwards.
OrientedDiagram orient(const LinkDiagram& diagram, std::span<const bool> reverse = {});

}  // namespace tanglekit
