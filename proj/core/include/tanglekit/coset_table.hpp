#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tanglekit {

/// Thrown internally when a definition would push the live row count past
/// the cap. Callers turn it into their own outcome.
struct CapReached {};

/// Partial action table with coincidence processing.
///
/// Rows are points, columns are generators acting on the right. Every column
/// has an inverse column (possibly itself); the table keeps
/// T[x][c] = y  <=>  T[y][inverse(c)] = x. Merging rows follows the usual
/// Todd-Coxeter coincidence routine with a union-find forwarding array.
class CosetTable {
 public:
  static constexpr int kUndefined = -1;

  CosetTable(int columns, std::vector<int> inverse_column, std::size_t cap);

  [[nodiscard]] int columns() const { return columns_; }
  [[nodiscard]] int inverse(int column) const { return inverse_[column]; }
  [[nodiscard]] std::size_t allocated() const { return alive_.size(); }
  [[nodiscard]] std::size_t live_count() const { return live_; }
  [[nodiscard]] std::size_t cap() const { return cap_; }
  [[nodiscard]] std::size_t merges() const { return merges_; }
  [[nodiscard]] bool alive(int row) const { return alive_[row] != 0; }

  [[nodiscard]] int get(int row, int column) const {
    return table_[static_cast<std::size_t>(row) * columns_ + column];
  }

  /// Adds a row with an empty action; throws CapReached past the cap.
  int add_row();
  /// Row and column through which `row` was defined; -1 for rows from add_row.
  [[nodiscard]] int parent(int row) const { return parent_[row]; }
  [[nodiscard]] int parent_column(int row) const { return parent_column_[row]; }
  /// Defines T[row][column] as a fresh row and returns it.
  int define(int row, int column);
  /// Sets T[row][column] = target together with the inverse entry.
  void link(int row, int column, int target);

  /// Representative of a possibly dead row.
  int find(int row);
  /// Identifies two rows and processes all consequences.
  void coincidence(int a, int b);

  /// Follows `word` from `row` without defining anything; kUndefined if the
  /// trace runs off the table.
  [[nodiscard]] int trace(int row, std::span<const int> word) const;

  /// HLT scan: makes `from`·word = `to` hold, defining rows as needed.
  void scan_and_fill(int from, std::span<const int> word, int to);
  /// Scan without definitions: records deductions and coincidences only.
  /// Returns true when something changed.
  bool scan(int from, std::span<const int> word, int to);

  /// Whether every live row has all columns defined.
  [[nodiscard]] bool complete() const;

  /// Live rows renumbered in breadth-first order from `roots`; rows not
  /// reachable from the roots are dropped. Returns old -> new (or -1).
  [[nodiscard]] std::vector<int> bfs_order(std::span<const int> roots) const;

 private:
  void set_entry(int row, int column, int value) {
    table_[static_cast<std::size_t>(row) * columns_ + column] = value;
  }
  void merge(int a, int b, std::vector<int>& queue);

  int columns_;
  std::vector<int> inverse_;
  std::size_t cap_;
  std::vector<int> table_;
  std::vector<int> forward_;
  std::vector<int> parent_;
  std::vector<int> parent_column_;
  std::vector<char> alive_;
  std::size_t live_ = 0;
  std::size_t merges_ = 0;
};

}  // namespace tanglekit
