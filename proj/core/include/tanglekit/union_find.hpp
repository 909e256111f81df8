#pragma once

#include <numeric>
#include <vector>

namespace tanglekit {

/// Disjoint-set forest with path halving. The smaller index always becomes
/// the representative, so class representatives are deterministic.
class UnionFind {
 public:
  explicit UnionFind(int size = 0) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two distinct classes were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  [[nodiscard]] int size() const { return static_cast<int>(parent_.size()); }

  /// Dense class ids ordered by smallest member.
  std::vector<int> dense_classes(int* count = nullptr) {
    std::vector<int> id(parent_.size(), -1);
    int next = 0;
    std::vector<int> out(parent_.size());
    for (int i = 0; i < size(); ++i) {
      int r = find(i);
      if (id[r] < 0) id[r] = next++;
      out[i] = id[r];
    }
    if (count != nullptr) *count = next;
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace tanglekit
