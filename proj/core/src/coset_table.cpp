#include "tanglekit/coset_table.hpp"

#include <deque>

#include "tanglekit/errors.hpp"

namespace tanglekit {

CosetTable::CosetTable(int columns, std::vector<int> inverse_column, std::size_t cap)
    : columns_(columns), inverse_(std::move(inverse_column)), cap_(cap) {
  if (static_cast<int>(inverse_.size()) != columns_) throw Error("inverse column map has the wrong size");
  for (int c = 0; c < columns_; ++c) {
    if (inverse_[c] < 0 || inverse_[c] >= columns_ || inverse_[inverse_[c]] != c) {
      throw Error("inverse column map is not an involution");
    }
  }
}

int CosetTable::add_row() {
  if (live_ >= cap_) throw CapReached{};
  const int row = static_cast<int>(alive_.size());
  table_.resize(table_.size() + static_cast<std::size_t>(columns_), kUndefined);
  forward_.push_back(row);
  parent_.push_back(-1);
  parent_column_.push_back(-1);
  alive_.push_back(1);
  ++live_;
  return row;
}

int CosetTable::define(int row, int column) {
  const int fresh = add_row();
  parent_[fresh] = row;
  parent_column_[fresh] = column;
  link(row, column, fresh);
  return fresh;
}

void CosetTable::link(int row, int column, int target) {
  set_entry(row, column, target);
  set_entry(target, inverse_[column], row);
}

int CosetTable::find(int row) {
  int r = row;
  while (forward_[r] != r) r = forward_[r];
  while (forward_[row] != r) {
    const int next = forward_[row];
    forward_[row] = r;
    row = next;
  }
  return r;
}

void CosetTable::merge(int a, int b, std::vector<int>& queue) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  forward_[b] = a;
  alive_[b] = 0;
  --live_;
  ++merges_;
  queue.push_back(b);
}

void CosetTable::coincidence(int a, int b) {
  std::vector<int> queue;
  merge(a, b, queue);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int dead = queue[i];
    for (int c = 0; c < columns_; ++c) {
      const int target = get(dead, c);
      if (target == kUndefined) continue;
      const int ic = inverse_[c];
      if (get(target, ic) == dead) set_entry(target, ic, kUndefined);
      const int mu = find(dead);
      const int nu = find(target);
      if (get(mu, c) != kUndefined) {
        merge(nu, get(mu, c), queue);
      } else if (get(nu, ic) != kUndefined) {
        merge(mu, get(nu, ic), queue);
      } else {
        set_entry(mu, c, nu);
        set_entry(nu, ic, mu);
      }
    }
  }
}

int CosetTable::trace(int row, std::span<const int> word) const {
  for (int c : word) {
    row = get(row, c);
    if (row == kUndefined) return kUndefined;
  }
  return row;
}

void CosetTable::scan_and_fill(int from, std::span<const int> word, int to) {
  const int len = static_cast<int>(word.size());
  for (;;) {
    from = find(from);
    to = find(to);
    int f = from;
    int i = 0;
    while (i < len && get(f, word[i]) != kUndefined) f = get(f, word[i++]);
    if (i == len) {
      if (f != to) coincidence(f, to);
      return;
    }
    int b = to;
    int j = len - 1;
    while (j >= i && get(b, inverse_[word[j]]) != kUndefined) b = get(b, inverse_[word[j--]]);
    if (j < i) {
      coincidence(f, b);
      return;
    }
    if (j == i) {
      link(f, word[i], b);
      return;
    }
    define(f, word[i]);
  }
}

bool CosetTable::scan(int from, std::span<const int> word, int to) {
  const int len = static_cast<int>(word.size());
  from = find(from);
  to = find(to);
  int f = from;
  int i = 0;
  while (i < len && get(f, word[i]) != kUndefined) f = get(f, word[i++]);
  if (i == len) {
    if (f == to) return false;
    coincidence(f, to);
    return true;
  }
  int b = to;
  int j = len - 1;
  while (j >= i && get(b, inverse_[word[j]]) != kUndefined) b = get(b, inverse_[word[j--]]);
  if (j < i) {
    coincidence(f, b);
    return true;
  }
  if (j == i) {
    link(f, word[i], b);
    return true;
  }
  return false;
}

bool CosetTable::complete() const {
  for (std::size_t r = 0; r < alive_.size(); ++r) {
    if (!alive_[r]) continue;
    for (int c = 0; c < columns_; ++c) {
      if (get(static_cast<int>(r), c) == kUndefined) return false;
    }
  }
  return true;
}

std::vector<int> CosetTable::bfs_order(std::span<const int> roots) const {
  std::vector<int> index(alive_.size(), -1);
  std::deque<int> queue;
  int next = 0;
  for (int r : roots) {
    if (index[r] < 0) {
      index[r] = next++;
      queue.push_back(r);
    }
  }
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int c = 0; c < columns_; ++c) {
      const int t = get(r, c);
      if (t != kUndefined && index[t] < 0) {
        index[t] = next++;
        queue.push_back(t);
      }
    }
  }
  return index;
}

}  // namespace tanglekit
