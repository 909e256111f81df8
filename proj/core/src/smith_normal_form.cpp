#include "tanglekit/smith_normal_form.hpp"

#include <utility>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
  bool found;
};

Pivot min_abs_entry(const IntMatrix& m, std::size_t t, std::size_t cols) {
  Pivot best{0, 0, false};
  BigInt best_abs;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < cols; ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs(m[i][j]);
      if (!best.found || a < best_abs) {
        best = {i, j, true};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw Error("smith_normal_form: ragged matrix");
  }

  std::vector<BigInt> factors;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    Pivot p = min_abs_entry(m, t, cols);
    if (!p.found) break;
    std::swap(m[t], m[p.row]);
    swap_cols(m, t, p.col);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column t: move it to the pivot.
        Pivot q{t, t, true};
        BigInt best = abs(m[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] != 0 && abs(m[i][t]) < best) {
            best = abs(m[i][t]);
            q = {i, t, true};
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] != 0 && abs(m[t][j]) < best) {
            best = abs(m[t][j]);
            q = {t, j, true};
          }
        }
        std::swap(m[t], m[q.row]);
        swap_cols(m, t, q.col);
        continue;
      }
      // Row and column are clean; enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(abs(m[t][t]));
  }
  return factors;
}

}  // namespace tanglekit
