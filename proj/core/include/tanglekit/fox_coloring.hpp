#pragma once

#include <string>
#include <vector>

#include "tanglekit/bigint.hpp"
#include "tanglekit/link_diagram.hpp"
#include "tanglekit/smith_normal_form.hpp"

namespace tanglekit {

/// Fox coloring relations: one row per crossing, one column per diagram arc
/// followed by one column per split circle. Each row has +1 at both under-arcs
/// and -2 at the over-arc (summed when arcs coincide).
struct ColoringMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> entries;

  [[nodiscard]] IntMatrix to_int_matrix() const;
};

/// Finite abelian group as a divisor chain of cyclic orders (each >= 2,
/// each dividing the next).
struct AbelianGroup {
  std::vector<BigInt> cyclic_orders;

  /// Canonical divisor-chain form of a direct sum of cyclic groups of the
  /// given orders (orders 0 and negative values are rejected, 1s dropped).
  static AbelianGroup from_cyclic(const std::vector<BigInt>& orders);
  /// Z_n^k.
  static AbelianGroup elementary(long long n, int k);

  [[nodiscard]] BigInt order() const;
  /// "Z5 + Z5", or "0" for the trivial group.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

ColoringMatrix coloring_matrix(const LinkDiagram& d);

/// Z_n-solutions of M x = 0 for an integer matrix with `cols` columns.
/// Throws InvalidModulus when n < 2.
AbelianGroup kernel_mod_n(const IntMatrix& m, int cols, long long n);

/// Col_n(D), including the constant colorings. Throws InvalidModulus when n < 2.
AbelianGroup col_group(const LinkDiagram& d, long long n);

/// True iff |Col_n(D)| > n^components.
bool has_nontrivial_colorings(const LinkDiagram& d, long long n);

/// |det| of the link: product of the nonzero invariant factors when the
/// coloring matrix has nullity one, otherwise 0.
BigInt determinant(const LinkDiagram& d);

}  // namespace tanglekit
