#pragma once

#include <vector>

#include "tanglekit/bigint.hpp"

namespace tanglekit {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all
/// positive; r is the rank. Rows may have any (equal) length; an empty matrix
/// has rank 0.
std::vector<BigInt> smith_normal_form(IntMatrix m);

}  // namespace tanglekit
