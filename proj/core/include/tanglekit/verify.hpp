#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tanglekit/braid_word.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/kei_presentation.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr int kDefaultInstances = 200;

struct CheckResult {
  std::string family;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Families to run; empty means all of verify_families().
  std::vector<std::string> families;
  std::uint64_t seed = kDefaultSeed;
  int instances = kDefaultInstances;
  std::size_t cap = kDefaultKeiCap;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// "coloring", "kei", "braid", "tangle", "jones", "corpus".
const std::vector<std::string>& verify_families();

/// Runs the selected families against `corpus`. Results keep a fixed order
/// regardless of the thread count. Throws Error on an unknown family.
std::vector<CheckResult> run_verification(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {});

// Property suites, also used directly by the tests.

/// Random word in B_strands with 1..max_length letters.
BraidWord random_braid(std::mt19937_64& rng, int strands, int max_length);

/// Copy of `w` with sigma_i^{exponent} inserted at a random position.
BraidWord insert_random_power(std::mt19937_64& rng, const BraidWord& w, int exponent);

/// Random algebraic tangle of depth <= max_depth with small twist leaves.
TangleExpr random_tangle(std::mt19937_64& rng, int max_depth);

/// Number of Z_n assignments to arcs (and split circles) satisfying every
/// crossing relation, by exhaustive search.
std::uint64_t brute_force_coloring_count(const LinkDiagram& d, int n);

/// Col_n of the closure is unchanged by sigma_i^{+-n} insertion in B_3 words
/// of length <= 10.
CheckResult check_coloring_power_moves(std::uint64_t seed, int instances, int n);

/// Col_n of both closures is unchanged by the rational n/q-move of either
/// sign at every 0-tangle site.
CheckResult check_tangle_moves(std::uint64_t seed, int instances, long long n, long long q);

/// |Col_n(N(p/q))| > n iff gcd(n, p) > 1, over twist words of length <= 5.
CheckResult check_fraction_functoriality(std::uint64_t seed, int instances, int n);

/// Zero-ness of the Jones value at t = e^{i pi/5} is unchanged by
/// sigma_i^{+-5} insertion in words of length <= 8.
CheckResult check_jones_power_moves(std::uint64_t seed, int instances);

/// The isomorphism class of BQ_3 is unchanged by sigma_i^{+-3} insertion.
/// Instances whose enumeration hits `cap` are counted as skipped.
CheckResult check_bq3_power_moves(std::uint64_t seed, int instances, std::size_t cap);

}  // namespace tanglekit
