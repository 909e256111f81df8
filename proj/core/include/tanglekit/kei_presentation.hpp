#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanglekit/kei.hpp"
#include "tanglekit/link_diagram.hpp"

namespace tanglekit {

inline constexpr std::size_t kDefaultKeiCap = 20000;

struct KeiRelation {
  LeftNormedWord lhs;
  LeftNormedWord rhs;

  friend bool operator==(const KeiRelation&, const KeiRelation&) = default;
};

/// Generators 0..generator_count-1, word relations, and an optional Burnside
/// exponent n imposing r_n(u, w) for every pair of elements.
struct KeiPresentation {
  int generator_count = 0;
  std::vector<KeiRelation> relations;
  std::optional<int> burnside_exponent;

  /// Throws Error when a word is empty or mentions a missing generator.
  void validate() const;
};

/// r_n as (a, w): w is the alternating word over {a = 0, b = 1} with
/// phi(w) = n. Throws Error for n < 2.
KeiRelation r_n_relation(int n);

/// Q(m, n): m free generators with Burnside exponent n (n = 0 means none).
KeiPresentation free_burnside_presentation(int m, int n);

/// One generator per diagram arc, then one per split circle; for every
/// crossing with under-arcs a (position 0), c (position 2) and over-arc b
/// the relation c = a*b.
KeiPresentation fundamental_kei(const LinkDiagram& d);

/// Text format: `gens m`, `rel <word> = <word>`, `burnside n`, `#` comments.
KeiPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const KeiPresentation& p);

/// Core group presentation: generators = arcs (and split circles), one
/// relator y_i y_j^-1 y_i y_k^-1 per crossing (y_j over-arc). Text only.
struct GroupPresentation {
  int generator_count = 0;
  /// Relators as signed 1-based generator indices (-k is the inverse).
  std::vector<std::vector<int>> relators;

  [[nodiscard]] std::string to_string() const;
};
GroupPresentation core_group_presentation(const LinkDiagram& d);

enum class BurnsideScope {
  /// r_n(g, z) for every generator g and every element z; equivalent to all
  /// pairs because right multiplications are automorphisms.
  AllPairs,
  /// r_n only between generators. Used to compare against the full quotient.
  GeneratorPairsOnly,
};

struct EnumerationOptions {
  std::size_t cap = kDefaultKeiCap;
  BurnsideScope burnside_scope = BurnsideScope::AllPairs;
  /// Operator relators (R_u R_w)^n are added for elements u, w reached by
  /// generator paths of length <= operator_depth + 1 ...
  int operator_depth = 1;
  /// ... until their total length exceeds this many letters.
  std::size_t operator_relator_budget = 4096;
};

struct EnumerationResult {
  bool completed = false;
  /// Valid when completed; elements are numbered breadth-first from the
  /// generators.
  FiniteKei kei;
  std::vector<int> generator_images;
  std::size_t cap = 0;
  std::size_t deductions = 0;
  /// Highest live element count during the run.
  std::size_t peak_rows = 0;
};

/// Enumerates the Kei presented by `p`. Completes with a table that has been
/// checked against the Kei axioms, every relation and (if set) r_n on all
/// pairs; or stops with completed = false when more than `cap` live elements
/// would be needed. Throws EnumerationFailure if a fixpoint fails the final
/// verification (an internal error).
EnumerationResult enumerate(const KeiPresentation& p, const EnumerationOptions& options = {});

/// enumerate(fundamental_kei(d) with Burnside exponent n).
EnumerationResult burnside_kei(const LinkDiagram& d, int n, const EnumerationOptions& options = {});

/// Violations of r_n(u, w) over all ordered pairs (empty when it holds).
std::vector<std::pair<int, int>> burnside_violations(const FiniteKei& k, int n);

/// Reads TANGLEKIT_CAP from the environment, falling back to `fallback`.
std::size_t cap_from_environment(std::size_t fallback = kDefaultKeiCap);

}  // namespace tanglekit
