#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tanglekit {

/// Multiplication table of a finite group, mult[a * order + b] = a·b.
/// No axioms are checked on construction; core_kei validates.
struct GroupTable {
  int order = 0;
  std::vector<int> mult;

  [[nodiscard]] int op(int a, int b) const { return mult[static_cast<std::size_t>(a) * order + b]; }
};

GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Finite Kei as a full operation table; table[a * size + b] = a*b.
class FiniteKei {
 public:
  FiniteKei() = default;
  /// Throws Error when the table has the wrong shape or entries out of range.
  FiniteKei(int size, std::vector<int> table);

  /// a*b = a for all a, b.
  static FiniteKei trivial(int size);

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * size_ + b]; }
  [[nodiscard]] const std::vector<int>& table() const { return table_; }

  friend bool operator==(const FiniteKei&, const FiniteKei&) = default;

 private:
  int size_ = 0;
  std::vector<int> table_;
};

/// i*j = 2j - i mod n.
FiniteKei dihedral_kei(int n);

/// a*b = b a^-1 b. Throws NotAGroup if the table lacks an identity, inverses
/// or associativity.
FiniteKei core_kei(const GroupTable& group);

/// Coordinatewise product; element (a, b) has index a * k2.size() + b.
FiniteKei direct_product(const FiniteKei& k1, const FiniteKei& k2);

struct AxiomViolation {
  int axiom = 0;  // 1: a*a=a, 2: (a*b)*b=a, 3: right distributivity
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// All violating instances, axiom by axiom in lexicographic order of (a,b,c).
std::vector<AxiomViolation> check_axioms(const FiniteKei& k);

/// Isomorphism-invariant 64-bit fingerprint obtained by color refinement.
std::uint64_t invariant_hash(const FiniteKei& k);

/// A bijection f with f(a*b) = f(a)*f(b), or nullopt when none exists.
std::optional<std::vector<int>> kei_isomorphic(const FiniteKei& k1, const FiniteKei& k2);

/// Elements reachable from `seeds` under the operation (in discovery order).
std::vector<int> subkei_closure(const FiniteKei& k, const std::vector<int>& seeds);

/// Table text: size on the first line, then size rows of size integers.
FiniteKei parse_kei_table(std::string_view text);
std::string serialize_kei_table(const FiniteKei& k);

/// Left-normed word: letters x1..xk denote (...((x1*x2)*x3)...)*xk.
struct LeftNormedWord {
  std::vector<int> letters;

  friend bool operator==(const LeftNormedWord&, const LeftNormedWord&) = default;
};

/// Generator names: a..z for up to 26 generators, else x0, x1, ...
std::string generator_name(int index, int generator_count);
/// Parses `*`-joined generator names; throws ParseError on unknown names.
LeftNormedWord parse_word(std::string_view text, int generator_count);
std::string format_word(const LeftNormedWord& w, int generator_count);

/// Evaluates a word in a finite Kei under an assignment of generators.
int evaluate(const FiniteKei& k, const LeftNormedWord& w, const std::vector<int>& images);

/// The isomorphism Q(2,inf) -> Z on a word over {a = 0, b = 1}:
/// phi(a) = 0, phi(b) = 1, phi(w*y) = 2 phi(y) - phi(w).
/// Throws Error on letters other than 0 and 1 or an empty word.
long long phi_eval(const LeftNormedWord& w);

}  // namespace tanglekit
