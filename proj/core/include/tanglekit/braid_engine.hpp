#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tanglekit/braid_word.hpp"
#include "tanglekit/laurent_poly.hpp"

namespace tanglekit {

/// 2x2 matrix over Z[t, t^-1], row-major.
struct LaurentMatrix2 {
  std::array<LaurentPoly, 4> e{LaurentPoly(1), LaurentPoly(0), LaurentPoly(0), LaurentPoly(1)};

  static LaurentMatrix2 identity() { return {}; }
  [[nodiscard]] LaurentPoly determinant() const { return e[0] * e[3] - e[1] * e[2]; }
  [[nodiscard]] std::string to_string() const;

  friend LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b);
  friend bool operator==(const LaurentMatrix2&, const LaurentMatrix2&) = default;
};

/// Reduced Burau matrix of a single letter of B_3.
LaurentMatrix2 burau_generator(int letter);

/// Reduced Burau image; faithful on B_3, so equal images mean equal braids.
/// Throws UnsupportedStrandCount unless the word has 3 strands.
LaurentMatrix2 burau_image(const BraidWord& w);

/// Exact equality in B_3 via the Burau image.
bool equal_in_b3(const BraidWord& a, const BraidWord& b);

/// Finite quotient of B_3 realized as a permutation group on its own
/// elements. Element 0 is the identity.
class QuotientGroup {
 public:
  QuotientGroup(std::vector<int> mult, std::vector<std::vector<int>> words);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int identity() const { return 0; }
  [[nodiscard]] int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  [[nodiscard]] int inverse(int a) const { return inverse_[a]; }
  /// Image of sigma_i^{+-1}: letter in {1, -1, 2, -2}.
  [[nodiscard]] int generator(int letter) const;
  /// A shortest word over {1, -1, 2, -2} representing the element.
  [[nodiscard]] const std::vector<int>& word(int a) const { return words_[a]; }
  [[nodiscard]] int element_order(int a) const;
  [[nodiscard]] int power(int a, long long k) const;

  /// Throws UnsupportedStrandCount unless the word has 3 strands.
  [[nodiscard]] int image(const BraidWord& w) const;

  /// Some h with h^-1 a h = b, or -1.
  [[nodiscard]] int find_conjugator(int a, int b) const;

 private:
  int order_;
  std::vector<int> mult_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> words_;
};

/// B_3 / <<sigma_1^k>> by Todd-Coxeter over the trivial subgroup (k >= 2).
/// Throws EnumerationFailure when more than `cap` cosets are needed.
QuotientGroup b3_power_quotient(int k, std::size_t cap = 100000);

/// B_3 / <<sigma_1^5>>, the group of order 600.
const QuotientGroup& coxeter_quotient();

struct ConjugacyCensus {
  int class_count = 0;
  /// Class index of every element (classes numbered by smallest element).
  std::vector<int> class_of;
  /// Per class: size and minimal word length over {s1^+-1, s2^+-1}.
  std::vector<int> class_size;
  std::vector<int> min_length;
  /// A shortest representative word per class.
  std::vector<std::vector<int>> representative;

  [[nodiscard]] int classes_with_length_at_most(int length) const;
};

ConjugacyCensus conjugacy_census(const QuotientGroup& g);

enum class StepKind {
  ExactInB3,
  EqualInQuotient,
  ConjugateInB3,
  ConjugateInQuotient,
};

std::string to_string(StepKind kind);

struct IdentityStep {
  std::string label;
  StepKind kind = StepKind::ExactInB3;
  BraidWord lhs;
  BraidWord rhs;
  bool passed = false;
  /// Conjugator word (for conjugacy steps) or a short note.
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityStep> steps;

  [[nodiscard]] bool all_passed() const;
};

/// Checks every displayed equality in the reduction of the exceptional
/// 3-braids (sigma_1^-2 sigma_2)^3, sigma_1^2 sigma_2^2 sigma_1^-2 sigma_2^2
/// sigma_1^2 sigma_2^-2 and (sigma_1 sigma_2)^15 to powers of the full twist,
/// classifying each as exact in B_3, equal modulo sigma_1^5, or conjugate.
IdentityReport verify_five_move_identities(const QuotientGroup& g = coxeter_quotient());

}  // namespace tanglekit
