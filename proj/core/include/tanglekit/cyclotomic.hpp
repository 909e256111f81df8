#pragma once

#include <array>
#include <string>

#include "tanglekit/bigint.hpp"
#include "tanglekit/laurent_poly.hpp"

namespace tanglekit {

/// Element of Z[zeta_20] written in the basis 1, s, ..., s^7 modulo
/// Phi_20(s) = s^8 - s^6 + s^4 - s^2 + 1.
class CyclotomicValue {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 20;

  CyclotomicValue() = default;

  /// Residue of s^k for any integer k.
  static CyclotomicValue power(long long k);

  [[nodiscard]] const std::array<BigInt, kDegree>& coordinates() const { return c_; }
  [[nodiscard]] bool is_zero() const;

  /// Image under s -> s^k; k must be a unit mod 20.
  [[nodiscard]] CyclotomicValue galois_conjugate(int k) const;

  CyclotomicValue& operator+=(const CyclotomicValue& other);
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator*(const BigInt& k, CyclotomicValue a);
  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

  /// "[c0, c1, ..., c7]".
  [[nodiscard]] std::string to_string() const;

 private:
  std::array<BigInt, kDegree> c_{};
};

/// p(s) evaluated at s = e^{i pi / 10}, so t = s^2 = e^{i pi / 5}.
CyclotomicValue eval_at_fifth_root(const LaurentPoly& p_in_s);

}  // namespace tanglekit
