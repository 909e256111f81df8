#pragma once

#include <map>
#include <string>
#include <string_view>

#include "tanglekit/bigint.hpp"

namespace tanglekit {

/// Laurent polynomial in one formal variable with exact integer coefficients.
/// Zero coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt coefficient, int exponent);
  /// The variable itself raised to `exponent`.
  static LaurentPoly power(int exponent) { return monomial(1, exponent); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int min_exponent() const;
  [[nodiscard]] int max_exponent() const;
  [[nodiscard]] BigInt coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  [[nodiscard]] LaurentPoly pow(unsigned exponent) const;

  /// Substitutes x -> x^factor. `factor` may be negative (x -> x^-1 mirrors).
  [[nodiscard]] LaurentPoly scale_exponents(int factor) const;
  /// Divides every exponent by `divisor`; throws if some exponent is not a multiple.
  [[nodiscard]] LaurentPoly divide_exponents(int divisor) const;

  /// Exact quotient; throws tanglekit::Error when `divisor` does not divide.
  [[nodiscard]] LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  /// Renders e.g. "-x^-4 + 2 + x^3" using `variable` as the symbol.
  [[nodiscard]] std::string to_string(std::string_view variable = "x") const;

 private:
  void add_term(int exponent, const BigInt& coefficient);

  Terms terms_;
};

}  // namespace tanglekit
