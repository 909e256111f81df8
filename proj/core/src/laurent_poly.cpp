#include "tanglekit/laurent_poly.hpp"

#include <sstream>

#include "tanglekit/errors.hpp"

namespace tanglekit {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

int LaurentPoly::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::scale_exponents(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::divide_exponents(int divisor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0) {
      throw Error("divide_exponents: exponent " + std::to_string(e) +
                  " is not a multiple of " + std::to_string(divisor));
    }
    out.terms_.emplace(e / divisor, c);
  }
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error("divide_exact: division by zero polynomial");
  const int span = divisor.max_exponent() - divisor.min_exponent();
  const BigInt& lead = divisor.terms_.rbegin()->second;
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < span) {
      throw Error("divide_exact: polynomial is not divisible");
    }
    const auto& [e, c] = *remainder.terms_.rbegin();
    if (c % lead != 0) throw Error("divide_exact: polynomial is not divisible");
    LaurentPoly term = monomial(c / lead, e - divisor.max_exponent());
    quotient += term;
    remainder -= term * divisor;
  }
  return quotient;
}

std::string LaurentPoly::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << "*";
    out << variable;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace tanglekit
