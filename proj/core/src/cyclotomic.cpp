#include "tanglekit/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

// Residues of s^0 .. s^19.
const std::vector<std::array<BigInt, 8>>& power_table() {
  static const auto table = [] {
    std::vector<std::array<BigInt, 8>> t(CyclotomicValue::kOrder);
    std::array<BigInt, 8> cur{};
    cur[0] = 1;
    for (int k = 0; k < CyclotomicValue::kOrder; ++k) {
      t[k] = cur;
      // Multiply by s, then fold s^8 = s^6 - s^4 + s^2 - 1.
      BigInt top = cur[7];
      for (int i = 7; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = -top;
      cur[2] += top;
      cur[4] -= top;
      cur[6] += top;
    }
    return t;
  }();
  return table;
}

int mod20(long long k) { return static_cast<int>(((k % 20) + 20) % 20); }

}  // namespace

CyclotomicValue CyclotomicValue::power(long long k) {
  CyclotomicValue v;
  v.c_ = power_table()[mod20(k)];
  return v;
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x == 0; });
}

CyclotomicValue CyclotomicValue::galois_conjugate(int k) const {
  if (std::gcd(mod20(k), kOrder) != 1) throw Error("galois_conjugate needs k coprime to 20");
  CyclotomicValue out;
  for (int j = 0; j < kDegree; ++j) {
    if (c_[j] != 0) out += c_[j] * power(static_cast<long long>(j) * k);
  }
  return out;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
  for (int i = 0; i < kDegree; ++i) c_[i] += other.c_[i];
  return *this;
}

CyclotomicValue operator*(const BigInt& k, CyclotomicValue a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  CyclotomicValue out;
  for (int i = 0; i < CyclotomicValue::kDegree; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < CyclotomicValue::kDegree; ++j) {
      if (b.c_[j] == 0) continue;
      const auto& p = power_table()[i + j];
      for (int r = 0; r < CyclotomicValue::kDegree; ++r) {
        if (p[r] != 0) out.c_[r] += a.c_[i] * b.c_[j] * p[r];
      }
    }
  }
  return out;
}

std::string CyclotomicValue::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < kDegree; ++i) out << (i > 0 ? ", " : "") << c_[i];
  out << ']';
  return out.str();
}

CyclotomicValue eval_at_fifth_root(const LaurentPoly& p) {
  CyclotomicValue v;
  for (const auto& [e, coeff] : p.terms()) v += coeff * CyclotomicValue::power(e);
  return v;
}

}  // namespace tanglekit
