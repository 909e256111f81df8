#include "tanglekit/fox_coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "tanglekit/errors.hpp"

namespace tanglekit {

IntMatrix ColoringMatrix::to_int_matrix() const {
  IntMatrix m(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = entries[i][j];
  }
  return m;
}

AbelianGroup AbelianGroup::from_cyclic(const std::vector<BigInt>& orders) {
  // Split into prime-power parts, then recombine the k-th largest powers.
  std::map<BigInt, std::vector<BigInt>> primary;
  for (BigInt n : orders) {
    if (n <= 0) throw Error("cyclic group order must be positive");
    for (BigInt p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      BigInt q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      primary[p].push_back(q);
    }
    if (n > 1) primary[n].push_back(n);
  }
  std::size_t length = 0;
  for (auto& [p, powers] : primary) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    length = std::max(length, powers.size());
  }
  std::vector<BigInt> chain(length, BigInt(1));
  for (const auto& [p, powers] : primary) {
    for (std::size_t k = 0; k < powers.size(); ++k) chain[k] *= powers[k];
  }
  std::reverse(chain.begin(), chain.end());
  return AbelianGroup{std::move(chain)};
}

AbelianGroup AbelianGroup::elementary(long long n, int k) {
  return from_cyclic(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(n)));
}

BigInt AbelianGroup::order() const {
  BigInt out = 1;
  for (const auto& c : cyclic_orders) out *= c;
  return out;
}

std::string AbelianGroup::to_string() const {
  if (cyclic_orders.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (i > 0) out << " + ";
    out << 'Z' << cyclic_orders[i];
  }
  return out.str();
}

ColoringMatrix coloring_matrix(const LinkDiagram& d) {
  const auto arc = d.edge_to_arc();
  ColoringMatrix m;
  m.rows = d.crossing_count();
  m.cols = d.arc_count() + d.split_circles();
  m.entries.assign(static_cast<std::size_t>(m.rows), std::vector<int>(static_cast<std::size_t>(m.cols), 0));
  int r = 0;
  for (const auto& x : d.crossings()) {
    m.entries[r][arc[x.edges[0]]] += 1;
    m.entries[r][arc[x.edges[2]]] += 1;
    m.entries[r][arc[x.edges[1]]] -= 2;
    ++r;
  }
  return m;
}

AbelianGroup kernel_mod_n(const IntMatrix& m, int cols, long long n) {
  if (n < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(n));
  const auto factors = smith_normal_form(m);
  std::vector<BigInt> orders;
  for (const auto& f : factors) orders.push_back(boost::integer::gcd(BigInt(n), f));
  for (std::size_t k = factors.size(); k < static_cast<std::size_t>(cols); ++k) orders.emplace_back(n);
  return AbelianGroup::from_cyclic(orders);
}

AbelianGroup col_group(const LinkDiagram& d, long long n) {
  const auto m = coloring_matrix(d);
  return kernel_mod_n(m.to_int_matrix(), m.cols, n);
}

bool has_nontrivial_colorings(const LinkDiagram& d, long long n) {
  const auto group = col_group(d, n);
  return group.order() > boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d.component_count()));
}

BigInt determinant(const LinkDiagram& d) {
  const auto m = coloring_matrix(d);
  const auto factors = smith_normal_form(m.to_int_matrix());
  if (m.cols - static_cast<int>(factors.size()) != 1) return 0;
  BigInt out = 1;
  for (const auto& f : factors) out *= f;
  return out;
}

}  // namespace tanglekit
