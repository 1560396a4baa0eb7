#include "orbitcount/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace orbitcount {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::mutex factorial_mutex;
std::vector<Int>& factorial_table() {
  static std::vector<Int> table{1};
  return table;
}

}  // namespace

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  std::lock_guard lock(factorial_mutex);
  auto& table = factorial_table();
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<int>(table.size()));
  }
  return table[n];
}

Int falling_factorial(long n, int x) {
  if (x < 0) throw std::invalid_argument("falling_factorial: negative length");
  Int result = 1;
  for (int i = 0; i < x; ++i) result *= Int(n - i);
  return result;
}

Int binomial(int n, int r) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (r < 0 || r > n) return 0;
  return factorial(n) / (factorial(r) * factorial(n - r));
}

std::vector<int> divisors(int m) {
  if (m < 1) throw std::invalid_argument("divisors: m must be positive");
  std::vector<int> low, high;
  for (int d = 1; static_cast<long>(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

namespace {

std::mutex partition_mutex;
std::vector<Int>& partition_table() {
  static std::vector<Int> table{1};
  return table;
}

}  // namespace

Int partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: negative argument");
  std::lock_guard lock(partition_mutex);
  auto& table = partition_table();
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    Int acc = 0;
    for (int j = 1;; ++j) {
      const int pent1 = j * (3 * j - 1) / 2;
      const int pent2 = j * (3 * j + 1) / 2;
      if (pent1 > m) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * table[m - pent1];
      if (pent2 <= m) acc += sign * table[m - pent2];
    }
    table.push_back(std::move(acc));
  }
  return table[n];
}

Int pow_int(const Int& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return result;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_fraction(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace orbitcount
