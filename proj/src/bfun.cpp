#include "orbitcount/bfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace orbitcount {

namespace {

std::mutex table_mutex;
std::map<std::pair<int, int>, Int>& chain_table() {
  static std::map<std::pair<int, int>, Int> table;
  return table;
}

// Peels the top link s_{p-1} = d | m, so entries (p-1, d) are shared
// across every m that d divides. Caller holds table_mutex.
const Int& chain_sum_locked(int p, int m) {
  static const Int one = 1;
  if (p == 1) return one;
  auto& table = chain_table();
  auto it = table.find({p, m});
  if (it != table.end()) return it->second;
  Int sum = 0;
  for (int d : divisors(m)) sum += d * chain_sum_locked(p - 1, d);
  return table.emplace(std::make_pair(p, m), std::move(sum)).first->second;
}

void check_args(const char* who, int p, int m) {
  if (p < 1 || m < 1) {
    throw std::invalid_argument(std::string(who) + ": require p >= 1 and m >= 1");
  }
}

}  // namespace

Int divisor_chain_sum(int p, int m) {
  check_args("divisor_chain_sum", p, m);
  std::lock_guard lock(table_mutex);
  return chain_sum_locked(p, m);
}

Int divisor_chain_sum_naive(int p, int m) {
  check_args("divisor_chain_sum_naive", p, m);
  if (p > 5 || m > 60) {
    throw std::invalid_argument(
        "divisor_chain_sum_naive: enumeration restricted to p <= 5, m <= 60");
  }
  // Walk chains from the top: levels p-1 down to 1, each level a divisor
  // of the one above.
  Int total = 0;
  struct Frame {
    int value;
    Int product;
  };
  std::vector<Frame> stack{{m, Int(1)}};
  std::vector<int> depth{p - 1};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    int levels_left = depth.back();
    depth.pop_back();
    if (levels_left == 0) {
      total += frame.product;
      continue;
    }
    for (int d : divisors(frame.value)) {
      stack.push_back({d, frame.product * d});
      depth.push_back(levels_left - 1);
    }
  }
  return total;
}

namespace detail {

void inject_chain_sum_for_testing(int p, int m, const Int& value) {
  std::lock_guard lock(table_mutex);
  chain_table()[{p, m}] = value;
}

void clear_chain_sum_cache_for_testing() {
  std::lock_guard lock(table_mutex);
  chain_table().clear();
}

}  // namespace detail

}  // namespace orbitcount
