#pragma once

#include "orbitcount/arith.hpp"

namespace orbitcount {

// B(p, m): sum over divisor chains s_1 | s_2 | ... | s_{p-1} | m of the
// product s_1 s_2 ... s_{p-1}. B(1, m) = 1 (single empty chain).
// Memoized; safe for concurrent callers.
Int divisor_chain_sum(int p, int m);

// Same value by explicit enumeration of all chains. Restricted to
// p <= 5, m <= 60 to bound runtime; throws std::invalid_argument beyond.
Int divisor_chain_sum_naive(int p, int m);

namespace detail {
// Overwrites a memo entry. Test hook for exercising self-check failure
// paths; never called by library code.
void inject_chain_sum_for_testing(int p, int m, const Int& value);
void clear_chain_sum_cache_for_testing();
}  // namespace detail

}  // namespace orbitcount
