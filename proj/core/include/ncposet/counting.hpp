#pragma once

#include <cstdint>

namespace ncposet {

/// C(n, k); zero outside 0 <= k <= n. Throws PosetError on 64-bit overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);
/// C(2n, n) / (n + 1).
std::int64_t catalan(std::int64_t n);

/// Cat(n) - 2 Cat(n-2), for n >= 3.
std::int64_t pe_cardinality(int n);
/// (5/(n+1) + 9/(n-3)) C(2n-4, n-4), for n >= 4, evaluated exactly.
std::int64_t pe_cardinality_closed(int n);
/// (-1)^(n-1) Cat(n-1).
std::int64_t nc_moebius_closed(int n);
/// (-1)^(n-1) (4/n) C(2n-5, n-4), for n >= 3 (zero at n = 3).
std::int64_t pe_moebius_closed(int n);

}  // namespace ncposet
