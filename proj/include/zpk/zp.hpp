#pragma once

#include "zpk/rational.hpp"
#include "zpk/ring.hpp"

#include <vector>

namespace zpk {

/// Default cap on the number of tuples the brute-force oracle enumerates.
inline constexpr long long kDefaultBruteForceCap = 10'000'000;

/// counts[r] = number of k-tuples whose product is element r; sums to n^k.
struct ProductCountVector {
    int k = 1;
    std::vector<BigInt> counts;
};

/// Full product distribution by the convolution recurrence
/// N_k(r) = sum_{s,a : s*a = r} N_{k-1}(s), in O(k n^2) exact additions.
ProductCountVector product_count_vector(const TableRing& r, int k);

/// |Ann_k(R)| = counts[zero]; equals 1 at k = 1.
BigInt ann_k_count(const TableRing& r, int k);

/// zp_k(R) = |Ann_k(R)| / n^k in lowest terms.
Rational zp_exact(const TableRing& r, int k);

/// Same contract as zp_exact via explicit enumeration of all n^k tuples.
/// Exists solely as an independent oracle; CapacityError above the cap.
Rational zp_bruteforce(const TableRing& r, int k, long long cap = kDefaultBruteForceCap);

/// Splits Product nodes (zp_k is multiplicative over direct products) and
/// runs the table computation on the leaves.
Rational zp_expr(const RingExpr& expr, int k, long long cap = kDefaultMaterializeCap);

} // namespace zpk
