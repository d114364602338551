#pragma once

#include "zpk/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zpk {

/// The ring statistics that parameterize every closed-form bound: order,
/// zero-divisor count (0 included), annihilator sizes of the nonzero zero
/// divisors, and the zero-product (k-1)-tuple count.
struct ZeroProfile {
    long long n = 0;
    long long z = 0;
    std::vector<long long> ann_sizes; // one entry per x != 0 in Z(R)
    BigInt ann_k_minus_1 = 1;
    int k = 2;
};

struct BoundPair {
    Rational lower;
    Rational upper;
    std::string source; // stable identifier: "t1", "t2", "c25", "c28", "c2"
};

/// P_d(x,y) = sum_{i=0..d} (-1)^i (i+1) C(d+2, i+2) x^{d-i} y^i.
Rational poly_P(int d, const Rational& x, const Rational& y);

/// Recursive lower/upper bounds from the (n, |Z|, |Ann(x)|, |Ann_{k-1}|)
/// statistics. Exact on both sides at k = 2.
BoundPair t1_bounds(const ZeroProfile& profile);

/// Coarser recursive bounds; lower attained iff R is a field, upper attained
/// iff Z(R)^2 = 0.
BoundPair t2_bounds(const ZeroProfile& profile);

/// The k = 3 specialization of t1_bounds with |Ann_2| eliminated.
BoundPair c25_bounds_k3(const ZeroProfile& profile);

/// Bounds on zp_k from zp_{k-1}: lower attained iff field, upper iff
/// Z(R)^2 = 0.
BoundPair c28_recursive(const Rational& zp_prev, long long n, long long z, int k);

/// Explicit (non-recursive) upper bound (n^k - {n+(k-1)z-k}(n-z)^{k-1})/n^k,
/// attained iff Z(R)^2 = 0.
Rational explicit_upper(long long n, long long z, int k);

/// zp_k of a field of order n: (n^k - (n-1)^k)/n^k.
Rational field_zp(long long n, int k);

/// Sharp local upper bound
/// (p^{a-1}{p^k - (k+p-1)(p-1)^{k-1}} + k(p-1)^{k-1}) / p^{k+a-1}.
Rational bk(long long p, int alpha, int k);

/// zp_k of the idealization of (Z_p)^{alpha-1} in Z_p; same value as bk but
/// derived through the explicit upper bound at (n, z) = (p^alpha, p^{alpha-1}).
Rational idealization_zp(long long p, int alpha, int k);

/// Product bound for a direct product of local rings of pairwise distinct
/// prime-power orders: prod bk(p_i, alpha_i, k).
Rational t6_product_bound(const std::vector<std::pair<long long, int>>& factors, int k);

/// Order-only bounds from the factorization of |R|: the product of Galois
/// field values from below, the product of prime field values from above.
BoundPair c2_bounds(const std::vector<std::pair<long long, int>>& factorization, int k);

} // namespace zpk
