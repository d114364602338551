#include "zpk/formulas.hpp"

#include "zpk/errors.hpp"

#include <set>

namespace zpk {

namespace {

void check_profile(const ZeroProfile& p) {
    if (p.n < 2 || p.z < 1 || p.z > p.n)
        throw InvalidParameter("inconsistent profile: need 2 <= n and 1 <= |Z| <= n");
    if (static_cast<long long>(p.ann_sizes.size()) != p.z - 1)
        throw InvalidParameter("inconsistent profile: annihilator multiset must have |Z|-1 entries");
    for (long long a : p.ann_sizes)
        if (a < 1 || a > p.n)
            throw InvalidParameter("inconsistent profile: annihilator sizes must lie in [1, n]");
    if (p.ann_k_minus_1 < 1) throw InvalidParameter("inconsistent profile: |Ann_{k-1}| >= 1");
    if (p.k < 2) throw InvalidParameter("bounds require k >= 2");
}

Rational over_nk(const BigInt& numerator, long long n, int k) {
    return Rational(numerator, ipow(n, static_cast<unsigned>(k)));
}

void check_distinct_primes(const std::vector<std::pair<long long, int>>& factors) {
    std::set<long long> seen;
    for (const auto& [p, alpha] : factors) {
        if (!is_prime(p)) throw InvalidParameter(std::to_string(p) + " is not prime");
        if (alpha < 1) throw InvalidParameter("exponents must be >= 1");
        if (!seen.insert(p).second)
            throw InvalidParameter("repeated prime " + std::to_string(p) + " in factorization");
    }
}

} // namespace

Rational poly_P(int d, const Rational& x, const Rational& y) {
    if (d < 0) throw InvalidParameter("poly_P requires d >= 0");
    Rational sum = 0;
    for (int i = 0; i <= d; ++i) {
        Rational term(binomial(static_cast<unsigned>(d + 2), static_cast<unsigned>(i + 2)));
        term *= i + 1;
        for (int j = 0; j < d - i; ++j) term *= x;
        for (int j = 0; j < i; ++j) term *= y;
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BoundPair t1_bounds(const ZeroProfile& p) {
    check_profile(p);
    const BigInt n = p.n, z = p.z;
    const unsigned k = static_cast<unsigned>(p.k);
    const BigInt nk1 = ipow(n, k - 1);
    const BigInt common = nk1 + (n - z) * p.ann_k_minus_1;

    BigInt lower = common, upper = common;
    const BigInt nz_km2 = ipow(n - z, k - 2);
    for (long long a : p.ann_sizes) {
        lower += nk1 - ipow(n - a, k - 1);
        upper += nk1 - (n + (p.k - 2) * z - (p.k - 1) * a) * nz_km2;
    }
    return {over_nk(lower, p.n, p.k), over_nk(upper, p.n, p.k), "t1"};
}

BoundPair t2_bounds(const ZeroProfile& p) {
    check_profile(p);
    const BigInt n = p.n, z = p.z;
    const unsigned k = static_cast<unsigned>(p.k);
    const BigInt nk1 = ipow(n, k - 1);
    const BigInt lower = nk1 + (n - z) * p.ann_k_minus_1;
    const BigInt upper = lower + (z - 1) * (nk1 - ipow(n - z, k - 1));
    return {over_nk(lower, p.n, p.k), over_nk(upper, p.n, p.k), "t2"};
}

BoundPair c25_bounds_k3(const ZeroProfile& p) {
    if (p.k != 3) throw InvalidParameter("this specialization is defined for k = 3 only");
    check_profile(p);
    const BigInt n = p.n, z = p.z;
    BigInt upper = 3 * n * n - 3 * n * z + z * z * z;
    BigInt lower = 3 * n * n - 3 * n * z + z * z;
    for (long long a : p.ann_sizes) {
        upper += 3 * (n - z) * a;
        lower += (3 * n - z) * a - BigInt(a) * a;
    }
    return {over_nk(lower, p.n, 3), over_nk(upper, p.n, 3), "c25"};
}

BoundPair c28_recursive(const Rational& zp_prev, long long n, long long z, int k) {
    if (n < 2 || z < 1 || z > n || k < 2) throw InvalidParameter("need n >= 2, 1 <= z <= n, k >= 2");
    const Rational carried = Rational(n - z, n) * zp_prev;
    const Rational lower = carried + Rational(1, n);
    const BigInt nk1 = ipow(n, static_cast<unsigned>(k - 1));
    const BigInt extra = nk1 + (BigInt(z) - 1) * (nk1 - ipow(BigInt(n) - z, static_cast<unsigned>(k - 1)));
    const Rational upper = carried + over_nk(extra, n, k);
    return {lower, upper, "c28"};
}

Rational explicit_upper(long long n, long long z, int k) {
    if (n < 2 || z < 1 || z > n || k < 2) throw InvalidParameter("need n >= 2, 1 <= z <= n, k >= 2");
    const BigInt num = ipow(n, static_cast<unsigned>(k)) -
                       (BigInt(n) + BigInt(k - 1) * z - k) * ipow(BigInt(n) - z, static_cast<unsigned>(k - 1));
    return over_nk(num, n, k);
}

Rational field_zp(long long n, int k) {
    if (n < 2 || k < 1) throw InvalidParameter("need n >= 2, k >= 1");
    const BigInt nk = ipow(n, static_cast<unsigned>(k));
    return Rational(nk - ipow(BigInt(n) - 1, static_cast<unsigned>(k)), nk);
}

Rational bk(long long p, int alpha, int k) {
    if (!is_prime(p)) throw InvalidParameter("bk requires a prime p");
    if (alpha < 1 || k < 2) throw InvalidParameter("bk requires alpha >= 1 and k >= 2");
    const BigInt pm1k1 = ipow(BigInt(p) - 1, static_cast<unsigned>(k - 1));
    const BigInt num =
        ipow(p, static_cast<unsigned>(alpha - 1)) * (ipow(p, static_cast<unsigned>(k)) - (k + p - 1) * pm1k1) +
        k * pm1k1;
    return Rational(num, ipow(p, static_cast<unsigned>(k + alpha - 1)));
}

Rational idealization_zp(long long p, int alpha, int k) {
    if (!is_prime(p)) throw InvalidParameter("idealization_zp requires a prime p");
    if (alpha < 1 || k < 2) throw InvalidParameter("idealization_zp requires alpha >= 1 and k >= 2");
    // The maximal ideal 0 x M of Z_p * (Z_p)^{alpha-1} squares to zero and has
    // index p, so the explicit upper bound at (p^alpha, p^{alpha-1}) is exact.
    long long n = 1;
    for (int i = 0; i < alpha; ++i) n *= p;
    return explicit_upper(n, n / p, k);
}

Rational t6_product_bound(const std::vector<std::pair<long long, int>>& factors, int k) {
    check_distinct_primes(factors);
    Rational prod = 1;
    for (const auto& [p, alpha] : factors) prod *= bk(p, alpha, k);
    return prod;
}

BoundPair c2_bounds(const std::vector<std::pair<long long, int>>& factorization, int k) {
    check_distinct_primes(factorization);
    if (k < 2) throw InvalidParameter("need k >= 2");
    Rational lower = 1, upper = 1;
    for (const auto& [p, alpha] : factorization) {
        long long q = 1;
        for (int i = 0; i < alpha; ++i) q *= p;
        lower *= field_zp(q, k);
        upper *= field_zp(p, k);
    }
    return {lower, upper, "c2"};
}

} // namespace zpk
