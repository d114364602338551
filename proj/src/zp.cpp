#include "zpk/zp.hpp"

#include "zpk/errors.hpp"

namespace zpk {

ProductCountVector product_count_vector(const TableRing& r, int k) {
    if (k < 1) throw InvalidParameter("product counts are defined for k >= 1");
    const int n = r.n;
    ProductCountVector pcv;
    pcv.k = k;
    pcv.counts.assign(static_cast<size_t>(n), 1); // k = 1: one tuple per value
    std::vector<BigInt> next(static_cast<size_t>(n));
    for (int step = 2; step <= k; ++step) {
        for (auto& c : next) c = 0;
        for (int s = 0; s < n; ++s) {
            const BigInt& w = pcv.counts[static_cast<size_t>(s)];
            for (int a = 0; a < n; ++a) next[static_cast<size_t>(r.mul_at(s, a))] += w;
        }
        pcv.counts.swap(next);
    }
    return pcv;
}

BigInt ann_k_count(const TableRing& r, int k) {
    return product_count_vector(r, k).counts[static_cast<size_t>(r.zero)];
}

Rational zp_exact(const TableRing& r, int k) {
    if (k < 2) throw InvalidParameter("zp_k is defined for k >= 2");
    return Rational(ann_k_count(r, k), ipow(r.n, static_cast<unsigned>(k)));
}

Rational zp_bruteforce(const TableRing& r, int k, long long cap) {
    if (k < 2) throw InvalidParameter("zp_k is defined for k >= 2");
    const BigInt total = ipow(r.n, static_cast<unsigned>(k));
    if (total > cap)
        throw CapacityError("brute force over " + total.str() + " tuples exceeds the cap of " +
                            std::to_string(cap));

    // Odometer over (x_1,...,x_k) with prefix products along the way.
    std::vector<int> tuple(static_cast<size_t>(k), 0);
    std::vector<int> prefix(static_cast<size_t>(k) + 1);
    prefix[0] = r.one;
    for (int i = 0; i < k; ++i) prefix[static_cast<size_t>(i) + 1] = r.mul_at(prefix[static_cast<size_t>(i)], 0);
    long long zeros = 0;
    while (true) {
        if (prefix[static_cast<size_t>(k)] == r.zero) ++zeros;
        int pos = k - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == r.n - 1) --pos;
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) tuple[static_cast<size_t>(i)] = 0;
        for (int i = pos; i < k; ++i)
            prefix[static_cast<size_t>(i) + 1] =
                r.mul_at(prefix[static_cast<size_t>(i)], tuple[static_cast<size_t>(i)]);
    }
    return Rational(zeros, total);
}

Rational zp_expr(const RingExpr& expr, int k, long long cap) {
    if (expr.kind == RingExpr::Kind::Product)
        return zp_expr(*expr.left, k, cap) * zp_expr(*expr.right, k, cap);
    return zp_exact(materialize(expr, cap), k);
}

} // namespace zpk
