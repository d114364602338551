#include "zpk/zero_structure.hpp"

#include "zpk/errors.hpp"
#include "zpk/zp.hpp"

#include <algorithm>

namespace zpk {

std::vector<int> zero_divisors(const TableRing& r) {
    std::vector<int> out;
    for (int x = 0; x < r.n; ++x) {
        for (int y = 0; y < r.n; ++y) {
            if (y != r.zero && r.mul_at(x, y) == r.zero) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

std::vector<int> annihilator(const TableRing& r, int x) {
    if (x < 0 || x >= r.n) throw DomainError("element index out of range");
    std::vector<int> out;
    for (int y = 0; y < r.n; ++y)
        if (r.mul_at(x, y) == r.zero) out.push_back(y);
    return out;
}

bool is_field(const TableRing& r) {
    return zero_divisors(r).size() == 1;
}

bool is_local(const TableRing& r) {
    const std::vector<int> z = zero_divisors(r);
    std::vector<char> in_z(static_cast<size_t>(r.n), 0);
    for (int x : z) in_z[static_cast<size_t>(x)] = 1;
    for (int x : z)
        for (int y : z)
            if (!in_z[static_cast<size_t>(r.add_at(x, y))]) return false;
    return true;
}

std::vector<int> maximal_ideal(const TableRing& r) {
    if (!is_local(r)) throw DomainError(r.label + " is not local: Z(R) is not additively closed");
    return zero_divisors(r);
}

bool zsquare_is_zero(const TableRing& r) {
    const std::vector<int> z = zero_divisors(r);
    for (int x : z)
        for (int y : z)
            if (r.mul_at(x, y) != r.zero) return false;
    return true;
}

bool ann_is_prime(const TableRing& r, int x) {
    if (x == r.zero) throw DomainError("annihilator primality is defined for nonzero zero divisors");
    const std::vector<int> ann = annihilator(r, x);
    if (ann.size() == 1) throw DomainError("element " + std::to_string(x) + " is not a zero divisor");
    std::vector<char> in_ann(static_cast<size_t>(r.n), 0);
    for (int y : ann) in_ann[static_cast<size_t>(y)] = 1;
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b)
            if (in_ann[static_cast<size_t>(r.mul_at(a, b))] && !in_ann[static_cast<size_t>(a)] &&
                !in_ann[static_cast<size_t>(b)])
                return false;
    return true;
}

IdealizationZeroSet idealization_zero_set(const TableRing& r) {
    const RingExpr& e = r.origin;
    if (!e.is_idealization())
        throw DomainError(r.label + " was not built as an idealization");

    const TableRing base = materialize(*e.left);
    long long msize = 1;
    if (e.kind == RingExpr::Kind::Idealize)
        for (long long d : e.components) msize *= d;
    else
        for (int i = 0; i < e.m; ++i) msize *= base.n;

    // Z(M) = {r in base : r m = 0 for some m != 0 in M}.
    std::vector<char> kills(static_cast<size_t>(base.n), 0);
    if (e.kind == RingExpr::Kind::Idealize) {
        // Scalars act through reduction mod d_i, so r kills some nonzero
        // component iff gcd(r, d_i) > 1 for some i.
        for (int x = 0; x < base.n; ++x)
            for (long long d : e.components)
                for (long long m = 1; m < d; ++m)
                    if ((x % d) * m % d == 0) {
                        kills[static_cast<size_t>(x)] = 1;
                        break;
                    }
    } else {
        for (int x = 0; x < base.n; ++x)
            for (int m = 0; m < base.n; ++m)
                if (m != base.zero && base.mul_at(x, m) == base.zero) {
                    kills[static_cast<size_t>(x)] = 1;
                    break;
                }
    }
    for (int x : zero_divisors(base)) kills[static_cast<size_t>(x)] = 1;

    IdealizationZeroSet out;
    for (int x = 0; x < base.n; ++x)
        if (kills[static_cast<size_t>(x)])
            for (long long m = 0; m < msize; ++m)
                out.predicted.push_back(static_cast<int>(x * msize + m));
    std::sort(out.predicted.begin(), out.predicted.end());
    out.matches = out.predicted == zero_divisors(r);
    return out;
}

ZeroStructureReport analyze(const TableRing& r) {
    ZeroStructureReport rep;
    rep.ring = r.label;
    rep.zset = zero_divisors(r);
    for (int x : rep.zset)
        if (x != r.zero) {
            rep.ann_sizes[x] = static_cast<int>(annihilator(r, x).size());
            rep.prime_ann[x] = ann_is_prime(r, x);
        }
    rep.field = rep.zset.size() == 1;
    rep.local = is_local(r);
    if (rep.local) rep.maximal = rep.zset;
    rep.zsq_zero = zsquare_is_zero(r);
    return rep;
}

ZeroProfile zero_profile(const TableRing& r, int k) {
    if (k < 2) throw InvalidParameter("profiles are defined for k >= 2");
    ZeroProfile p;
    p.n = r.n;
    p.k = k;
    const std::vector<int> z = zero_divisors(r);
    p.z = static_cast<long long>(z.size());
    for (int x : z)
        if (x != r.zero) p.ann_sizes.push_back(static_cast<long long>(annihilator(r, x).size()));
    p.ann_k_minus_1 = ann_k_count(r, k - 1);
    return p;
}

} // namespace zpk
