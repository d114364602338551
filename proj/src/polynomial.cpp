#include "zpk/polynomial.hpp"

#include "zpk/errors.hpp"
#include "zpk/rational.hpp"

namespace zpk {

namespace {

long long mod_reduce(long long v, long long m) {
    v %= m;
    return v < 0 ? v + m : v;
}

void trim(std::vector<long long>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Polynomial::Polynomial(std::vector<long long> coeffs_, long long modulus_)
    : coeffs(std::move(coeffs_)), modulus(modulus_) {
    if (modulus < 2) throw InvalidParameter("polynomial modulus must be >= 2");
    for (auto& c : coeffs) c = mod_reduce(c, modulus);
    trim(coeffs);
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        long long c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<long long> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c), a.modulus);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.modulus);
    std::vector<long long> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = (c[i + j] + a.coeffs[i] * b.coeffs[j]) % a.modulus;
    return Polynomial(std::move(c), a.modulus);
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& monic_divisor) {
    if (!monic_divisor.is_monic())
        throw InvalidParameter("polynomial modulus must be monic");
    const long long m = a.modulus;
    std::vector<long long> r = a.coeffs;
    const int d = monic_divisor.degree();
    while (static_cast<int>(r.size()) - 1 >= d) {
        long long lead = r.back();
        int shift = static_cast<int>(r.size()) - 1 - d;
        if (lead != 0)
            for (int i = 0; i <= d; ++i)
                r[i + shift] = mod_reduce(r[i + shift] - lead * monic_divisor.coeffs[i], m);
        r.pop_back();
        trim(r);
    }
    return Polynomial(std::move(r), m);
}

long long poly_eval(const Polynomial& a, long long x) {
    long long acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = mod_reduce(acc * x + a.coeffs[i], a.modulus);
    return acc;
}

bool poly_is_irreducible(const Polynomial& f, long long p) {
    if (!f.is_monic() || f.degree() < 1) return false;
    const int m = f.degree();
    // A reducible monic polynomial has a monic factor of degree <= m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        // Enumerate all monic degree-d polynomials over Z_p.
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<long long> g(d + 1, 0);
            long long rest = v;
            for (int i = 0; i < d; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            g[d] = 1;
            if (poly_mod(f, Polynomial(g, p)).is_zero()) return false;
        }
    }
    return true;
}

Polynomial smallest_irreducible(long long p, int m) {
    if (!is_prime(p)) throw InvalidParameter("field characteristic must be prime");
    if (m < 1) throw InvalidParameter("extension degree must be >= 1");
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    // v encodes (c_0,...,c_{m-1}) with c_0 as the most significant base-p
    // digit, so ascending v is ascending lexicographic order on the tuple.
    for (long long v = 0; v < count; ++v) {
        std::vector<long long> c(m + 1, 0);
        long long rest = v;
        for (int i = m - 1; i >= 0; --i) {
            c[i] = rest % p;
            rest /= p;
        }
        c[m] = 1;
        Polynomial f(c, p);
        if (poly_is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable: one always exists
}

} // namespace zpk
