#pragma once

#include <string>
#include <vector>

namespace zpk {

/// Polynomial over Z_n with ascending-degree coefficients, reduced mod n and
/// with no trailing zero coefficients (the zero polynomial has no coefficients).
struct Polynomial {
    std::vector<long long> coeffs;
    long long modulus = 0;

    Polynomial() = default;
    Polynomial(std::vector<long long> coeffs_, long long modulus_);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : 0;
    }

    bool operator==(const Polynomial& other) const = default;

    /// Renders like "x^2+x+1" (descending, unit coefficients implicit).
    std::string str() const;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Remainder of a modulo a monic divisor; works over any Z_n since the
/// leading coefficient 1 needs no inverse.
Polynomial poly_mod(const Polynomial& a, const Polynomial& monic_divisor);

long long poly_eval(const Polynomial& a, long long x);

/// True when f (monic, degree >= 1, over Z_p with p prime) has no monic
/// factor of degree 1..deg(f)-1, by trial division.
bool poly_is_irreducible(const Polynomial& f, long long p);

/// The lexicographically smallest monic irreducible of degree m over Z_p,
/// comparing ascending coefficient tuples (c_0, c_1, ..., c_{m-1}).
Polynomial smallest_irreducible(long long p, int m);

} // namespace zpk
