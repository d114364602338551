#include "zpk/rational.hpp"

namespace zpk {

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // always exact: result is C(n-k+i, i)
    }
    return result;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    BigInt num = numerator(r);
    const BigInt den = denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    BigInt ip = num / den;
    BigInt rem = num % den;
    out += ip.str();
    if (rem == 0) return out;

    int significant = (ip == 0) ? 0 : static_cast<int>(ip.str().size());
    out += '.';
    // Guard against pathological denominators; display only, so truncation
    // after 4*digits fraction places is fine.
    for (int emitted = 0; significant < digits && emitted < 4 * digits; ++emitted) {
        rem *= 10;
        BigInt d = rem / den;
        rem %= den;
        out += static_cast<char>('0' + d.convert_to<int>());
        if (significant > 0 || d != 0) ++significant;
        if (rem == 0) break;
    }
    return out;
}

} // namespace zpk
