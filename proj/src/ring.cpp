#include "zpk/ring.hpp"

#include "zpk/errors.hpp"
#include "zpk/rational.hpp"

#include <algorithm>

namespace zpk {

namespace {

void check_order_cap(const BigInt& order, long long cap, const std::string& what) {
    if (order > cap)
        throw CapacityError(what + " has order " + order.str() + ", exceeding the cap of " +
                            std::to_string(cap) + " elements");
}

BigInt expr_order_big(const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::Zn:
        return e.n;
    case RingExpr::Kind::GF:
        return ipow(e.n, static_cast<unsigned>(e.m));
    case RingExpr::Kind::Quotient:
        return ipow(e.n, static_cast<unsigned>(e.poly->degree()));
    case RingExpr::Kind::Product:
        return expr_order_big(*e.left) * expr_order_big(*e.right);
    case RingExpr::Kind::Idealize: {
        BigInt o = e.n;
        for (long long d : e.components) o *= d;
        return o;
    }
    case RingExpr::Kind::IdealizePower:
        return ipow(expr_order_big(*e.left), static_cast<unsigned>(e.m + 1));
    }
    throw Error("unhandled expression kind");
}

} // namespace

RingExpr RingExpr::zn(long long n) {
    if (n < 2) throw InvalidParameter("Z_n requires n >= 2");
    RingExpr e;
    e.kind = Kind::Zn;
    e.n = n;
    return e;
}

RingExpr RingExpr::gf(long long p, int m) {
    if (!is_prime(p)) throw InvalidParameter("GF requires a prime characteristic, got " + std::to_string(p));
    if (m < 1) throw InvalidParameter("GF requires degree >= 1");
    RingExpr e;
    e.kind = Kind::GF;
    e.n = p;
    e.m = m;
    return e;
}

RingExpr RingExpr::gf(long long p, int m, Polynomial poly) {
    RingExpr e = gf(p, m);
    if (poly.modulus != p) throw InvalidParameter("GF modulus polynomial must be over Z_p");
    if (!poly.is_monic() || poly.degree() != m)
        throw InvalidParameter("GF modulus polynomial must be monic of degree " + std::to_string(m));
    e.poly = std::move(poly);
    return e;
}

RingExpr RingExpr::quotient(long long n, Polynomial f) {
    if (n < 2) throw InvalidParameter("quotient base modulus must be >= 2");
    if (f.modulus != n) throw InvalidParameter("quotient polynomial must be over Z_n");
    if (!f.is_monic() || f.degree() < 1)
        throw InvalidParameter("quotient polynomial must be monic of degree >= 1");
    RingExpr e;
    e.kind = Kind::Quotient;
    e.n = n;
    e.poly = std::move(f);
    return e;
}

RingExpr RingExpr::product(RingExpr l, RingExpr r) {
    RingExpr e;
    e.kind = Kind::Product;
    e.left = std::make_shared<const RingExpr>(std::move(l));
    e.right = std::make_shared<const RingExpr>(std::move(r));
    return e;
}

RingExpr RingExpr::idealize(long long n, std::vector<long long> moduli) {
    if (n < 2) throw InvalidParameter("idealization base modulus must be >= 2");
    if (moduli.empty()) throw InvalidParameter("idealization needs at least one module component");
    for (long long d : moduli) {
        if (d < 2) throw InvalidParameter("module component moduli must be >= 2");
        if (n % d != 0)
            throw InvalidParameter("module component modulus " + std::to_string(d) +
                                   " does not divide the base modulus " + std::to_string(n));
    }
    RingExpr e;
    e.kind = Kind::Idealize;
    e.n = n;
    e.components = std::move(moduli);
    e.left = std::make_shared<const RingExpr>(zn(n));
    return e;
}

RingExpr RingExpr::idealize_power(RingExpr base, int t) {
    if (t < 1) throw InvalidParameter("idealization power requires t >= 1");
    RingExpr e;
    e.kind = Kind::IdealizePower;
    e.m = t;
    e.left = std::make_shared<const RingExpr>(std::move(base));
    return e;
}

long long RingExpr::order() const {
    return expr_order_big(*this).convert_to<long long>();
}

std::string RingExpr::label() const {
    switch (kind) {
    case Kind::Zn:
        return "Z" + std::to_string(n);
    case Kind::GF:
        if (poly) return "GF(" + std::to_string(n) + "," + std::to_string(m) + "," + poly->str() + ")";
        return "GF(" + std::to_string(n) + "^" + std::to_string(m) + ")";
    case Kind::Quotient:
        return "Zq(" + std::to_string(n) + "," + poly->str() + ")";
    case Kind::Product:
        return left->label() + " x " + right->label();
    case Kind::Idealize: {
        std::string s = "Ideal(Z" + std::to_string(n) + ",[";
        for (size_t i = 0; i < components.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(components[i]);
        }
        return s + "])";
    }
    case Kind::IdealizePower:
        return "Ideal(" + left->label() + "," + std::to_string(m) + ")";
    }
    throw Error("unhandled expression kind");
}

int TableRing::scalar_multiple(long long c, int x) const {
    int acc = zero;
    for (long long i = 0; i < c; ++i) acc = add_at(acc, x);
    return acc;
}

int TableRing::additive_order(int x) const {
    int acc = x;
    int ord = 1;
    while (acc != zero) {
        acc = add_at(acc, x);
        ++ord;
    }
    return ord;
}

TableRing build_zn(long long n, long long cap) {
    RingExpr e = RingExpr::zn(n);
    check_order_cap(n, cap, e.label());
    TableRing r;
    r.n = static_cast<int>(n);
    r.add.resize(static_cast<size_t>(n) * n);
    r.mul.resize(static_cast<size_t>(n) * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            r.add[i * n + j] = static_cast<int32_t>((i + j) % n);
            r.mul[i * n + j] = static_cast<int32_t>((i * j) % n);
        }
    r.zero = 0;
    r.one = 1;
    r.origin = e;
    r.label = e.label();
    return r;
}

namespace {

// Common table builder for Z_n[x]/(f): elements are polynomials of degree
// < deg(f), indexed by their base-n digit string (coefficient of x^i = digit i).
TableRing build_poly_quotient(const RingExpr& origin, long long n, const Polynomial& f,
                              long long cap) {
    const int d = f.degree();
    BigInt order_big = ipow(n, static_cast<unsigned>(d));
    check_order_cap(order_big, cap, origin.label());
    const long long order = order_big.convert_to<long long>();

    std::vector<Polynomial> elems;
    elems.reserve(static_cast<size_t>(order));
    for (long long v = 0; v < order; ++v) {
        std::vector<long long> c(d, 0);
        long long rest = v;
        for (int i = 0; i < d; ++i) {
            c[i] = rest % n;
            rest /= n;
        }
        elems.emplace_back(std::move(c), n);
    }
    auto index_of = [&](const Polynomial& p) {
        long long v = 0;
        for (int i = d - 1; i >= 0; --i) v = v * n + p.coeff(i);
        return static_cast<int32_t>(v);
    };

    TableRing r;
    r.n = static_cast<int>(order);
    r.add.resize(static_cast<size_t>(order) * order);
    r.mul.resize(static_cast<size_t>(order) * order);
    for (long long i = 0; i < order; ++i)
        for (long long j = 0; j < order; ++j) {
            r.add[i * order + j] = index_of(poly_add(elems[i], elems[j]));
            r.mul[i * order + j] = index_of(poly_mod(poly_mul(elems[i], elems[j]), f));
        }
    r.zero = 0;
    r.one = 1;
    r.origin = origin;
    r.label = origin.label();
    return r;
}

} // namespace

TableRing build_gf(long long p, int m, std::optional<Polynomial> poly, long long cap) {
    RingExpr e = poly ? RingExpr::gf(p, m, *poly) : RingExpr::gf(p, m);
    Polynomial f = e.poly ? *e.poly : smallest_irreducible(p, m);
    if (!poly_is_irreducible(f, p))
        throw InvalidParameter("GF modulus polynomial " + f.str() + " is reducible over Z_" +
                               std::to_string(p));
    return build_poly_quotient(e, p, f, cap);
}

TableRing build_quotient(long long n, const Polynomial& f, long long cap) {
    RingExpr e = RingExpr::quotient(n, f);
    return build_poly_quotient(e, n, *e.poly, cap);
}

TableRing build_product(const TableRing& r1, const TableRing& r2, long long cap) {
    BigInt order_big = BigInt(r1.n) * r2.n;
    RingExpr e = RingExpr::product(r1.origin, r2.origin);
    check_order_cap(order_big, cap, e.label());
    const long long order = order_big.convert_to<long long>();
    const long long n2 = r2.n;

    TableRing r;
    r.n = static_cast<int>(order);
    r.add.resize(static_cast<size_t>(order) * order);
    r.mul.resize(static_cast<size_t>(order) * order);
    for (long long i = 0; i < order; ++i) {
        const int i1 = static_cast<int>(i / n2), i2 = static_cast<int>(i % n2);
        for (long long j = 0; j < order; ++j) {
            const int j1 = static_cast<int>(j / n2), j2 = static_cast<int>(j % n2);
            r.add[i * order + j] =
                static_cast<int32_t>(r1.add_at(i1, j1) * n2 + r2.add_at(i2, j2));
            r.mul[i * order + j] =
                static_cast<int32_t>(r1.mul_at(i1, j1) * n2 + r2.mul_at(i2, j2));
        }
    }
    r.zero = static_cast<int>(r1.zero * n2 + r2.zero);
    r.one = static_cast<int>(r1.one * n2 + r2.one);
    r.origin = e;
    r.label = e.label();
    return r;
}

TableRing build_idealization(const RingExpr& spec, long long cap) {
    if (!spec.is_idealization())
        throw InvalidParameter("build_idealization requires an idealization expression");
    check_order_cap(expr_order_big(spec), cap, spec.label());

    // Module element = vector of residues; radix per slot + scalar action.
    TableRing base = spec.kind == RingExpr::Kind::Idealize
                         ? build_zn(spec.n, cap)
                         : materialize(*spec.left, cap);
    std::vector<long long> radix;
    if (spec.kind == RingExpr::Kind::Idealize)
        radix = spec.components;
    else
        radix.assign(static_cast<size_t>(spec.m), base.n);
    const size_t slots = radix.size();

    long long msize = 1;
    for (long long d : radix) msize *= d;
    const long long order = base.n * msize;

    auto decode = [&](long long mi) {
        std::vector<long long> v(slots);
        for (size_t s = slots; s-- > 0;) {
            v[s] = mi % radix[s];
            mi /= radix[s];
        }
        return v;
    };
    auto encode = [&](const std::vector<long long>& v) {
        long long mi = 0;
        for (size_t s = 0; s < slots; ++s) mi = mi * radix[s] + v[s];
        return mi;
    };
    auto mod_add = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> c(slots);
        for (size_t s = 0; s < slots; ++s) c[s] = (a[s] + b[s]) % radix[s];
        return c;
    };
    // Scalar action of a base element r on a module element.
    auto act = [&](int r, const std::vector<long long>& a) {
        std::vector<long long> c(slots);
        for (size_t s = 0; s < slots; ++s) {
            if (spec.kind == RingExpr::Kind::Idealize)
                c[s] = ((r % radix[s]) * a[s]) % radix[s];
            else
                c[s] = base.mul_at(r, static_cast<int>(a[s]));
        }
        return c;
    };

    std::vector<std::vector<long long>> mods;
    mods.reserve(static_cast<size_t>(msize));
    for (long long mi = 0; mi < msize; ++mi) mods.push_back(decode(mi));

    TableRing r;
    r.n = static_cast<int>(order);
    r.add.resize(static_cast<size_t>(order) * order);
    r.mul.resize(static_cast<size_t>(order) * order);
    for (long long i = 0; i < order; ++i) {
        const int ri = static_cast<int>(i / msize);
        const auto& mi = mods[static_cast<size_t>(i % msize)];
        for (long long j = 0; j < order; ++j) {
            const int rj = static_cast<int>(j / msize);
            const auto& mj = mods[static_cast<size_t>(j % msize)];
            r.add[i * order + j] =
                static_cast<int32_t>(base.add_at(ri, rj) * msize + encode(mod_add(mi, mj)));
            // (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)
            r.mul[i * order + j] = static_cast<int32_t>(
                base.mul_at(ri, rj) * msize + encode(mod_add(act(ri, mj), act(rj, mi))));
        }
    }
    r.zero = static_cast<int>(base.zero * msize);
    r.one = static_cast<int>(base.one * msize);
    r.origin = spec;
    r.label = spec.label();
    return r;
}

TableRing materialize(const RingExpr& expr, long long cap) {
    switch (expr.kind) {
    case RingExpr::Kind::Zn:
        return build_zn(expr.n, cap);
    case RingExpr::Kind::GF:
        return build_gf(expr.n, expr.m, expr.poly, cap);
    case RingExpr::Kind::Quotient:
        return build_quotient(expr.n, *expr.poly, cap);
    case RingExpr::Kind::Product: {
        check_order_cap(expr_order_big(expr), cap, expr.label());
        TableRing l = materialize(*expr.left, cap);
        TableRing r = materialize(*expr.right, cap);
        return build_product(l, r, cap);
    }
    case RingExpr::Kind::Idealize:
    case RingExpr::Kind::IdealizePower:
        return build_idealization(expr, cap);
    }
    throw Error("unhandled expression kind");
}

namespace {

ValidationReport fail(const std::string& axiom, int a, int b, int c, const std::string& msg) {
    ValidationReport rep;
    rep.ok = false;
    rep.axiom = axiom;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.message = msg;
    return rep;
}

} // namespace

ValidationReport validate_ring(const TableRing& r) {
    const int n = r.n;
    if (n < 2 || r.add.size() != static_cast<size_t>(n) * n || r.mul.size() != static_cast<size_t>(n) * n)
        return fail("table-shape", -1, -1, -1, "tables are not n x n with n >= 2");
    if (r.zero < 0 || r.zero >= n || r.one < 0 || r.one >= n)
        return fail("table-shape", -1, -1, -1, "zero/one indices out of range");
    if (r.zero == r.one)
        return fail("identity-distinct", r.zero, r.one, -1, "zero and one coincide");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.add_at(i, j) < 0 || r.add_at(i, j) >= n || r.mul_at(i, j) < 0 || r.mul_at(i, j) >= n)
                return fail("table-shape", i, j, -1, "table entry out of range");

    for (int i = 0; i < n; ++i) {
        if (r.add_at(r.zero, i) != i)
            return fail("add-zero", r.zero, i, -1, "0 + x != x");
        if (r.mul_at(r.one, i) != i)
            return fail("mul-identity", r.one, i, -1, "1 * x != x");
        if (r.mul_at(r.zero, i) != r.zero)
            return fail("mul-zero", r.zero, i, -1, "0 * x != 0");
    }

    // Each addition row must be a permutation (cancellation), which also
    // gives every element an additive inverse.
    std::vector<char> seen(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = r.add_at(i, j);
            if (seen[static_cast<size_t>(v)])
                return fail("add-row-bijection", i, j, v, "duplicate value in addition row");
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (r.add_at(i, j) != r.add_at(j, i))
                return fail("add-commutativity", i, j, -1, "x + y != y + x");
            if (r.mul_at(i, j) != r.mul_at(j, i))
                return fail("mul-commutativity", i, j, -1, "x * y != y * x");
        }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)))
                    return fail("add-associativity", a, b, c, "(x + y) + z != x + (y + z)");
                if (r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)))
                    return fail("mul-associativity", a, b, c, "(x y) z != x (y z)");
                if (r.mul_at(a, r.add_at(b, c)) != r.add_at(r.mul_at(a, b), r.mul_at(a, c)))
                    return fail("distributivity", a, b, c, "x (y + z) != x y + x z");
            }

    return ValidationReport{};
}

} // namespace zpk
