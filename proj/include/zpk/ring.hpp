#pragma once

#include "zpk/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zpk {

/// Default cap on materialized ring order: two order^2 index tables.
inline constexpr long long kDefaultMaterializeCap = 4096;

/// Construction AST for finite commutative rings with identity. Factored
/// structure (products, idealizations) is retained so downstream code can
/// decompose instead of working on the flat tables.
struct RingExpr {
    enum class Kind { Zn, GF, Quotient, Product, Idealize, IdealizePower };

    Kind kind = Kind::Zn;
    long long n = 0;                     // Zn/Quotient modulus, GF characteristic
    int m = 0;                           // GF degree, IdealizePower exponent
    std::optional<Polynomial> poly;      // GF custom modulus, Quotient modulus
    std::vector<long long> components;   // Idealize module moduli d_i
    std::shared_ptr<const RingExpr> left, right; // Product factors / base

    static RingExpr zn(long long n);
    static RingExpr gf(long long p, int m);
    static RingExpr gf(long long p, int m, Polynomial poly);
    static RingExpr quotient(long long n, Polynomial f);
    static RingExpr product(RingExpr l, RingExpr r);
    /// Base Z_n with module Z_{d_1} x ... x Z_{d_s}, each d_i | n; scalars act
    /// through reduction mod d_i.
    static RingExpr idealize(long long n, std::vector<long long> moduli);
    /// Module base^t with the ring multiplication as scalar action.
    static RingExpr idealize_power(RingExpr base, int t);

    bool is_idealization() const {
        return kind == Kind::Idealize || kind == Kind::IdealizePower;
    }

    /// Ring order, computed without materializing.
    long long order() const;

    /// Round-trips through parse_expr.
    std::string label() const;
};

/// A materialized finite commutative ring with identity: dense element
/// indices 0..n-1 with full addition and multiplication tables. Immutable
/// after construction and safe to share across threads read-only.
struct TableRing {
    int n = 0;
    std::vector<int32_t> add; // n*n, row-major
    std::vector<int32_t> mul; // n*n, row-major
    int zero = 0;
    int one = 1;
    std::string label;
    RingExpr origin;

    int add_at(int a, int b) const { return add[static_cast<size_t>(a) * n + b]; }
    int mul_at(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }

    /// c*x computed by repeated addition.
    int scalar_multiple(long long c, int x) const;
    /// Additive order of x.
    int additive_order(int x) const;
};

TableRing build_zn(long long n, long long cap = kDefaultMaterializeCap);
TableRing build_gf(long long p, int m, std::optional<Polynomial> poly = std::nullopt,
                   long long cap = kDefaultMaterializeCap);
TableRing build_quotient(long long n, const Polynomial& f, long long cap = kDefaultMaterializeCap);
TableRing build_product(const TableRing& r1, const TableRing& r2,
                        long long cap = kDefaultMaterializeCap);
TableRing build_idealization(const RingExpr& spec, long long cap = kDefaultMaterializeCap);

/// Recursively builds the expression; Product nodes keep their factored
/// origin so the counting engine can decompose.
TableRing materialize(const RingExpr& expr, long long cap = kDefaultMaterializeCap);

struct ValidationReport {
    bool ok = true;
    std::string axiom;       // first violated axiom, empty when ok
    int a = -1, b = -1, c = -1; // witness elements
    std::string message;
};

/// Exhaustively checks every ring axiom (abelian addition, associative
/// commutative multiplication, identity, distributivity). O(n^3).
ValidationReport validate_ring(const TableRing& r);

} // namespace zpk
