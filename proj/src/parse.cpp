#include "zpk/parse.hpp"

#include "zpk/errors.hpp"

#include <cctype>

namespace zpk {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RingExpr parse() {
        RingExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    bool consume_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    // Wraps semantic validation from the RingExpr factories into ParseError
    // carrying the position of the construct.
    template <typename F>
    RingExpr checked(size_t at, F&& make) {
        try {
            return make();
        } catch (const InvalidParameter& e) {
            throw ParseError(e.what(), at);
        }
    }

    RingExpr expr() {
        RingExpr e = term();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                RingExpr rhs = term();
                e = RingExpr::product(std::move(e), std::move(rhs));
            } else {
                break;
            }
        }
        return e;
    }

    RingExpr term() {
        skip_ws();
        const size_t at = pos_;
        if (consume('(')) {
            RingExpr e = expr();
            expect(')');
            return e;
        }
        if (consume_word("GF(")) {
            long long p = integer();
            if (consume('^')) {
                long long m = integer();
                expect(')');
                return checked(at, [&] { return RingExpr::gf(p, static_cast<int>(m)); });
            }
            expect(',');
            long long m = integer();
            expect(',');
            Polynomial f = polynomial(p);
            expect(')');
            return checked(at, [&] { return RingExpr::gf(p, static_cast<int>(m), f); });
        }
        if (consume_word("Zq(")) {
            long long n = integer();
            expect(',');
            Polynomial f = polynomial(n);
            expect(')');
            return checked(at, [&] { return RingExpr::quotient(n, f); });
        }
        if (consume_word("Ideal(")) {
            RingExpr base = expr();
            expect(',');
            if (consume('[')) {
                if (base.kind != RingExpr::Kind::Zn)
                    throw ParseError("idealization with a component list requires a Z_n base", at);
                std::vector<long long> ds;
                ds.push_back(integer());
                while (consume(',')) ds.push_back(integer());
                expect(']');
                expect(')');
                return checked(at, [&] { return RingExpr::idealize(base.n, ds); });
            }
            long long t = integer();
            expect(')');
            return checked(at, [&] { return RingExpr::idealize_power(std::move(base), static_cast<int>(t)); });
        }
        if (consume('Z')) {
            long long n = integer();
            return checked(at, [&] { return RingExpr::zn(n); });
        }
        throw ParseError("expected a ring term", pos_);
    }

    // Monomial sum, e.g. "x^2+x+1", "1+2x+x^2"; coefficients reduce mod n.
    Polynomial polynomial(long long n) {
        skip_ws();
        const size_t at = pos_;
        if (n < 2) throw ParseError("polynomial modulus must be >= 2", at);
        std::vector<long long> coeffs;
        auto bump = [&](long long exp, long long coeff) {
            if (exp > 64) throw ParseError("polynomial degree too large", at);
            if (static_cast<size_t>(exp) >= coeffs.size()) coeffs.resize(static_cast<size_t>(exp) + 1, 0);
            coeffs[static_cast<size_t>(exp)] = (coeffs[static_cast<size_t>(exp)] + coeff) % n;
        };
        while (true) {
            skip_ws();
            long long coeff = 1;
            bool saw_digits = false;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coeff = integer();
                saw_digits = true;
            }
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                long long exp = 1;
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    exp = integer();
                }
                bump(exp, coeff);
            } else if (saw_digits) {
                bump(0, coeff);
            } else {
                throw ParseError("expected a polynomial term", pos_);
            }
            if (!consume('+')) break;
        }
        return Polynomial(std::move(coeffs), n);
    }
};

} // namespace

RingExpr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

} // namespace zpk
