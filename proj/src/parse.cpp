#include "triop/parse.hpp"

#include <cctype>

namespace triop {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    LaurentPoly run() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    LaurentPoly expr() {
        LaurentPoly p = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                p += term();
            } else if (peek() == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                p = p * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                LaurentPoly d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                if (!d.is_term()) throw ParseError("divisor is not a single term", at);
                p = p.divide_by_term(d);
            } else {
                return p;
            }
        }
    }

    LaurentPoly factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        LaurentPoly p = power();
        return neg ? -p : p;
    }

    LaurentPoly power() {
        LaurentPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = pos_++;
            long e = integer();
            if (e < 0 && !base.is_term())
                throw ParseError("negative exponent on a non-term expression", at);
            return poly_pow(base, e);
        }
        return base;
    }

    LaurentPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            return LaurentPoly(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = identifier();
            if (name == "s") return LaurentPoly(Scalar::sqrt_d());
            return LaurentPoly::var(name);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return {};
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_expr(const std::string& text) { return Parser(text).run(); }

Scalar parse_scalar(const std::string& text) {
    LaurentPoly p = parse_expr(text);
    if (!p.is_constant()) throw ParseError("expected a constant expression, got " + p.str(), 0);
    return p.constant_value();
}

}  // namespace triop
