#include "triop/laurent.hpp"

namespace triop {

std::string Monomial::str() const {
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += "*";
        out += v;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::divide_by_term(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw ArithmeticError("division by zero");
    if (!divisor.is_term())
        throw ArithmeticError("divisor is not a single term: " + divisor.str());
    const auto& [dm, dc] = *divisor.terms_.begin();
    Monomial dinv = dm.inverse();
    Scalar cinv = dc.inverse();
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m * dinv, c * cinv);
    return out;
}

LaurentPoly poly_pow(const LaurentPoly& base, long e) {
    if (e < 0) {
        if (!base.is_term())
            throw ArithmeticError("negative power of a non-term polynomial: " + base.str());
        return LaurentPoly(1).divide_by_term(poly_pow(base, -e));
    }
    LaurentPoly out(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

std::set<std::string> LaurentPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) out.insert(v);
    return out;
}

std::set<std::string> LaurentPoly::negative_exponent_variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents())
            if (e < 0) out.insert(v);
    return out;
}

Scalar LaurentPoly::substitute(const std::map<std::string, Scalar>& assignment) const {
    Scalar out(0);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw ArithmeticError("unassigned parameter '" + v + "'");
            if (e < 0 && it->second.is_zero())
                throw ArithmeticError("parameter '" + v +
                                      "' occurs with a negative exponent but is assigned 0");
            term = term * scalar_pow(it->second, e);
        }
        out += term;
    }
    return out;
}

LaurentPoly LaurentPoly::compose(const std::map<std::string, LaurentPoly>& images) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        LaurentPoly term(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = images.find(v);
            if (it == images.end())
                throw ArithmeticError("unassigned parameter '" + v + "'");
            term = term * poly_pow(it->second, e);
        }
        out += term;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        // coefficient text; parenthesize mixed a+b*s coefficients in front of
        // a monomial so the result re-parses
        std::string cs = c.str();
        bool mixed = !c.rat().is_zero() && !c.irr().is_zero();
        std::string body;
        if (m.is_one()) {
            body = cs;
        } else if (c.is_one()) {
            body = m.str();
        } else if (c == Scalar(-1)) {
            body = "-" + m.str();
        } else if (mixed) {
            body = "(" + cs + ")*" + m.str();
        } else {
            body = cs + "*" + m.str();
        }
        if (out.empty()) {
            out = body;
        } else if (body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

}  // namespace triop
