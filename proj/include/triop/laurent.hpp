#pragma once

#include <map>
#include <set>
#include <string>

#include "triop/scalar.hpp"

namespace triop {

// Product of named parameters with nonzero integer exponents; the empty map
// is 1. std::map keeps parameters sorted by name, which fixes the rendering
// and iteration order project-wide.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::string& var, long exp = 1) {
        if (exp != 0) exps_[var] = exp;
    }

    const std::map<std::string, long>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial out = *this;
        for (const auto& [v, e] : o.exps_) {
            long ne = (out.exps_.count(v) ? out.exps_[v] : 0) + e;
            if (ne == 0)
                out.exps_.erase(v);
            else
                out.exps_[v] = ne;
        }
        return out;
    }
    Monomial inverse() const {
        Monomial out;
        for (const auto& [v, e] : exps_) out.exps_[v] = -e;
        return out;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

    std::string str() const;

private:
    std::map<std::string, long> exps_;
};

// Multivariate Laurent polynomial over Scalar, canonical: no zero
// coefficients stored, zero polynomial is the empty map. Division is exact
// and only by a single term.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long n) { add_term(Monomial(), Scalar(n)); }
    LaurentPoly(const Scalar& c) { add_term(Monomial(), c); }
    static LaurentPoly var(const std::string& name, long exp = 1) {
        LaurentPoly p;
        p.add_term(Monomial(name, exp), Scalar(1));
        return p;
    }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    // single term c*m (nonzero)
    bool is_term() const { return terms_.size() == 1; }
    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        if (!is_constant()) throw ArithmeticError("polynomial is not constant: " + str());
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    // Exact division by a single-term polynomial.
    LaurentPoly divide_by_term(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    std::set<std::string> variables() const;
    // variables occurring with a negative exponent in some term
    std::set<std::string> negative_exponent_variables() const;

    // Exact evaluation. Every variable must be assigned; a variable occurring
    // with a negative exponent must not be assigned zero.
    Scalar substitute(const std::map<std::string, Scalar>& assignment) const;

    // Ring-morphism composition: replace each variable by a polynomial. A
    // variable with a negative exponent must map to an invertible single term.
    LaurentPoly compose(const std::map<std::string, LaurentPoly>& images) const;

    std::string str() const;

private:
    std::map<Monomial, Scalar> terms_;
};

LaurentPoly poly_pow(const LaurentPoly& base, long e);

}  // namespace triop
