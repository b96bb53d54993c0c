#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triop {

// Arithmetic error (division by zero, bad substitution, ...).
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational, always canonical: gcd(|num|,den)=1, den>0,
// zero is 0/1. Thin wrapper over GMP's mpq_class that canonicalizes on every
// construction path (mpq arithmetic keeps canonical inputs canonical).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const std::string& s) : q_(s) {
        if (q_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
        q_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    Rational operator-() const { return from_mpq(-q_); }
    Rational operator+(const Rational& o) const { return from_mpq(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return from_mpq(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return from_mpq(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ArithmeticError("division by zero");
        return from_mpq(q_ / o.q_);
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    // "p" or "p/q"
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

}  // namespace triop
