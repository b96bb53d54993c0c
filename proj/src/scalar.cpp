#include "triop/scalar.hpp"

#include <atomic>

namespace triop {

namespace {
std::atomic<long> g_sqrt_param{3};
}

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

long sqrt_param() { return g_sqrt_param.load(std::memory_order_relaxed); }

void set_sqrt_param(long d) {
    if (d < 2 || !is_square_free(d))
        throw ArithmeticError("field parameter d must be square-free and >= 2, got " +
                              std::to_string(d));
    g_sqrt_param.store(d, std::memory_order_relaxed);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational d(sqrt_param());
    Rational norm = rat_ * rat_ - d * irr_ * irr_;
    // norm == 0 would mean (rat/irr)^2 == d with d square-free: impossible.
    return {rat_ / norm, -irr_ / norm};
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!rat_.is_zero()) out = rat_.str();
    if (!irr_.is_zero()) {
        std::string part;
        if (irr_ == Rational(1)) {
            part = "s";
        } else if (irr_ == Rational(-1)) {
            part = "-s";
        } else {
            part = irr_.str() + "*s";
        }
        if (out.empty()) {
            out = part;
        } else if (part[0] == '-') {
            out += "-" + part.substr(1);
        } else {
            out += "+" + part;
        }
    }
    return out;
}

}  // namespace triop
