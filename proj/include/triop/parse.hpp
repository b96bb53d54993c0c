#pragma once

#include <stdexcept>
#include <string>

#include "triop/laurent.hpp"

namespace triop {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Expression grammar: integers, the sqrt(d) literal token `s`, identifiers
// [a-zA-Z][a-zA-Z0-9_]*, operators + - * / ^ (integer exponents, negative
// allowed), parentheses; whitespace insignificant. A divisor must normalize
// to a single term.
LaurentPoly parse_expr(const std::string& text);

// Convenience: parse an expression that must evaluate to a constant Scalar.
Scalar parse_scalar(const std::string& text);

}  // namespace triop
