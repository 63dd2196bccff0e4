#pragma once

#include <stdexcept>
#include <string>

#include "wspec/weights.hpp"

namespace wspec {

struct ExprParseError : std::runtime_error {
    explicit ExprParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Builds a weight function from a tiny arithmetic expression in x and y, so
// custom functions can be tried without recompiling. Grammar:
//
//   expr   := term  (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?            right-associative
//   atom   := NUMBER | 'x' | 'y' | 'sqrt' '(' expr ')' | '(' expr ')'
//   NUMBER := digits with optional fraction, e.g. 2, 0.5
//
// The returned function carries no declared property flags; run the checkers.
WeightFunction parse_weight_expression(const std::string& src);

}  // namespace wspec
