#pragma once

#include <stdexcept>
#include <string>

#include "dop/diagonal.hpp"
#include "dop/diffop.hpp"

namespace dop {

struct ParseError : std::runtime_error {
  size_t position;  // 1-based column in the input text
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos)), position(pos) {}
};

// Operator expressions: terms in `Dx`, `theta`, `x` and rational literals,
// `*` noncommutative composition, `^` nonnegative integer powers, `+`, `-`,
// parentheses; `/` only by order-0 (rational function) divisors.
DiffOp parse_operator(const std::string& text);

// Multivariate rational expressions in variables x, y, z, w (the first
// `nvars` of them), with + - * / ^ and parentheses.
MultiRat parse_multirat(const std::string& text, int nvars);

}  // namespace dop
