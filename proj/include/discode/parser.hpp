#pragma once

#include <functional>
#include <string>

#include "discode/expr.hpp"

namespace discode {

using ReferenceResolver = std::function<Expr(const std::string&)>;

/// Parses the expression mini-language:
///   numbers (1, 0.5, 2e-3) with an optional `i` suffix, `i`, `z`, `pi`, `e`,
///   binary + - * /, unary -, `^` with a real constant exponent (right associative),
///   exp log sqrt sin cos, parentheses, and references `gallery:<name>(<p>=<v>,...).<field>`.
/// References are handed to `resolver` (the gallery by default). Throws ParseError.
Expr parse_expression(const std::string& text, const ReferenceResolver& resolver = {});

}  // namespace discode
