#pragma once

#include <string>

#include "birat/poly.hpp"

namespace birat {

// Grammar: +, -, *, ^, integer or a/b coefficients, declared variable names,
// parentheses. No implicit multiplication: "abc" is a single identifier.
// Errors carry the character position.
Polynomial parse_polynomial(const std::string& text, const CtxPtr& ctx,
                            const MonomialOrder& order = MonomialOrder::grevlex());

} // namespace birat
