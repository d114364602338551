#pragma once

#include "zpk/ring.hpp"

#include <string>

namespace zpk {

/// Parses ring expression text:
///
///   expr := term { "x" term }
///   term := "Z" int
///         | "GF(" int "^" int ")"
///         | "GF(" int "," int "," poly ")"
///         | "Zq(" int "," poly ")"
///         | "Ideal(" expr "," int ")"            -- module = base^t
///         | "Ideal(Z" int ",[" int {"," int} "])" -- module = Z_d1 x ... x Z_ds
///         | "(" expr ")"
///   poly := sum of monomials like "x^2+x+1" (any term order)
///
/// Throws ParseError with the byte offset for syntax problems and for
/// semantic ones (composite GF characteristic, module modulus not dividing
/// the base, ...).
RingExpr parse_expr(const std::string& text);

} // namespace zpk
