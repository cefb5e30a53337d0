#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hironaka/transform.hpp"

namespace hironaka {

/// Parses a polynomial in X, Y, Z.
///
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := factor ('*'? factor)*
///   factor     := primary ('^' natural)*
///   primary    := scalar | 'X' | 'Y' | 'Z' | '(' expression ')'
///   scalar     := natural ['/' natural]
///
/// Implicit multiplication is allowed only between a variable or a closing
/// parenthesis and a following variable: "XY" and "(X-Y)X" work, "X^19Z"
/// and "2X" need an explicit '*'. Fraction literals are rejected over F_p.
/// Exponents must fit in 32 bits. Errors carry a 1-based position.
Poly parse_poly(std::string_view text, const FieldSpec& field);

/// Canonical form: terms in the lexicographic Z > Y > X order, descending,
/// "*" between factors, "^" for exponents beyond 1, unit coefficients
/// omitted. Over Q a sign is pulled out of each coefficient; over F_p
/// residues print as-is. The zero polynomial prints "0".
std::string print_canonical(const Poly& p);

/// Parses one blow-up center:
///   "Q 1:c:0"  point (1 : c : 0)     (c a scalar literal)
///   "Q 0:1:0"  point at infinity
///   "M <G>"    curve (Z, G)
std::variant<Direction, CurveCenter> parse_center(std::string_view text,
                                                  const FieldSpec& field);

/// Parses a center script: one center per line; blank lines skipped and
/// '#' starts a comment. Parse errors name the line.
std::vector<std::variant<Direction, CurveCenter>> parse_script(std::string_view text,
                                                               const FieldSpec& field);

} // namespace hironaka
