#pragma once

#include "cf/formula.hpp"
#include "cf/group.hpp"

#include <string>
#include <string_view>

namespace cf {

/// Parses a group file:
///   {"name": ..., "elements": [labels], "identity": label,
///    "table": [[labels]]}   // table[r][c] = elements[r] * elements[c]
/// Malformed JSON and schema problems throw SyntaxError (JSON errors carry
/// the byte offset in position(), schema errors name the field path); table
/// problems surface as the corresponding build_group error.
FiniteGroup parse_group_file(std::string_view text);
FiniteGroup load_group_file(const std::string &path);

std::string render_group_file(const FiniteGroup &group);

/// Grammar, whitespace between tokens ignored:
///   formula := side ":" side "=>" side ":" side
///   side    := "F_" term "(" term ")"
///   term    := ("x" | "y" | "a" | "b") ["^-1"]
/// The rule is inferred position by position; roles absent from the left
/// side map to themselves. A formula equal to a built-in variant takes its
/// name, otherwise the name is "custom".
/// Throws SyntaxError (with position) and InconsistentRule.
CFVariant parse_formula(std::string_view text);

/// Canonical text, e.g. "F_x(a):F_y(b) => F_x(b):F_a^-1(y)".
std::string render_formula(const CFVariant &variant);

} // namespace cf
