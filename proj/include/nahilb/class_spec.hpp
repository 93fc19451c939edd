#pragma once

#include <string_view>

#include "nahilb/localization.hpp"

namespace nahilb {

// Grammar, whitespace ignored:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)*
//   atom   := INT | 'c' INT ['^dual' | '(dual)'] | 'theta' INT | 'eta' INT | '(' expr ')'
TautClass parse_class_spec(std::string_view text, int q, int d);
// Largest theta index mentioned, so callers can default q.
int max_theta_index(std::string_view text);

}  // namespace nahilb
