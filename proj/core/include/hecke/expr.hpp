// Parsing of algebra expressions and small literals used by the command
// line tool. The expression grammar:
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' int]
//   primary := 'q' | 't' | integer | 'T' '[' i ']' | 'Z' '[' c1 ',' ... ']'
//            | '(' expr ')'
// T[i]^-1 denotes the inverse basis element; negative exponents are
// admitted for q, t and T[i] only.

#pragma once

#include "hecke/bl.hpp"

#include <string>

namespace hecke {

BLElt parse_expr(const BLOps& ops, const std::string& text);

// Comma-separated generator indices, e.g. "0,1,0"; "" and "e" give the
// empty word.
std::vector<int> parse_word(const std::string& text, int n_gen);

// Comma-separated integer coordinates, length must equal rank.
Coweight parse_coweight(const std::string& text, int rank);

}  // namespace hecke
