#pragma once

#include <string>

#include "ast.hpp"

namespace miniproc {

// Canonical source form: reparsing the output yields a structurally
// identical Program (spans aside). Comments are not preserved.
std::string pretty_print(const Program& program);

// S-expression dump, one procedure per line:
//   (program
//     (procedure NAME (PARAM...) EXPR)
//   )
// EXPR ::= (num N) | (var NAME) | (call NAME EXPR...) | (prim OP EXPR EXPR)
//        | (let ((NAME EXPR)...) EXPR) | (if EXPR EXPR EXPR)
std::string ast_dump(const Program& program);

}  // namespace miniproc
