#pragma once

#include <span>
#include <string_view>

#include "ast.hpp"
#include "diagnostic.hpp"
#include "token.hpp"

namespace miniproc {

// Recursive-descent parse of a token stream ending in Eof. Stops at the
// first error (UNEXPECTED_TOKEN, defensively NUMBER_OVERFLOW); anything
// after the closing '}' of `program` is an error.
Expected<Program> parse(std::span<const Token> tokens);

// tokenize + parse in one step.
Expected<Program> parse_source(std::string_view source);

}  // namespace miniproc
