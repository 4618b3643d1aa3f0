#pragma once

#include <string_view>
#include <vector>

#include "diagnostic.hpp"
#include "token.hpp"

namespace miniproc {

// Tokenizes the whole input, ending with an Eof token. Whitespace separates
// tokens; `//` starts a comment running to end of line. Stops at the first
// lexical error (UNEXPECTED_CHARACTER, NUMBER_OVERFLOW).
Expected<std::vector<Token>> tokenize(std::string_view source);

}  // namespace miniproc
