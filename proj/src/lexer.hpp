#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symlex::lex {

enum class Kind { Int, Unnamed, Ident, Sym, End };

struct Token {
  Kind kind;
  std::string text; // identifier, symbol, or unnamed-atom tag
  std::int64_t num = 0; // value for Int, 1-based index for Unnamed
  int line = 1;
  int col = 1;
};

// Splits source into tokens. `$` and `#` start line comments.
// `3_T` lexes as one Unnamed token.
std::vector<Token> tokenize(const std::string &src);

} // namespace symlex::lex
