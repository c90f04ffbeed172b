#include "lexer.hpp"

#include <array>
#include <cctype>

#include "symlex/error.hpp"

namespace symlex::lex {

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

constexpr std::array<const char *, 8> kMultiSyms = {"-->", "/\\", "\\/", "->",
                                                    "!=", "<=", ">=", ".."};
constexpr const char *kSingleSyms = "()[]{},;:=<>+-*/%|!.\\";

} // namespace

std::vector<Token> tokenize(const std::string &src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '$' || c == '#') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      std::int64_t n = 0;
      try {
        n = std::stoll(src.substr(i, j - i));
      } catch (const std::out_of_range &) {
        throw ParseError("integer literal out of range", line, col);
      }
      if (j < src.size() && src[j] == '_' && j + 1 < src.size() &&
          identStart(src[j + 1])) {
        std::size_t k = j + 1;
        while (k < src.size() && identChar(src[k]))
          ++k;
        tok.kind = Kind::Unnamed;
        tok.num = n;
        tok.text = src.substr(j + 1, k - j - 1);
        advance(k - i);
      } else {
        tok.kind = Kind::Int;
        tok.num = n;
        advance(j - i);
      }
      out.push_back(std::move(tok));
      continue;
    }
    if (identStart(c)) {
      std::size_t j = i;
      while (j < src.size() && identChar(src[j]))
        ++j;
      tok.kind = Kind::Ident;
      tok.text = src.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    bool matched = false;
    for (const char *sym : kMultiSyms) {
      std::size_t len = std::char_traits<char>::length(sym);
      if (src.compare(i, len, sym) == 0) {
        tok.kind = Kind::Sym;
        tok.text = sym;
        advance(len);
        out.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (matched)
      continue;
    if (std::char_traits<char>::find(kSingleSyms,
                                     std::char_traits<char>::length(kSingleSyms),
                                     c)) {
      tok.kind = Kind::Sym;
      tok.text = std::string(1, c);
      advance(1);
      out.push_back(std::move(tok));
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  Token end;
  end.kind = Kind::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

} // namespace symlex::lex
