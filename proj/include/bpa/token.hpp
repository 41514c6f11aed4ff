#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bpa {

enum class TokenKind {
  Identifier,
  IntLiteral,
  BoolLiteral,
  StrLiteral,
  Keyword,
  Operator,
  Punctuation,
};

struct Token {
  TokenKind kind;
  std::string lexeme;  // exact source slice (string literals keep their quotes)
  int line = 0;
};

struct LexError : std::runtime_error {
  int line;
  LexError(int line_, const std::string& message)
      : std::runtime_error("lex error at line " + std::to_string(line_) + ": " + message),
        line(line_) {}
};

/// Tokenizes MiniLang source. `//` comments and whitespace produce no tokens;
/// no token spans more than one line.
std::vector<Token> tokenize(const std::string& source);

bool is_keyword(const std::string& word);

}  // namespace bpa
