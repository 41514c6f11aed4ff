#include "bpa/token.hpp"

#include <array>
#include <cctype>

namespace bpa {

namespace {

const std::array<const char*, 9> kKeywords = {
    "fun", "let", "if", "else", "while", "for", "in", "return", "print",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_keyword(const std::string& word) {
  for (const char* kw : kKeywords) {
    if (word == kw) return true;
  }
  return false;
}

std::vector<Token> tokenize(const std::string& source) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto push = [&](TokenKind kind, std::string lexeme) {
    tokens.push_back(Token{kind, std::move(lexeme), line});
  };

  while (i < n) {
    char c = source[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < n && ident_char(source[i])) ++i;
      std::string word = source.substr(start, i - start);
      if (word == "true" || word == "false") {
        push(TokenKind::BoolLiteral, std::move(word));
      } else if (is_keyword(word)) {
        push(TokenKind::Keyword, std::move(word));
      } else {
        push(TokenKind::Identifier, std::move(word));
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      push(TokenKind::IntLiteral, source.substr(start, i - start));
      continue;
    }
    if (c == '"') {
      std::size_t start = i;
      ++i;
      while (i < n && source[i] != '"' && source[i] != '\n') {
        if (source[i] == '\\') {
          if (i + 1 >= n || source[i + 1] == '\n') break;
          i += 2;
        } else {
          ++i;
        }
      }
      if (i >= n || source[i] != '"') {
        throw LexError(line, "unterminated string literal");
      }
      ++i;
      push(TokenKind::StrLiteral, source.substr(start, i - start));
      continue;
    }

    // Operators and punctuation; longest match first.
    auto two = [&](char a, char b) { return c == a && i + 1 < n && source[i + 1] == b; };
    if (two('=', '=') || two('!', '=') || two('<', '=') || two('>', '=') ||
        two('&', '&') || two('|', '|') || two('.', '.')) {
      push(TokenKind::Operator, source.substr(i, 2));
      i += 2;
      continue;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '%':
      case '<': case '>': case '=': case '!':
        push(TokenKind::Operator, std::string(1, c));
        ++i;
        continue;
      case '(': case ')': case '{': case '}': case ',': case ';':
        push(TokenKind::Punctuation, std::string(1, c));
        ++i;
        continue;
      default:
        throw LexError(line, std::string("illegal character '") + c + "'");
    }
  }
  return tokens;
}

}  // namespace bpa
