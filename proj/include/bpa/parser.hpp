#pragma once

#include <stdexcept>
#include <string>

#include "bpa/ast.hpp"

namespace bpa {

struct ParseError : std::runtime_error {
  int line;
  std::string expected;
  std::string found;
  ParseError(int line_, std::string expected_, std::string found_)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ": expected " +
                           expected_ + ", found " + found_),
        line(line_),
        expected(std::move(expected_)),
        found(std::move(found_)) {}
};

struct DuplicateFunction : std::runtime_error {
  std::string name;
  explicit DuplicateFunction(std::string name_)
      : std::runtime_error("duplicate function '" + name_ + "'"), name(std::move(name_)) {}
};

/// Parses MiniLang source into a line-annotated Program. Every statement's
/// `line` is the source line of its first token.
Program parse(const std::string& source);

}  // namespace bpa
