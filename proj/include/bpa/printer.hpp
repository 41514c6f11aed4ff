#pragma once

#include <string>

#include "bpa/ast.hpp"

namespace bpa {

/// Renders the canonical form: one statement per line, two-space indent per
/// block depth, minimal parentheses, empty else branches omitted. Parsing the
/// result yields a program structurally equal to the input, with statement
/// lines matching their printed positions.
std::string pretty_print(const Program& p);

std::string print_expr(const Expr& e);

/// Convenience: parse + pretty_print, giving the canonical text of a source
/// string.
std::string canonicalize(const std::string& source);

}  // namespace bpa
