#pragma once

// The sum/while reference pair used across the test suites: the student
// version uses a strict `<` bound, the fixed version `<=`.

#include <string>

namespace bpa::testref {

inline const char* kStudentSum =
    "fun sum(n) {\n"
    "  let s = 0;\n"
    "  let i = 1;\n"
    "  while (i < n) {\n"
    "    s = s + i;\n"
    "    i = i + 1;\n"
    "  }\n"
    "  return s;\n"
    "}\n";

inline const char* kFixedSum =
    "fun sum(n) {\n"
    "  let s = 0;\n"
    "  let i = 1;\n"
    "  while (i <= n) {\n"
    "    s = s + i;\n"
    "    i = i + 1;\n"
    "  }\n"
    "  return s;\n"
    "}\n";

inline const char* kFactorial =
    "fun factorial(n) {\n"
    "  let acc = 1;\n"
    "  for (i in 1..n) {\n"
    "    acc = acc * i;\n"
    "  }\n"
    "  return acc;\n"
    "}\n";

}  // namespace bpa::testref
