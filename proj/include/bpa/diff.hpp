#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bpa/ast.hpp"

namespace bpa {

enum class HunkKind { Replace, Delete, Insert };

/// One contiguous difference between the canonical student and fixed texts.
/// Lines compare token-normalized, so formatting and comments never diff.
struct DiffHunk {
  std::vector<int> student_lines;  // contiguous; empty for pure insertion
  std::vector<int> fixed_lines;    // contiguous; empty for pure deletion
  HunkKind kind = HunkKind::Replace;
  int after_student_line = 0;  // for Insert: last student line before the gap (0 = start)
};

enum class EditKindTag { ConditionChange, VariableModification, FunctionScopeChange };

struct EditKind {
  EditKindTag tag;
  std::string variable;  // VariableModification only
  std::string function;  // FunctionScopeChange only

  bool operator<(const EditKind& o) const {
    return std::tie(tag, variable, function) < std::tie(o.tag, o.variable, o.function);
  }
  bool operator==(const EditKind& o) const {
    return tag == o.tag && variable == o.variable && function == o.function;
  }
};

/// A diff hunk anchored to a student-program statement line, classified into
/// the heuristic triggers. Multi-line hunks yield one site per student
/// statement line; insertions anchor to the nearest preceding unchanged
/// statement line.
struct ChangeSite {
  int anchor_line = 0;
  DiffHunk hunk;
  std::vector<EditKind> edit_kinds;  // sorted, unique, never empty

  bool has(EditKindTag tag) const;
  std::vector<std::string> modified_variables() const;
  std::string enclosing_function() const;
};

struct EmptyDiff : std::runtime_error {
  EmptyDiff() : std::runtime_error("programs are identical; nothing to repair") {}
};

/// LCS diff over canonical pretty-printed, token-normalized lines.
std::vector<DiffHunk> diff_lines(const Program& student, const Program& fixed);

/// Anchors and classifies every hunk. Throws EmptyDiff when there are none.
std::vector<ChangeSite> anchor_and_classify(const std::vector<DiffHunk>& hunks,
                                            const Program& student, const Program& fixed);

}  // namespace bpa
