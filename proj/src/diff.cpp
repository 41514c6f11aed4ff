#include "bpa/diff.hpp"

#include <algorithm>
#include <map>

#include "bpa/printer.hpp"
#include "bpa/token.hpp"

namespace bpa {

bool ChangeSite::has(EditKindTag tag) const {
  return std::any_of(edit_kinds.begin(), edit_kinds.end(),
                     [&](const EditKind& k) { return k.tag == tag; });
}

std::vector<std::string> ChangeSite::modified_variables() const {
  std::vector<std::string> vars;
  for (const auto& k : edit_kinds) {
    if (k.tag == EditKindTag::VariableModification) vars.push_back(k.variable);
  }
  return vars;
}

std::string ChangeSite::enclosing_function() const {
  for (const auto& k : edit_kinds) {
    if (k.tag == EditKindTag::FunctionScopeChange) return k.function;
  }
  return {};
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Comparison key: token lexemes joined by single spaces.
std::string normalize_line(const std::string& line) {
  std::string key;
  for (const auto& t : tokenize(line)) {
    if (!key.empty()) key.push_back(' ');
    key += t.lexeme;
  }
  return key;
}

std::vector<std::string> normalized_lines(const Program& p) {
  std::vector<std::string> out;
  for (const auto& line : split_lines(pretty_print(p))) out.push_back(normalize_line(line));
  return out;
}

}  // namespace

std::vector<DiffHunk> diff_lines(const Program& student, const Program& fixed) {
  std::vector<std::string> a = normalized_lines(student);
  std::vector<std::string> b = normalized_lines(fixed);
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  // LCS length table
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }

  std::vector<DiffHunk> hunks;
  DiffHunk cur;
  bool open = false;
  int last_matched_student = 0;

  auto flush = [&]() {
    if (!open) return;
    if (cur.student_lines.empty()) {
      cur.kind = HunkKind::Insert;
      cur.after_student_line = last_matched_student;
    } else if (cur.fixed_lines.empty()) {
      cur.kind = HunkKind::Delete;
    } else {
      cur.kind = HunkKind::Replace;
    }
    hunks.push_back(std::move(cur));
    cur = DiffHunk{};
    open = false;
  };

  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      flush();
      last_matched_student = static_cast<int>(i) + 1;
      ++i;
      ++j;
    } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
      cur.fixed_lines.push_back(static_cast<int>(j) + 1);
      open = true;
      ++j;
    } else {
      cur.student_lines.push_back(static_cast<int>(i) + 1);
      open = true;
      ++i;
    }
  }
  flush();
  return hunks;
}

namespace {

// Statement lines within a hunk's side, plus function headers treated
// specially by the anchoring rules.
std::vector<int> stmt_lines_in(const std::vector<int>& lines, const std::set<int>& stmt_lines) {
  std::vector<int> out;
  for (int line : lines) {
    if (stmt_lines.count(line)) out.push_back(line);
  }
  return out;
}

const FunctionDef* header_in_hunk(const std::vector<int>& lines, const Program& p) {
  for (int line : lines) {
    for (const auto& f : p.functions) {
      if (f.header_line == line) return &f;
    }
  }
  return nullptr;
}

bool is_conditional(const Stmt* s) {
  return s && (std::holds_alternative<IfStmt>(s->node) ||
               std::holds_alternative<WhileStmt>(s->node) ||
               std::holds_alternative<ForStmt>(s->node));
}

void classify_stmt_kinds(const Stmt* s, const Program& owner, int line,
                         std::set<EditKind>& kinds) {
  if (!s) return;
  if (is_conditional(s)) {
    kinds.insert({EditKindTag::ConditionChange, "", ""});
  }
  if (const auto* let = std::get_if<LetStmt>(&s->node)) {
    kinds.insert({EditKindTag::VariableModification, let->name, ""});
  } else if (const auto* asg = std::get_if<AssignStmt>(&s->node)) {
    kinds.insert({EditKindTag::VariableModification, asg->name, ""});
  } else if (const auto* fr = std::get_if<ForStmt>(&s->node)) {
    kinds.insert({EditKindTag::VariableModification, fr->var, ""});
  } else if (std::holds_alternative<WhileStmt>(s->node)) {
    // every variable read in a changed while condition counts as modified
    for (const auto& var : vars_read_at_line(owner, line)) {
      kinds.insert({EditKindTag::VariableModification, var, ""});
    }
  }
}

ChangeSite make_site(int anchor, const DiffHunk& hunk, const Program& student,
                     const Program& fixed, const std::vector<int>& fixed_stmt_lines,
                     bool paired, int pair_index) {
  ChangeSite site;
  site.anchor_line = anchor;
  site.hunk = hunk;
  std::set<EditKind> kinds;

  classify_stmt_kinds(stmt_at_line(student, anchor), student, anchor, kinds);
  if (paired && pair_index >= 0 &&
      pair_index < static_cast<int>(fixed_stmt_lines.size())) {
    int fl = fixed_stmt_lines[static_cast<std::size_t>(pair_index)];
    classify_stmt_kinds(stmt_at_line(fixed, fl), fixed, fl, kinds);
  } else {
    for (int fl : fixed_stmt_lines) {
      classify_stmt_kinds(stmt_at_line(fixed, fl), fixed, fl, kinds);
    }
  }

  const FunctionDef* enclosing = function_at_line(student, anchor);
  kinds.insert({EditKindTag::FunctionScopeChange, "", enclosing ? enclosing->name : ""});

  site.edit_kinds.assign(kinds.begin(), kinds.end());
  return site;
}

}  // namespace

std::vector<ChangeSite> anchor_and_classify(const std::vector<DiffHunk>& hunks,
                                            const Program& student, const Program& fixed) {
  if (hunks.empty()) throw EmptyDiff();

  std::set<int> student_stmt_lines = statement_lines(student);
  std::set<int> fixed_stmt_lines_all = statement_lines(fixed);
  std::set<int> changed_student_lines;
  for (const auto& h : hunks) {
    changed_student_lines.insert(h.student_lines.begin(), h.student_lines.end());
  }

  // nearest preceding unchanged statement line, for insertions
  auto anchor_before = [&](int position) -> int {
    for (int line = position; line >= 1; --line) {
      if (student_stmt_lines.count(line) && !changed_student_lines.count(line)) return line;
    }
    const FunctionDef* f = function_at_line(student, std::max(position, 1));
    if (f && !f->body.empty()) return f->first_body_line;
    for (const auto& fn : student.functions) {
      if (!fn.body.empty()) return fn.first_body_line;
    }
    return 0;
  };

  std::vector<ChangeSite> sites;
  for (const auto& hunk : hunks) {
    std::vector<int> anchors = stmt_lines_in(hunk.student_lines, student_stmt_lines);
    std::vector<int> fixed_stmts = stmt_lines_in(hunk.fixed_lines, fixed_stmt_lines_all);

    if (anchors.empty()) {
      // pure insertion, a changed header, or a brace-only change
      int anchor = 0;
      if (const FunctionDef* f = header_in_hunk(hunk.student_lines, student)) {
        anchor = f->body.empty() ? 0 : f->first_body_line;
      }
      if (anchor == 0) {
        int position = hunk.kind == HunkKind::Insert
                           ? hunk.after_student_line
                           : (hunk.student_lines.empty() ? 0 : hunk.student_lines.front());
        anchor = anchor_before(position);
      }
      if (anchor == 0) continue;  // program with no statements at all
      sites.push_back(make_site(anchor, hunk, student, fixed, fixed_stmts, false, -1));
      continue;
    }

    // replace hunks with equal statement counts pair line-for-line
    bool paired = hunk.kind == HunkKind::Replace && anchors.size() == fixed_stmts.size();
    for (std::size_t idx = 0; idx < anchors.size(); ++idx) {
      sites.push_back(make_site(anchors[idx], hunk, student, fixed, fixed_stmts, paired,
                                static_cast<int>(idx)));
    }
  }
  return sites;
}

}  // namespace bpa
