#include "bpa/parser.hpp"

#include <algorithm>
#include <set>

#include "bpa/token.hpp"

namespace bpa {

namespace {

std::string decode_string_lexeme(const std::string& lexeme) {
  // lexeme includes the surrounding quotes; the lexer guarantees every
  // backslash is followed by a character before the closing quote
  std::string out;
  for (std::size_t i = 1; i + 1 < lexeme.size(); ++i) {
    char c = lexeme[i];
    if (c == '\\') {
      char next = lexeme[++i];
      switch (next) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case '\\': out.push_back('\\'); break;
        case '"': out.push_back('"'); break;
        default: out.push_back(next); break;
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program parse_program() {
    Program p;
    if (at_end()) throw err("'fun'");
    std::set<std::string> names;
    while (!at_end()) {
      FunctionDef f = parse_fundef();
      if (!names.insert(f.name).second) throw DuplicateFunction(f.name);
      p.functions.push_back(std::move(f));
    }
    return p;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& prev() const { return tokens_[pos_ - 1]; }

  int here_line() const {
    if (!at_end()) return peek().line;
    return tokens_.empty() ? 1 : tokens_.back().line;
  }

  ParseError err(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + peek().lexeme + "'";
    return ParseError(here_line(), expected, found);
  }

  bool check(TokenKind kind, const std::string& lexeme) const {
    return !at_end() && peek().kind == kind && peek().lexeme == lexeme;
  }

  bool match(TokenKind kind, const std::string& lexeme) {
    if (!check(kind, lexeme)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(TokenKind kind, const std::string& lexeme) {
    if (!check(kind, lexeme)) throw err("'" + lexeme + "'");
    return tokens_[pos_++];
  }

  std::string expect_ident() {
    if (at_end() || peek().kind != TokenKind::Identifier) throw err("identifier");
    return tokens_[pos_++].lexeme;
  }

  FunctionDef parse_fundef() {
    const Token& kw = expect(TokenKind::Keyword, "fun");
    FunctionDef f;
    f.header_line = kw.line;
    f.name = expect_ident();
    expect(TokenKind::Punctuation, "(");
    if (!check(TokenKind::Punctuation, ")")) {
      f.params.push_back(expect_ident());
      while (match(TokenKind::Punctuation, ",")) f.params.push_back(expect_ident());
    }
    std::set<std::string> unique_params(f.params.begin(), f.params.end());
    if (unique_params.size() != f.params.size()) {
      throw ParseError(f.header_line, "unique parameter names", "duplicate parameter");
    }
    expect(TokenKind::Punctuation, ")");
    f.body = parse_block();
    f.first_body_line = f.body.empty() ? f.header_line + 1 : f.body.first_stmt_line();
    return f;
  }

  Block parse_block() {
    expect(TokenKind::Punctuation, "{");
    Block b;
    while (!check(TokenKind::Punctuation, "}")) {
      if (at_end()) throw err("'}'");
      b.stmts.push_back(std::make_unique<Stmt>(parse_stmt()));
    }
    expect(TokenKind::Punctuation, "}");
    return b;
  }

  Stmt parse_stmt() {
    int line = here_line();
    if (match(TokenKind::Keyword, "let")) {
      LetStmt s;
      s.name = expect_ident();
      expect(TokenKind::Operator, "=");
      s.value = parse_expr();
      expect(TokenKind::Punctuation, ";");
      return Stmt{std::move(s), line};
    }
    if (check(TokenKind::Keyword, "if")) return parse_if();
    if (match(TokenKind::Keyword, "while")) {
      WhileStmt s;
      expect(TokenKind::Punctuation, "(");
      s.cond = parse_expr();
      expect(TokenKind::Punctuation, ")");
      s.body = parse_block();
      return Stmt{std::move(s), line};
    }
    if (match(TokenKind::Keyword, "for")) {
      ForStmt s;
      expect(TokenKind::Punctuation, "(");
      s.var = expect_ident();
      expect(TokenKind::Keyword, "in");
      s.from = parse_expr();
      expect(TokenKind::Operator, "..");
      s.to = parse_expr();
      expect(TokenKind::Punctuation, ")");
      s.body = parse_block();
      return Stmt{std::move(s), line};
    }
    if (match(TokenKind::Keyword, "return")) {
      ReturnStmt s;
      s.value = parse_expr();
      expect(TokenKind::Punctuation, ";");
      return Stmt{std::move(s), line};
    }
    if (match(TokenKind::Keyword, "print")) {
      PrintStmt s;
      expect(TokenKind::Punctuation, "(");
      s.value = parse_expr();
      expect(TokenKind::Punctuation, ")");
      expect(TokenKind::Punctuation, ";");
      return Stmt{std::move(s), line};
    }
    // Assignment needs two tokens of lookahead: IDENT '=' (but not '==').
    if (!at_end() && peek().kind == TokenKind::Identifier && pos_ + 1 < tokens_.size() &&
        tokens_[pos_ + 1].kind == TokenKind::Operator && tokens_[pos_ + 1].lexeme == "=") {
      AssignStmt s;
      s.name = expect_ident();
      expect(TokenKind::Operator, "=");
      s.value = parse_expr();
      expect(TokenKind::Punctuation, ";");
      return Stmt{std::move(s), line};
    }
    ExprStmt s;
    s.expr = parse_expr();
    expect(TokenKind::Punctuation, ";");
    return Stmt{std::move(s), line};
  }

  Stmt parse_if() {
    int line = here_line();
    expect(TokenKind::Keyword, "if");
    IfStmt s;
    expect(TokenKind::Punctuation, "(");
    s.cond = parse_expr();
    expect(TokenKind::Punctuation, ")");
    s.then_block = parse_block();
    if (match(TokenKind::Keyword, "else")) {
      ElseArm arm;
      if (check(TokenKind::Keyword, "if")) {
        arm.else_if = std::make_unique<Stmt>(parse_if());
      } else {
        arm.block = parse_block();
      }
      s.else_arm = std::move(arm);
    }
    return Stmt{std::move(s), line};
  }

  // Precedence: || < && < comparisons < + - < * / % < unary < call/atom.
  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (check(TokenKind::Operator, "||")) {
      int line = peek().line;
      ++pos_;
      ExprPtr rhs = parse_and();
      lhs = make_binary(BinaryOp::Or, std::move(lhs), std::move(rhs), line);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_cmp();
    while (check(TokenKind::Operator, "&&")) {
      int line = peek().line;
      ++pos_;
      ExprPtr rhs = parse_cmp();
      lhs = make_binary(BinaryOp::And, std::move(lhs), std::move(rhs), line);
    }
    return lhs;
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_add();
    while (true) {
      BinaryOp op;
      if (check(TokenKind::Operator, "==")) op = BinaryOp::Eq;
      else if (check(TokenKind::Operator, "!=")) op = BinaryOp::Ne;
      else if (check(TokenKind::Operator, "<")) op = BinaryOp::Lt;
      else if (check(TokenKind::Operator, "<=")) op = BinaryOp::Le;
      else if (check(TokenKind::Operator, ">")) op = BinaryOp::Gt;
      else if (check(TokenKind::Operator, ">=")) op = BinaryOp::Ge;
      else break;
      int line = peek().line;
      ++pos_;
      ExprPtr rhs = parse_add();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), line);
    }
    return lhs;
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    while (true) {
      BinaryOp op;
      if (check(TokenKind::Operator, "+")) op = BinaryOp::Add;
      else if (check(TokenKind::Operator, "-")) op = BinaryOp::Sub;
      else break;
      int line = peek().line;
      ++pos_;
      ExprPtr rhs = parse_mul();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), line);
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (true) {
      BinaryOp op;
      if (check(TokenKind::Operator, "*")) op = BinaryOp::Mul;
      else if (check(TokenKind::Operator, "/")) op = BinaryOp::Div;
      else if (check(TokenKind::Operator, "%")) op = BinaryOp::Mod;
      else break;
      int line = peek().line;
      ++pos_;
      ExprPtr rhs = parse_unary();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), line);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (check(TokenKind::Operator, "-") || check(TokenKind::Operator, "!")) {
      UnaryOp op = peek().lexeme == "-" ? UnaryOp::Neg : UnaryOp::Not;
      int line = peek().line;
      ++pos_;
      UnaryExpr u{op, parse_unary()};
      auto e = std::make_unique<Expr>();
      e->node = std::move(u);
      e->line = line;
      return e;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    if (at_end()) throw err("expression");
    const Token& t = peek();
    auto e = std::make_unique<Expr>();
    e->line = t.line;
    switch (t.kind) {
      case TokenKind::IntLiteral:
        e->node = IntLit{std::stoll(t.lexeme)};
        ++pos_;
        return e;
      case TokenKind::BoolLiteral:
        e->node = BoolLit{t.lexeme == "true"};
        ++pos_;
        return e;
      case TokenKind::StrLiteral:
        e->node = StrLit{decode_string_lexeme(t.lexeme)};
        ++pos_;
        return e;
      case TokenKind::Identifier: {
        std::string name = t.lexeme;
        ++pos_;
        if (match(TokenKind::Punctuation, "(")) {
          CallExpr call;
          call.callee = std::move(name);
          if (!check(TokenKind::Punctuation, ")")) {
            call.args.push_back(parse_expr());
            while (match(TokenKind::Punctuation, ",")) call.args.push_back(parse_expr());
          }
          expect(TokenKind::Punctuation, ")");
          e->node = std::move(call);
        } else {
          e->node = VarRef{std::move(name)};
        }
        return e;
      }
      case TokenKind::Punctuation:
        if (t.lexeme == "(") {
          ++pos_;
          ExprPtr inner = parse_expr();
          expect(TokenKind::Punctuation, ")");
          return inner;
        }
        break;
      default:
        break;
    }
    throw err("expression");
  }

  static ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, int line) {
    auto e = std::make_unique<Expr>();
    int lhs_line = lhs->line;
    e->node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
    e->line = lhs_line != 0 ? lhs_line : line;
    return e;
  }
};

}  // namespace

Program parse(const std::string& source) {
  Parser parser(tokenize(source));
  Program p = parser.parse_program();
  int max_line = 0;
  for (const auto& f : p.functions) {
    max_line = std::max(max_line, f.header_line);
    for (const auto& s : f.body.stmts) max_line = std::max(max_line, last_line_of(*s));
  }
  // +1 accounts for the last function's closing brace line.
  int physical_lines = 0;
  for (char c : source) {
    if (c == '\n') ++physical_lines;
  }
  if (!source.empty() && source.back() != '\n') ++physical_lines;
  p.source_lines = std::max(max_line + 1, physical_lines);
  return p;
}

}  // namespace bpa
