#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/errors.hpp"
#include "fuzzalg/numerics.hpp"

namespace fuzzalg::dsl {

// 1-based position of a token or node in the source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

std::string at(const SourceSpan& s);  // "line:column: " prefix for messages

// Positioned errors. what() always starts with "line:column: ".
class LexError : public Error {
 public:
  LexError(SourceSpan s, const std::string& msg);
  SourceSpan span;
};
class ParseError : public Error {
 public:
  ParseError(SourceSpan s, const std::string& msg);
  SourceSpan span;
};
class NameError : public Error {
 public:
  NameError(SourceSpan s, const std::string& msg);
  SourceSpan span;
};
class TypeMismatch : public Error {
 public:
  TypeMismatch(SourceSpan s, const std::string& msg);
  SourceSpan span;
};
class DomainGap : public Error {
 public:
  DomainGap(SourceSpan s, const std::string& msg);
  SourceSpan span;
};
class DomainOverlap : public Error {
 public:
  DomainOverlap(SourceSpan s, const std::string& msg);
  SourceSpan span;
};

enum class TokenKind {
  kw_let,
  kw_check,
  kw_on,
  kw_fn,
  kw_piecewise,
  kw_grid,
  kw_samples,
  kw_inf,
  kw_tnorm,
  kw_tconorm,
  kw_uninorm,
  kw_nullnorm,
  kw_monoid,
  kw_lattice,
  kw_indist,
  kw_fuzzyset,
  kw_vague,
  identifier,
  number,
  lparen,
  rparen,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  comma,
  semicolon,
  arrow,
  equals,
  plus,
  minus,
  star,
  slash,
  caret,
  end_of_input,
};

std::string token_kind_name(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::end_of_input;
  std::string text;  // exact lexeme
  double num = 0.0;  // value for number tokens
  SourceSpan span;
};

// Splits UTF-8 text into tokens; `#` comments run to end of line; CR is
// treated as whitespace so CRLF input works. Throws LexError on any
// unexpected character.
std::vector<Token> tokenize(std::string_view text);

// Expressions over one variable with ln, exp, sqrt, abs, min, max, the
// arithmetic operators, numeric literals, and inf.
struct Expr {
  enum class Kind { number, inf, var, call, unary_minus, binary, paren };
  Kind kind = Kind::number;
  double num = 0.0;
  std::string text;        // literal lexeme (round-trip printing)
  std::string name;        // variable or callee
  char op = 0;             // '+', '-', '*', '/', '^'
  std::vector<Expr> args;  // operands / call arguments / paren child
  SourceSpan span;
};

// Evaluates with IEEE double semantics (inf maps to HUGE_VAL). The single
// variable `var` is bound to `x`; any other variable is an error, which
// elaboration rules out up front.
double eval_expr(const Expr& e, const std::string& var, double x);

// A signed numeric literal, possibly inf (interval bounds, sample lists).
struct Bound {
  bool neg = false;
  bool inf = false;
  double value = 0.0;  // sign included
  std::string text;    // unsigned lexeme
  SourceSpan span;
};

struct IntervalSpec {
  bool lo_closed = true;
  Bound lo;
  Bound hi;
  bool hi_closed = true;
  SourceSpan span;  // from the opening bracket to the closing one
};

struct PieceSpec {
  IntervalSpec interval;
  Expr body;
};

// One positional constructor / check argument: an identifier or a number.
struct OpArg {
  enum class Kind { ident, number };
  Kind kind = Kind::ident;
  std::string name;
  double num = 0.0;
  std::string text;
  SourceSpan span;
};

// Right-hand side of a let statement.
struct ValueNode {
  enum class Kind { fn, piecewise, opctor, number };
  Kind kind = Kind::number;
  SourceSpan span;  // head token

  double num = 0.0;  // plain number value
  std::string num_text;

  std::string param;  // fn / piecewise / fuzzyset-fn parameter
  SourceSpan param_span;
  Expr body;
  std::vector<PieceSpec> pieces;

  // Operator constructors. head is the keyword; sub selects the form:
  //   tnorm/tconorm: builtin name in sub, or sub = "gen" with args = {t}
  //   uninorm:   sub in {umin, umax, idem, rep, cosmin, cosmax}, args mixed
  //   nullnorm:  sub = "", args = {S, k, T}
  //   monoid:    sub = "grid": num2 = n, args = {op}, num holds the identity;
  //              sub = "set": list1 = carrier, list2 = value table, num = identity
  //   lattice:   sub = "chain": num2 = n; sub = "boolean2"
  //   indist:    sub = "set": list1 = carrier, list2 = full table row-major
  //   fuzzyset:  sub = "fn": param/body; sub = "table": list1 = values;
  //              sub = "compose": args = {h, f, t[, convention]}
  //   vague:     sub = "from", args = {E, M}
  std::string head;
  std::string sub;
  SourceSpan sub_span;
  std::vector<OpArg> args;
  std::vector<Bound> list1, list2;
  double num2 = 0.0;
  std::string num2_text;
};

struct Domain {
  enum class Kind { grid, samples };
  Kind kind = Kind::grid;
  int n = 0;
  std::string n_text;
  std::vector<Bound> samples;
  SourceSpan span;
};

struct LetStmt {
  std::string name;
  SourceSpan name_span;
  ValueNode value;
};

struct CheckStmt {
  std::string head;
  SourceSpan head_span;
  std::vector<OpArg> args;
  std::optional<Domain> domain;
};

struct Stmt {
  enum class Kind { let, check };
  Kind kind = Kind::let;
  LetStmt let;
  CheckStmt check;
};

struct Program {
  std::vector<Stmt> statements;
};

// Recursive-descent parse; throws ParseError with the span of the offending
// token and the expected-token set in the message.
Program parse(const std::vector<Token>& tokens);
Program parse_program(std::string_view text);  // tokenize + parse

// Canonical rendering: one statement per line, single token spacing. The
// token content (kinds and lexemes) of pretty_print(parse(s)) equals that of
// s, minus comments.
std::string pretty_print(const Program& p);

// One verdict line of a script run.
struct CheckLine {
  std::string name;
  bool pass = true;
  std::string witness;  // rendered after "@" on failure
  bool identity_condition = false;
  double ms = 0.0;
};

struct RunOptions {
  TolerancePolicy pol{};
};

struct PreparedCheck {
  std::string head;
  std::function<std::vector<CheckLine>()> execute;
};

// Typed definitions plus the executable check list. Throws NameError /
// TypeMismatch / DomainGap / DomainOverlap / ConstraintViolation (the latter
// prefixed with the statement position) on ill-formed programs.
struct CheckedProgram {
  std::vector<std::string> defined;  // let-bound names in order
  std::vector<PreparedCheck> checks;
};
CheckedProgram elaborate(const Program& p, const TolerancePolicy& pol = {});

// Binary surfaces bound by the program's let statements (t-norms, t-conorms,
// uninorms, nullnorms), as evaluable operators named after their binding, in
// definition order. Bindings of other kinds are skipped. Throws like
// elaborate on ill-formed programs.
std::vector<BinaryOp> script_surfaces(const Program& p, const TolerancePolicy& pol = {});

struct ProgramResult {
  std::vector<CheckLine> lines;
  // Overall verdict: identity-condition failures are fatal only when strict.
  bool run_pass(bool strict_identity) const;
};
ProgramResult run_program(const Program& p, const RunOptions& opt = {});

}  // namespace fuzzalg::dsl
