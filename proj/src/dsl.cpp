#include "fuzzalg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <utility>

#include "fuzzalg/report.hpp"

namespace fuzzalg::dsl {

std::string at(const SourceSpan& s) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d:%d: ", s.line, s.column);
  return buf;
}

LexError::LexError(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}
ParseError::ParseError(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}
NameError::NameError(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}
TypeMismatch::TypeMismatch(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}
DomainGap::DomainGap(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}
DomainOverlap::DomainOverlap(SourceSpan s, const std::string& msg) : Error(at(s) + msg), span(s) {}

namespace {

const std::map<std::string, TokenKind, std::less<>>& keyword_map() {
  static const std::map<std::string, TokenKind, std::less<>> m = {
      {"let", TokenKind::kw_let},           {"check", TokenKind::kw_check},
      {"on", TokenKind::kw_on},             {"fn", TokenKind::kw_fn},
      {"piecewise", TokenKind::kw_piecewise}, {"grid", TokenKind::kw_grid},
      {"samples", TokenKind::kw_samples},   {"inf", TokenKind::kw_inf},
      {"tnorm", TokenKind::kw_tnorm},       {"tconorm", TokenKind::kw_tconorm},
      {"uninorm", TokenKind::kw_uninorm},   {"nullnorm", TokenKind::kw_nullnorm},
      {"monoid", TokenKind::kw_monoid},     {"lattice", TokenKind::kw_lattice},
      {"indist", TokenKind::kw_indist},     {"fuzzyset", TokenKind::kw_fuzzyset},
      {"vague", TokenKind::kw_vague},
  };
  return m;
}

}  // namespace

std::string token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::kw_let: return "let";
    case TokenKind::kw_check: return "check";
    case TokenKind::kw_on: return "on";
    case TokenKind::kw_fn: return "fn";
    case TokenKind::kw_piecewise: return "piecewise";
    case TokenKind::kw_grid: return "grid";
    case TokenKind::kw_samples: return "samples";
    case TokenKind::kw_inf: return "inf";
    case TokenKind::kw_tnorm: return "tnorm";
    case TokenKind::kw_tconorm: return "tconorm";
    case TokenKind::kw_uninorm: return "uninorm";
    case TokenKind::kw_nullnorm: return "nullnorm";
    case TokenKind::kw_monoid: return "monoid";
    case TokenKind::kw_lattice: return "lattice";
    case TokenKind::kw_indist: return "indist";
    case TokenKind::kw_fuzzyset: return "fuzzyset";
    case TokenKind::kw_vague: return "vague";
    case TokenKind::identifier: return "ident";
    case TokenKind::number: return "number";
    case TokenKind::lparen: return "(";
    case TokenKind::rparen: return ")";
    case TokenKind::lbrace: return "{";
    case TokenKind::rbrace: return "}";
    case TokenKind::lbracket: return "[";
    case TokenKind::rbracket: return "]";
    case TokenKind::comma: return ",";
    case TokenKind::semicolon: return ";";
    case TokenKind::arrow: return "->";
    case TokenKind::equals: return "=";
    case TokenKind::plus: return "+";
    case TokenKind::minus: return "-";
    case TokenKind::star: return "*";
    case TokenKind::slash: return "/";
    case TokenKind::caret: return "^";
    case TokenKind::end_of_input: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](TokenKind k, std::string lex, SourceSpan sp, double num = 0.0) {
    Token t;
    t.kind = k;
    t.text = std::move(lex);
    t.num = num;
    t.span = sp;
    out.push_back(std::move(t));
  };

  while (i < n) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i, ++col;
      continue;
    }
    if (c == '\n') {
      ++i, ++line, col = 1;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i, ++col;
      continue;
    }
    SourceSpan sp{line, col, 1};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      sp.length = static_cast<int>(j - i);
      auto it = keyword_map().find(word);
      push(it != keyword_map().end() ? it->second : TokenKind::identifier, std::move(word), sp);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < n && text[j] == '.' && j + 1 < n &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < n && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
          ++k;
          while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          j = k;
        }
      }
      std::string lex(text.substr(i, j - i));
      sp.length = static_cast<int>(j - i);
      push(TokenKind::number, lex, sp, std::strtod(lex.c_str(), nullptr));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      sp.length = 2;
      push(TokenKind::arrow, "->", sp);
      i += 2, col += 2;
      continue;
    }
    TokenKind k;
    switch (c) {
      case '(': k = TokenKind::lparen; break;
      case ')': k = TokenKind::rparen; break;
      case '{': k = TokenKind::lbrace; break;
      case '}': k = TokenKind::rbrace; break;
      case '[': k = TokenKind::lbracket; break;
      case ']': k = TokenKind::rbracket; break;
      case ',': k = TokenKind::comma; break;
      case ';': k = TokenKind::semicolon; break;
      case '=': k = TokenKind::equals; break;
      case '+': k = TokenKind::plus; break;
      case '-': k = TokenKind::minus; break;
      case '*': k = TokenKind::star; break;
      case '/': k = TokenKind::slash; break;
      case '^': k = TokenKind::caret; break;
      default: {
        std::string msg;
        if (std::isprint(static_cast<unsigned char>(c))) {
          msg = std::string("unexpected character '") + c + "'";
        } else {
          char buf[40];
          std::snprintf(buf, sizeof buf, "unexpected byte 0x%02x",
                        static_cast<unsigned char>(c));
          msg = buf;
        }
        throw LexError(sp, msg);
      }
    }
    push(k, std::string(1, c), sp);
    ++i, ++col;
  }
  Token end;
  end.kind = TokenKind::end_of_input;
  end.span = SourceSpan{line, col, 1};
  out.push_back(std::move(end));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  Program program() {
    Program p;
    while (!at(TokenKind::end_of_input)) p.statements.push_back(statement());
    return p;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t i_ = 0;

  const Token& cur() const { return toks_[i_]; }
  const Token& peek(std::size_t k = 1) const {
    return toks_[std::min(i_ + k, toks_.size() - 1)];
  }
  bool at(TokenKind k) const { return cur().kind == k; }
  Token advance() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = cur().kind == TokenKind::end_of_input
                          ? "end of input"
                          : "'" + cur().text + "'";
    throw ParseError(cur().span, "expected " + expected + ", found " + got);
  }
  Token expect(TokenKind k, const std::string& expected) {
    if (!at(k)) fail(expected);
    return advance();
  }
  // Contextual keyword spelled as an identifier (with, identity, table, ...).
  Token expect_word(const std::string& word) {
    if (!at(TokenKind::identifier) || cur().text != word) fail("'" + word + "'");
    return advance();
  }
  // One of a closed set of contextual keywords; fails at the current token.
  Token expect_one_of(std::initializer_list<std::string_view> words,
                      const std::string& expected) {
    if (at(TokenKind::identifier)) {
      for (std::string_view w : words) {
        if (cur().text == w) return advance();
      }
    }
    fail(expected);
  }

  Stmt statement() {
    Stmt s;
    if (at(TokenKind::kw_let)) {
      s.kind = Stmt::Kind::let;
      s.let = let_stmt();
    } else if (at(TokenKind::kw_check)) {
      s.kind = Stmt::Kind::check;
      s.check = check_stmt();
    } else {
      fail("'let' or 'check'");
    }
    return s;
  }

  LetStmt let_stmt() {
    expect(TokenKind::kw_let, "'let'");
    LetStmt st;
    Token name = expect(TokenKind::identifier, "a name");
    st.name = name.text;
    st.name_span = name.span;
    expect(TokenKind::equals, "'='");
    st.value = value();
    expect(TokenKind::semicolon, "';'");
    return st;
  }

  CheckStmt check_stmt() {
    expect(TokenKind::kw_check, "'check'");
    CheckStmt st;
    Token head = expect(TokenKind::identifier, "a check name");
    st.head = head.text;
    st.head_span = head.span;
    expect(TokenKind::lparen, "'('");
    st.args = op_args();
    expect(TokenKind::rparen, "')'");
    if (at(TokenKind::kw_on)) {
      advance();
      st.domain = domain();
    }
    expect(TokenKind::semicolon, "';'");
    return st;
  }

  Domain domain() {
    Domain d;
    if (at(TokenKind::kw_grid)) {
      d.span = advance().span;
      d.kind = Domain::Kind::grid;
      expect(TokenKind::lparen, "'('");
      Token n = expect(TokenKind::number, "a grid size");
      d.n = static_cast<int>(n.num);
      d.n_text = n.text;
      if (n.num != d.n) throw TypeMismatch(n.span, "grid size must be an integer");
      expect(TokenKind::rparen, "')'");
    } else if (at(TokenKind::kw_samples)) {
      d.span = advance().span;
      d.kind = Domain::Kind::samples;
      expect(TokenKind::lbrace, "'{'");
      d.samples = bound_list();
      expect(TokenKind::rbrace, "'}'");
    } else {
      fail("'grid' or 'samples'");
    }
    return d;
  }

  // Comma-separated constructor / check arguments.
  std::vector<OpArg> op_args() {
    std::vector<OpArg> args;
    if (at(TokenKind::rparen)) return args;
    args.push_back(op_arg());
    while (true) {
      if (at(TokenKind::comma)) {
        advance();
        args.push_back(op_arg());
      } else if (at(TokenKind::rparen)) {
        break;
      } else {
        fail("',' or ')' in argument list");
      }
    }
    return args;
  }

  OpArg op_arg() {
    OpArg a;
    if (at(TokenKind::identifier)) {
      Token t = advance();
      a.kind = OpArg::Kind::ident;
      a.name = t.text;
      a.text = t.text;
      a.span = t.span;
      return a;
    }
    bool neg = false;
    SourceSpan sp = cur().span;
    if (at(TokenKind::minus)) {
      neg = true;
      advance();
    }
    if (!at(TokenKind::number)) fail("an identifier or a number");
    Token t = advance();
    a.kind = OpArg::Kind::number;
    a.num = neg ? -t.num : t.num;
    a.text = neg ? "-" + t.text : t.text;
    a.span = neg ? sp : t.span;
    return a;
  }

  Bound bound() {
    Bound b;
    b.span = cur().span;
    if (at(TokenKind::minus)) {
      b.neg = true;
      advance();
    }
    if (at(TokenKind::kw_inf)) {
      advance();
      b.inf = true;
      b.value = b.neg ? -HUGE_VAL : HUGE_VAL;
      b.text = "inf";
    } else if (at(TokenKind::number)) {
      Token t = advance();
      b.value = b.neg ? -t.num : t.num;
      b.text = t.text;
    } else {
      fail("a number or 'inf'");
    }
    return b;
  }

  std::vector<Bound> bound_list() {
    std::vector<Bound> xs;
    xs.push_back(bound());
    while (at(TokenKind::comma)) {
      advance();
      xs.push_back(bound());
    }
    return xs;
  }

  IntervalSpec interval() {
    IntervalSpec iv;
    Token open = cur();
    if (at(TokenKind::lbracket)) {
      iv.lo_closed = true;
    } else if (at(TokenKind::lparen)) {
      iv.lo_closed = false;
    } else {
      fail("'[' or '('");
    }
    advance();
    iv.lo = bound();
    expect(TokenKind::comma, "','");
    iv.hi = bound();
    Token close = cur();
    if (at(TokenKind::rbracket)) {
      iv.hi_closed = true;
    } else if (at(TokenKind::rparen)) {
      iv.hi_closed = false;
    } else {
      fail("']' or ')'");
    }
    advance();
    iv.span = open.span;
    iv.span.length = close.span.column + close.span.length - open.span.column;
    return iv;
  }

  ValueNode value() {
    ValueNode v;
    v.span = cur().span;
    switch (cur().kind) {
      case TokenKind::kw_fn: {
        advance();
        v.kind = ValueNode::Kind::fn;
        expect(TokenKind::lparen, "'('");
        Token p = expect(TokenKind::identifier, "a parameter name");
        v.param = p.text;
        v.param_span = p.span;
        expect(TokenKind::rparen, "')'");
        v.body = expression();
        return v;
      }
      case TokenKind::kw_piecewise: {
        advance();
        v.kind = ValueNode::Kind::piecewise;
        expect(TokenKind::lparen, "'('");
        Token p = expect(TokenKind::identifier, "a parameter name");
        v.param = p.text;
        v.param_span = p.span;
        expect(TokenKind::rparen, "')'");
        expect(TokenKind::lbrace, "'{'");
        if (at(TokenKind::rbrace)) fail("an interval");
        while (!at(TokenKind::rbrace)) {
          PieceSpec piece;
          piece.interval = interval();
          expect(TokenKind::arrow, "'->'");
          piece.body = expression();
          expect(TokenKind::semicolon, "';'");
          v.pieces.push_back(std::move(piece));
        }
        advance();  // '}'
        return v;
      }
      case TokenKind::kw_tnorm:
      case TokenKind::kw_tconorm:
        return norm_ctor();
      case TokenKind::kw_uninorm:
        return uninorm_ctor();
      case TokenKind::kw_nullnorm:
        return nullnorm_ctor();
      case TokenKind::kw_monoid:
        return monoid_ctor();
      case TokenKind::kw_lattice:
        return lattice_ctor();
      case TokenKind::kw_indist:
        return indist_ctor();
      case TokenKind::kw_fuzzyset:
        return fuzzyset_ctor();
      case TokenKind::kw_vague:
        return vague_ctor();
      case TokenKind::minus:
      case TokenKind::number: {
        v.kind = ValueNode::Kind::number;
        OpArg a = op_arg();
        v.num = a.num;
        v.num_text = a.text;
        return v;
      }
      default:
        fail("a value");
    }
  }

  ValueNode opctor_base(const Token& head) {
    ValueNode v;
    v.kind = ValueNode::Kind::opctor;
    v.span = head.span;
    v.head = head.text;
    return v;
  }

  ValueNode norm_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    Token name = expect(TokenKind::identifier, "an operator name");
    v.sub_span = name.span;
    if (name.text == "gen") {
      v.sub = "gen";
      expect(TokenKind::lparen, "'('");
      v.args.push_back(op_arg());
      expect(TokenKind::rparen, "')'");
    } else {
      v.sub = name.text;
    }
    return v;
  }

  ValueNode uninorm_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    Token form = expect(TokenKind::identifier, "a uninorm form");
    v.sub = form.text;
    v.sub_span = form.span;
    expect(TokenKind::lparen, "'('");
    v.args = op_args();
    expect(TokenKind::rparen, "')'");
    return v;
  }

  ValueNode nullnorm_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    expect(TokenKind::lparen, "'('");
    v.args = op_args();
    expect(TokenKind::rparen, "')'");
    return v;
  }

  ValueNode monoid_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    if (at(TokenKind::kw_grid)) {
      Token g = advance();
      v.sub = "grid";
      v.sub_span = g.span;
      expect(TokenKind::lparen, "'('");
      Token n = expect(TokenKind::number, "a grid size");
      v.num2 = n.num;
      v.num2_text = n.text;
      expect(TokenKind::rparen, "')'");
      expect_word("with");
      v.args.push_back(op_arg());
      expect_word("identity");
      OpArg e = op_arg();
      if (e.kind != OpArg::Kind::number) fail("a number");
      v.num = e.num;
      v.num_text = e.text;
      return v;
    }
    Token form = expect_one_of({"set"}, "'grid' or 'set'");
    v.sub = form.text;
    v.sub_span = form.span;
    expect(TokenKind::lbrace, "'{'");
    v.list1 = bound_list();
    expect(TokenKind::rbrace, "'}'");
    expect_word("table");
    expect(TokenKind::lbrace, "'{'");
    v.list2 = bound_list();
    expect(TokenKind::rbrace, "'}'");
    expect_word("identity");
    OpArg e = op_arg();
    if (e.kind != OpArg::Kind::number) fail("a number");
    v.num = e.num;
    v.num_text = e.text;
    return v;
  }

  ValueNode lattice_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    Token form = expect_one_of({"chain", "boolean2"}, "'chain' or 'boolean2'");
    v.sub = form.text;
    v.sub_span = form.span;
    if (form.text == "chain") {
      expect(TokenKind::lparen, "'('");
      Token n = expect(TokenKind::number, "a chain length");
      v.num2 = n.num;
      v.num2_text = n.text;
      expect(TokenKind::rparen, "')'");
    }
    return v;
  }

  ValueNode indist_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    Token form = expect_one_of({"set"}, "'set'");
    v.sub = form.text;
    v.sub_span = form.span;
    expect(TokenKind::lbrace, "'{'");
    v.list1 = bound_list();
    expect(TokenKind::rbrace, "'}'");
    expect_word("table");
    expect(TokenKind::lbrace, "'{'");
    v.list2 = bound_list();
    expect(TokenKind::rbrace, "'}'");
    return v;
  }

  ValueNode fuzzyset_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    if (at(TokenKind::kw_fn)) {
      Token f = advance();
      v.sub = "fn";
      v.sub_span = f.span;
      expect(TokenKind::lparen, "'('");
      Token p = expect(TokenKind::identifier, "a parameter name");
      v.param = p.text;
      v.param_span = p.span;
      expect(TokenKind::rparen, "')'");
      v.body = expression();
      return v;
    }
    Token form = expect_one_of({"table", "compose"}, "'fn', 'table' or 'compose'");
    v.sub = form.text;
    v.sub_span = form.span;
    if (form.text == "table") {
      expect(TokenKind::lbrace, "'{'");
      v.list1 = bound_list();
      expect(TokenKind::rbrace, "'}'");
      return v;
    }
    {
      expect(TokenKind::lparen, "'('");
      expect_word("invgen");
      expect(TokenKind::lparen, "'('");
      v.args.push_back(op_arg());
      expect(TokenKind::rparen, "')'");
      expect(TokenKind::comma, "','");
      v.args.push_back(op_arg());
      expect(TokenKind::comma, "','");
      expect_word("gen");
      expect(TokenKind::lparen, "'('");
      v.args.push_back(op_arg());
      expect(TokenKind::rparen, "')'");
      if (at(TokenKind::comma)) {
        advance();
        v.args.push_back(op_arg());
      }
      expect(TokenKind::rparen, "')'");
      return v;
    }
  }

  ValueNode vague_ctor() {
    Token head = advance();
    ValueNode v = opctor_base(head);
    Token form = expect_one_of({"from"}, "'from'");
    v.sub = form.text;
    v.sub_span = form.span;
    expect(TokenKind::lparen, "'('");
    v.args = op_args();
    expect(TokenKind::rparen, "')'");
    return v;
  }

  // expr := term {("+"|"-") term}; term := factor {("*"|"/") factor};
  // factor := "-" factor | power; power := atom ["^" factor].
  Expr expression() {
    Expr lhs = term();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      char op = at(TokenKind::plus) ? '+' : '-';
      SourceSpan sp = advance().span;
      Expr rhs = term();
      Expr node;
      node.kind = Expr::Kind::binary;
      node.op = op;
      node.span = sp;
      node.args = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (at(TokenKind::star) || at(TokenKind::slash)) {
      char op = at(TokenKind::star) ? '*' : '/';
      SourceSpan sp = advance().span;
      Expr rhs = factor();
      Expr node;
      node.kind = Expr::Kind::binary;
      node.op = op;
      node.span = sp;
      node.args = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr factor() {
    if (at(TokenKind::minus)) {
      SourceSpan sp = advance().span;
      Expr node;
      node.kind = Expr::Kind::unary_minus;
      node.span = sp;
      node.args.push_back(factor());
      return node;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (at(TokenKind::caret)) {
      SourceSpan sp = advance().span;
      Expr node;
      node.kind = Expr::Kind::binary;
      node.op = '^';
      node.span = sp;
      node.args = {std::move(base), factor()};
      return node;
    }
    return base;
  }

  Expr atom() {
    Expr node;
    if (at(TokenKind::number)) {
      Token t = advance();
      node.kind = Expr::Kind::number;
      node.num = t.num;
      node.text = t.text;
      node.span = t.span;
      return node;
    }
    if (at(TokenKind::kw_inf)) {
      Token t = advance();
      node.kind = Expr::Kind::inf;
      node.span = t.span;
      return node;
    }
    if (at(TokenKind::lparen)) {
      SourceSpan sp = advance().span;
      node.kind = Expr::Kind::paren;
      node.span = sp;
      node.args.push_back(expression());
      expect(TokenKind::rparen, "')'");
      return node;
    }
    if (at(TokenKind::identifier)) {
      Token t = advance();
      node.span = t.span;
      node.name = t.text;
      if (at(TokenKind::lparen)) {
        advance();
        node.kind = Expr::Kind::call;
        node.args.push_back(expression());
        while (at(TokenKind::comma)) {
          advance();
          node.args.push_back(expression());
        }
        expect(TokenKind::rparen, "')'");
        return node;
      }
      node.kind = Expr::Kind::var;
      return node;
    }
    fail("an expression");
  }
};

}  // namespace

Program parse(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

Program parse_program(std::string_view text) { return parse(tokenize(text)); }

double eval_expr(const Expr& e, const std::string& var, double x) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.num;
    case Expr::Kind::inf:
      return HUGE_VAL;
    case Expr::Kind::var:
      if (e.name != var) throw NameError(e.span, "unknown name '" + e.name + "'");
      return x;
    case Expr::Kind::paren:
      return eval_expr(e.args[0], var, x);
    case Expr::Kind::unary_minus:
      return -eval_expr(e.args[0], var, x);
    case Expr::Kind::binary: {
      double a = eval_expr(e.args[0], var, x);
      double b = eval_expr(e.args[1], var, x);
      switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
      }
      throw InternalInvariantViolation("unknown operator in expression");
    }
    case Expr::Kind::call: {
      if (e.name == "ln" || e.name == "exp" || e.name == "sqrt" || e.name == "abs") {
        if (e.args.size() != 1) {
          throw TypeMismatch(e.span, "'" + e.name + "' takes one argument");
        }
        double a = eval_expr(e.args[0], var, x);
        if (e.name == "ln") return std::log(a);
        if (e.name == "exp") return std::exp(a);
        if (e.name == "sqrt") return std::sqrt(a);
        return std::fabs(a);
      }
      if (e.name == "min" || e.name == "max") {
        if (e.args.size() != 2) {
          throw TypeMismatch(e.span, "'" + e.name + "' takes two arguments");
        }
        double a = eval_expr(e.args[0], var, x);
        double b = eval_expr(e.args[1], var, x);
        return e.name == "min" ? std::fmin(a, b) : std::fmax(a, b);
      }
      throw NameError(e.span, "unknown function '" + e.name + "'");
    }
  }
  throw InternalInvariantViolation("unknown expression kind");
}

namespace {

// Token emitter with light spacing rules; the token content is what the
// round-trip guarantee covers, spacing is cosmetic.
class Printer {
 public:
  void tok(std::string_view t, bool ident_like = false) {
    bool suppress = out_.empty() || no_space_after_ || t == "," || t == ";" || t == ")" ||
                    t == "]";
    if ((t == "(" || t == "[") && prev_ident_) suppress = true;
    if (!suppress) out_ += ' ';
    out_ += t;
    no_space_after_ = (t == "(" || t == "[");
    prev_ident_ = ident_like;
  }
  void newline() {
    out_ += '\n';
    no_space_after_ = true;
    prev_ident_ = false;
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  bool no_space_after_ = true;
  bool prev_ident_ = false;
};

void print_expr(Printer& p, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      p.tok(e.text.empty() ? fmt(e.num) : e.text);
      return;
    case Expr::Kind::inf:
      p.tok("inf", true);
      return;
    case Expr::Kind::var:
      p.tok(e.name, true);
      return;
    case Expr::Kind::paren:
      p.tok("(");
      print_expr(p, e.args[0]);
      p.tok(")");
      return;
    case Expr::Kind::unary_minus:
      p.tok("-");
      print_expr(p, e.args[0]);
      return;
    case Expr::Kind::binary:
      print_expr(p, e.args[0]);
      p.tok(std::string(1, e.op));
      print_expr(p, e.args[1]);
      return;
    case Expr::Kind::call:
      p.tok(e.name, true);
      p.tok("(");
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) p.tok(",");
        print_expr(p, e.args[i]);
      }
      p.tok(")");
      return;
  }
}

void print_bound(Printer& p, const Bound& b) {
  if (b.neg) p.tok("-");
  p.tok(b.inf ? "inf" : b.text, b.inf);
}

void print_bound_list(Printer& p, const std::vector<Bound>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) p.tok(",");
    print_bound(p, xs[i]);
  }
}

void print_op_arg(Printer& p, const OpArg& a) {
  if (a.kind == OpArg::Kind::ident) {
    p.tok(a.name, true);
  } else if (!a.text.empty() && a.text[0] == '-') {
    p.tok("-");
    p.tok(a.text.substr(1));
  } else {
    p.tok(a.text.empty() ? fmt(a.num) : a.text);
  }
}

void print_op_args(Printer& p, const std::vector<OpArg>& args) {
  p.tok("(");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) p.tok(",");
    print_op_arg(p, args[i]);
  }
  p.tok(")");
}

void print_signed_number(Printer& p, const std::string& text, double v) {
  if (!text.empty() && text[0] == '-') {
    p.tok("-");
    p.tok(text.substr(1));
  } else {
    p.tok(text.empty() ? fmt(v) : text);
  }
}

void print_value(Printer& p, const ValueNode& v) {
  switch (v.kind) {
    case ValueNode::Kind::number:
      print_signed_number(p, v.num_text, v.num);
      return;
    case ValueNode::Kind::fn:
      p.tok("fn", true);
      p.tok("(");
      p.tok(v.param, true);
      p.tok(")");
      print_expr(p, v.body);
      return;
    case ValueNode::Kind::piecewise:
      p.tok("piecewise", true);
      p.tok("(");
      p.tok(v.param, true);
      p.tok(")");
      p.tok("{");
      for (const PieceSpec& piece : v.pieces) {
        p.tok(piece.interval.lo_closed ? "[" : "(");
        print_bound(p, piece.interval.lo);
        p.tok(",");
        print_bound(p, piece.interval.hi);
        p.tok(piece.interval.hi_closed ? "]" : ")");
        p.tok("->");
        print_expr(p, piece.body);
        p.tok(";");
      }
      p.tok("}");
      return;
    case ValueNode::Kind::opctor:
      p.tok(v.head, true);
      if (v.head == "tnorm" || v.head == "tconorm") {
        p.tok(v.sub, true);
        if (v.sub == "gen") print_op_args(p, v.args);
      } else if (v.head == "uninorm" || v.head == "vague") {
        p.tok(v.sub, true);
        print_op_args(p, v.args);
      } else if (v.head == "nullnorm") {
        print_op_args(p, v.args);
      } else if (v.head == "monoid") {
        if (v.sub == "grid") {
          p.tok("grid", true);
          p.tok("(");
          p.tok(v.num2_text);
          p.tok(")");
          p.tok("with", true);
          print_op_arg(p, v.args[0]);
          p.tok("identity", true);
          print_signed_number(p, v.num_text, v.num);
        } else {
          p.tok("set", true);
          p.tok("{");
          print_bound_list(p, v.list1);
          p.tok("}");
          p.tok("table", true);
          p.tok("{");
          print_bound_list(p, v.list2);
          p.tok("}");
          p.tok("identity", true);
          print_signed_number(p, v.num_text, v.num);
        }
      } else if (v.head == "lattice") {
        p.tok(v.sub, true);
        if (v.sub == "chain") {
          p.tok("(");
          p.tok(v.num2_text);
          p.tok(")");
        }
      } else if (v.head == "indist") {
        p.tok("set", true);
        p.tok("{");
        print_bound_list(p, v.list1);
        p.tok("}");
        p.tok("table", true);
        p.tok("{");
        print_bound_list(p, v.list2);
        p.tok("}");
      } else if (v.head == "fuzzyset") {
        if (v.sub == "fn") {
          p.tok("fn", true);
          p.tok("(");
          p.tok(v.param, true);
          p.tok(")");
          print_expr(p, v.body);
        } else if (v.sub == "table") {
          p.tok("table", true);
          p.tok("{");
          print_bound_list(p, v.list1);
          p.tok("}");
        } else {
          p.tok("compose", true);
          p.tok("(");
          p.tok("invgen", true);
          p.tok("(");
          print_op_arg(p, v.args[0]);
          p.tok(")");
          p.tok(",");
          print_op_arg(p, v.args[1]);
          p.tok(",");
          p.tok("gen", true);
          p.tok("(");
          print_op_arg(p, v.args[2]);
          p.tok(")");
          if (v.args.size() > 3) {
            p.tok(",");
            print_op_arg(p, v.args[3]);
          }
          p.tok(")");
        }
      }
      return;
  }
}

}  // namespace

std::string pretty_print(const Program& prog) {
  Printer p;
  for (const Stmt& s : prog.statements) {
    if (s.kind == Stmt::Kind::let) {
      p.tok("let", true);
      p.tok(s.let.name, true);
      p.tok("=");
      print_value(p, s.let.value);
    } else {
      p.tok("check", true);
      p.tok(s.check.head, true);
      print_op_args(p, s.check.args);
      if (s.check.domain) {
        p.tok("on", true);
        const Domain& d = *s.check.domain;
        if (d.kind == Domain::Kind::grid) {
          p.tok("grid", true);
          p.tok("(");
          p.tok(d.n_text);
          p.tok(")");
        } else {
          p.tok("samples", true);
          p.tok("{");
          print_bound_list(p, d.samples);
          p.tok("}");
        }
      }
    }
    p.tok(";");
    p.newline();
  }
  return p.take();
}

}  // namespace fuzzalg::dsl
