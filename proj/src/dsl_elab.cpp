#include <cctype>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>

#include "fuzzalg/dsl.hpp"
#include "fuzzalg/fuzzy_monoids.hpp"
#include "fuzzalg/report.hpp"
#include "fuzzalg/vague.hpp"

namespace fuzzalg::dsl {

namespace {

struct FnValue {
  std::string param;
  Expr body;
  SourceSpan span;
};

struct PieceValue {
  std::string param;
  std::vector<PieceSpec> pieces;
  SourceSpan span;
};

struct SigmaFn {
  std::function<double(double)> fn;
};

struct SigmaTable {
  std::vector<double> values;
  SourceSpan span;
};

struct SigmaCompose {
  MonotoneFunction h;
  std::function<ExtendedReal(ExtendedReal)> f;
  MonotoneFunction t;
  SigmaConvention conv;
};

using Value = std::variant<double, FnValue, PieceValue, TNorm, TConorm, Uninorm, Nullnorm,
                           Monoid, BoundedLattice, IndistinguishabilityOp, VagueOp, SigmaFn,
                           SigmaTable, SigmaCompose>;

const char* value_kind_name(const Value& v) {
  struct Visitor {
    const char* operator()(const double&) { return "number"; }
    const char* operator()(const FnValue&) { return "function"; }
    const char* operator()(const PieceValue&) { return "piecewise function"; }
    const char* operator()(const TNorm&) { return "t-norm"; }
    const char* operator()(const TConorm&) { return "t-conorm"; }
    const char* operator()(const Uninorm&) { return "uninorm"; }
    const char* operator()(const Nullnorm&) { return "nullnorm"; }
    const char* operator()(const Monoid&) { return "monoid"; }
    const char* operator()(const BoundedLattice&) { return "lattice"; }
    const char* operator()(const IndistinguishabilityOp&) { return "indistinguishability"; }
    const char* operator()(const VagueOp&) { return "vague operation"; }
    const char* operator()(const SigmaFn&) { return "fuzzy set"; }
    const char* operator()(const SigmaTable&) { return "fuzzy set"; }
    const char* operator()(const SigmaCompose&) { return "fuzzy set"; }
  };
  return std::visit(Visitor{}, v);
}

struct Env {
  std::map<std::string, Value> vars;
  TolerancePolicy pol;

  const Value* lookup(const std::string& name) const {
    auto it = vars.find(name);
    return it == vars.end() ? nullptr : &it->second;
  }
};

// --- expression validation (names and arities, positioned) ---------------

void validate_expr(const Expr& e, const std::string& param) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::inf:
      return;
    case Expr::Kind::var:
      if (e.name != param) throw NameError(e.span, "unknown name '" + e.name + "'");
      return;
    case Expr::Kind::paren:
    case Expr::Kind::unary_minus:
      validate_expr(e.args[0], param);
      return;
    case Expr::Kind::binary:
      validate_expr(e.args[0], param);
      validate_expr(e.args[1], param);
      return;
    case Expr::Kind::call: {
      std::size_t want;
      if (e.name == "ln" || e.name == "exp" || e.name == "sqrt" || e.name == "abs") {
        want = 1;
      } else if (e.name == "min" || e.name == "max") {
        want = 2;
      } else {
        throw NameError(e.span, "unknown function '" + e.name + "'");
      }
      if (e.args.size() != want) {
        throw TypeMismatch(e.span, "'" + e.name + "' takes " +
                                       std::string(want == 1 ? "one argument" : "two arguments"));
      }
      for (const Expr& a : e.args) validate_expr(a, param);
      return;
    }
  }
}

// --- piecewise helpers ----------------------------------------------------

std::string interval_str(const IntervalSpec& iv) {
  std::string s;
  s += iv.lo_closed ? '[' : '(';
  s += (iv.lo.neg ? "-" : "") + (iv.lo.inf ? std::string("inf") : iv.lo.text);
  s += ", ";
  s += (iv.hi.neg ? "-" : "") + (iv.hi.inf ? std::string("inf") : iv.hi.text);
  s += iv.hi_closed ? ']' : ')';
  return s;
}

void validate_tiling(const PieceValue& pw) {
  for (const PieceSpec& p : pw.pieces) {
    const IntervalSpec& iv = p.interval;
    bool degenerate_ok = iv.lo.value == iv.hi.value && iv.lo_closed && iv.hi_closed;
    if (!(iv.lo.value < iv.hi.value || degenerate_ok)) {
      throw DomainGap(iv.span, "empty interval " + interval_str(iv));
    }
  }
  for (std::size_t i = 1; i < pw.pieces.size(); ++i) {
    const IntervalSpec& prev = pw.pieces[i - 1].interval;
    const IntervalSpec& cur = pw.pieces[i].interval;
    std::string pair = interval_str(prev) + " and " + interval_str(cur);
    if (cur.lo.value > prev.hi.value) {
      throw DomainGap(cur.span, "gap between " + pair);
    }
    if (cur.lo.value < prev.hi.value) {
      throw DomainOverlap(cur.span, "overlap between " + pair);
    }
    if (prev.hi_closed && cur.lo_closed) {
      throw DomainOverlap(cur.span, fmt(cur.lo.value) + " is covered twice by " + pair);
    }
    if (!prev.hi_closed && !cur.lo_closed) {
      throw DomainGap(cur.span, fmt(cur.lo.value) + " is covered by neither of " + pair);
    }
  }
}

bool interval_contains(const IntervalSpec& iv, double x) {
  bool above = iv.lo_closed ? x >= iv.lo.value : x > iv.lo.value;
  bool below = iv.hi_closed ? x <= iv.hi.value : x < iv.hi.value;
  return above && below;
}

double eval_piecewise(const PieceValue& pw, double x) {
  for (const PieceSpec& p : pw.pieces) {
    if (interval_contains(p.interval, x)) return eval_expr(p.body, pw.param, x);
  }
  throw ConstraintViolation(at(pw.span) + "piecewise function: " + fmt(x) +
                            " is not covered by any interval");
}

std::function<double(double)> plain_callable(const Value& v) {
  if (const auto* fn = std::get_if<FnValue>(&v)) {
    FnValue f = *fn;
    return [f](double x) { return eval_expr(f.body, f.param, x); };
  }
  if (const auto* pw = std::get_if<PieceValue>(&v)) {
    PieceValue p = *pw;
    return [p](double x) { return eval_piecewise(p, x); };
  }
  return {};
}

// --- generators from scripted functions ------------------------------------

MonotoneFunction make_generator(const std::string& name,
                                const std::function<double(double)>& raw, SourceSpan span,
                                const TolerancePolicy& pol) {
  auto wrapped = [raw, name](double x) -> ExtendedReal {
    double v = raw(x);
    if (std::isnan(v)) {
      throw ConstraintViolation("generator " + name + ": value at " + fmt(x) +
                                " is not a number");
    }
    return ExtendedReal(v);
  };
  ExtendedReal f0 = wrapped(0.0);
  ExtendedReal f1 = wrapped(1.0);
  if (f0 == f1) {
    throw ConstraintViolation(at(span) + "generator " + name +
                              ": equal endpoint values, not strictly monotone");
  }
  Direction dir = f0 < f1 ? Direction::increasing : Direction::decreasing;
  try {
    return MonotoneFunction(dir, 0.0, 1.0, wrapped, std::nullopt, ClampRule::nearest_end, pol,
                            name);
  } catch (const ConstraintViolation& e) {
    throw ConstraintViolation(at(span) + e.what());
  }
}

// --- typed extraction -----------------------------------------------------

[[noreturn]] void wrong_type(const OpArg& a, const Value& v, const std::string& want) {
  throw TypeMismatch(a.span, "'" + a.name + "' is a " + value_kind_name(v) + ", expected " +
                                 want);
}

const Value& need_defined(const Env& env, const OpArg& a) {
  if (a.kind != OpArg::Kind::ident) {
    throw TypeMismatch(a.span, "expected a name, found a number");
  }
  const Value* v = env.lookup(a.name);
  if (!v) throw NameError(a.span, "unknown name '" + a.name + "'");
  return *v;
}

double need_number(const Env& env, const OpArg& a) {
  if (a.kind == OpArg::Kind::number) return a.num;
  const Value& v = need_defined(env, a);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  wrong_type(a, v, "a number");
}

std::optional<TNorm> builtin_tnorm(const std::string& name) {
  if (name == "min") return TNorm::minimum();
  if (name == "product") return TNorm::product();
  if (name == "lukasiewicz") return TNorm::lukasiewicz();
  if (name == "drastic") return TNorm::drastic();
  return std::nullopt;
}

std::optional<TConorm> builtin_tconorm(const std::string& name) {
  if (name == "max") return TConorm::maximum();
  if (name == "probsum") return TConorm::probabilistic_sum();
  if (name == "lukasiewicz") return TConorm::lukasiewicz();
  if (name == "drastic") return TConorm::drastic();
  return std::nullopt;
}

TNorm need_tnorm(const Env& env, const OpArg& a) {
  if (a.kind == OpArg::Kind::ident) {
    if (const Value* v = env.lookup(a.name)) {
      if (const auto* t = std::get_if<TNorm>(v)) return *t;
      wrong_type(a, *v, "a t-norm");
    }
    if (auto t = builtin_tnorm(a.name)) return *t;
    throw NameError(a.span, "unknown t-norm '" + a.name + "'");
  }
  throw TypeMismatch(a.span, "expected a t-norm, found a number");
}

TConorm need_tconorm(const Env& env, const OpArg& a) {
  if (a.kind == OpArg::Kind::ident) {
    if (const Value* v = env.lookup(a.name)) {
      if (const auto* s = std::get_if<TConorm>(v)) return *s;
      wrong_type(a, *v, "a t-conorm");
    }
    if (auto s = builtin_tconorm(a.name)) return *s;
    throw NameError(a.span, "unknown t-conorm '" + a.name + "'");
  }
  throw TypeMismatch(a.span, "expected a t-conorm, found a number");
}

Uninorm need_uninorm(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (const auto* u = std::get_if<Uninorm>(&v)) return *u;
  wrong_type(a, v, "a uninorm");
}

Nullnorm need_nullnorm(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (const auto* f = std::get_if<Nullnorm>(&v)) return *f;
  wrong_type(a, v, "a nullnorm");
}

Monoid need_monoid(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (const auto* m = std::get_if<Monoid>(&v)) return *m;
  wrong_type(a, v, "a monoid");
}

IndistinguishabilityOp need_indist(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (const auto* e = std::get_if<IndistinguishabilityOp>(&v)) return *e;
  wrong_type(a, v, "an indistinguishability operator");
}

VagueOp need_vague(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (const auto* w = std::get_if<VagueOp>(&v)) return *w;
  wrong_type(a, v, "a vague operation");
}

MonotoneFunction need_generator(const Env& env, const OpArg& a, const TolerancePolicy& pol) {
  const Value& v = need_defined(env, a);
  if (const auto* pw = std::get_if<PieceValue>(&v)) {
    PieceValue p = *pw;
    if (p.pieces.front().interval.lo.value != 0.0 ||
        p.pieces.back().interval.hi.value != 1.0) {
      throw ConstraintViolation(at(a.span) + "generator " + a.name +
                                ": intervals must cover [0, 1] exactly");
    }
    return make_generator(a.name, [p](double x) { return eval_piecewise(p, x); }, a.span, pol);
  }
  if (const auto* fn = std::get_if<FnValue>(&v)) {
    FnValue f = *fn;
    return make_generator(a.name, [f](double x) { return eval_expr(f.body, f.param, x); },
                          a.span, pol);
  }
  wrong_type(a, v, "a function usable as a generator");
}

// Extended-real unary map: a scripted function or a builtin name.
std::function<ExtendedReal(ExtendedReal)> need_unary(const Env& env, const OpArg& a) {
  if (a.kind != OpArg::Kind::ident) {
    throw TypeMismatch(a.span, "expected a function name, found a number");
  }
  if (const Value* v = env.lookup(a.name)) {
    std::function<double(double)> raw = plain_callable(*v);
    if (!raw) wrong_type(a, *v, "a function");
    std::string name = a.name;
    return [raw, name](ExtendedReal x) -> ExtendedReal {
      double out = raw(x.as_double());
      if (std::isnan(out)) {
        throw ConstraintViolation("function " + name + ": value at " + fmt(x.as_double()) +
                                  " is not a number");
      }
      return ExtendedReal(out);
    };
  }
  std::string name = a.name;
  double (*impl)(double) = nullptr;
  if (name == "sqrt") impl = [](double x) { return std::sqrt(x); };
  if (name == "ln") impl = [](double x) { return std::log(x); };
  if (name == "exp") impl = [](double x) { return std::exp(x); };
  if (name == "abs") impl = [](double x) { return std::fabs(x); };
  if (!impl) throw NameError(a.span, "unknown function '" + name + "'");
  return [impl, name](ExtendedReal x) -> ExtendedReal {
    double out = impl(x.as_double());
    if (std::isnan(out)) {
      throw ConstraintViolation("function " + name + ": value at " + fmt(x.as_double()) +
                                " is not a number");
    }
    return ExtendedReal(out);
  };
}

// Binary operator slot that accepts any connective-like value or an
// unambiguous builtin name.
BinaryOp need_binary_surface(const Env& env, const OpArg& a) {
  if (a.kind != OpArg::Kind::ident) {
    throw TypeMismatch(a.span, "expected an operator name, found a number");
  }
  if (const Value* v = env.lookup(a.name)) {
    if (const auto* t = std::get_if<TNorm>(v)) return t->as_binary_op();
    if (const auto* s = std::get_if<TConorm>(v)) return s->as_binary_op();
    if (const auto* u = std::get_if<Uninorm>(v)) return u->as_binary_op();
    if (const auto* f = std::get_if<Nullnorm>(v)) return f->as_binary_op();
    wrong_type(a, *v, "a binary operator");
  }
  if (a.name == "min") return TNorm::minimum().as_binary_op();
  if (a.name == "product") return TNorm::product().as_binary_op();
  if (a.name == "max") return TConorm::maximum().as_binary_op();
  if (a.name == "probsum") return TConorm::probabilistic_sum().as_binary_op();
  if (a.name == "lukasiewicz" || a.name == "drastic") {
    throw NameError(a.span, "ambiguous name '" + a.name +
                                "': bind it with 'let ... = tnorm " + a.name +
                                "' or 'let ... = tconorm " + a.name + "' first");
  }
  throw NameError(a.span, "unknown operator '" + a.name + "'");
}

void need_arity(const std::vector<OpArg>& args, std::size_t n, SourceSpan span,
                const std::string& what) {
  if (args.size() != n) {
    throw TypeMismatch(span, what + " takes " + std::to_string(n) + " argument" +
                                 (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
  }
}

std::vector<double> finite_values(const std::vector<Bound>& xs, const std::string& what) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Bound& b : xs) {
    if (b.inf) throw TypeMismatch(b.span, what + " entries must be finite");
    out.push_back(b.value);
  }
  return out;
}

// --- value elaboration ------------------------------------------------------

Value elaborate_value(const Env& env, const std::string& name, const ValueNode& v) {
  const TolerancePolicy& pol = env.pol;
  switch (v.kind) {
    case ValueNode::Kind::number:
      return v.num;
    case ValueNode::Kind::fn: {
      validate_expr(v.body, v.param);
      return FnValue{v.param, v.body, v.span};
    }
    case ValueNode::Kind::piecewise: {
      PieceValue pw{v.param, v.pieces, v.span};
      for (const PieceSpec& p : pw.pieces) validate_expr(p.body, pw.param);
      validate_tiling(pw);
      return pw;
    }
    case ValueNode::Kind::opctor:
      break;
  }

  try {
    if (v.head == "tnorm") {
      if (v.sub == "gen") {
        need_arity(v.args, 1, v.sub_span, "tnorm gen");
        return TNorm::from_generator(need_generator(env, v.args[0], pol), pol);
      }
      if (auto t = builtin_tnorm(v.sub)) return *t;
      throw NameError(v.sub_span, "unknown t-norm '" + v.sub + "'");
    }
    if (v.head == "tconorm") {
      if (v.sub == "gen") {
        need_arity(v.args, 1, v.sub_span, "tconorm gen");
        return TConorm::from_generator(need_generator(env, v.args[0], pol), pol);
      }
      if (auto s = builtin_tconorm(v.sub)) return *s;
      throw NameError(v.sub_span, "unknown t-conorm '" + v.sub + "'");
    }
    if (v.head == "uninorm") {
      if (v.sub == "umin" || v.sub == "umax") {
        need_arity(v.args, 3, v.sub_span, "uninorm " + v.sub);
        TNorm t = need_tnorm(env, v.args[0]);
        TConorm s = need_tconorm(env, v.args[1]);
        double e = need_number(env, v.args[2]);
        return v.sub == "umin" ? Uninorm::u_min(t, s, e, pol) : Uninorm::u_max(t, s, e, pol);
      }
      if (v.sub == "idem") {
        if (v.args.size() != 2 && v.args.size() != 3) {
          throw TypeMismatch(v.sub_span, "uninorm idem takes 2 or 3 arguments, got " +
                                             std::to_string(v.args.size()));
        }
        MonotoneFunction g = need_generator(env, v.args[0], pol);
        double e = need_number(env, v.args[1]);
        TieRule tie = TieRule::take_min;
        if (v.args.size() == 3) {
          const OpArg& t = v.args[2];
          if (t.kind != OpArg::Kind::ident || (t.name != "min" && t.name != "max")) {
            throw TypeMismatch(t.span, "tie rule must be 'min' or 'max'");
          }
          tie = t.name == "min" ? TieRule::take_min : TieRule::take_max;
        }
        return Uninorm::idempotent(g, e, tie, pol);
      }
      if (v.sub == "rep") {
        need_arity(v.args, 3, v.sub_span, "uninorm rep");
        MonotoneFunction h = need_generator(env, v.args[0], pol);
        double e = need_number(env, v.args[1]);
        const OpArg& b = v.args[2];
        if (b.kind != OpArg::Kind::ident ||
            (b.name != "conjunctive" && b.name != "disjunctive")) {
          throw TypeMismatch(b.span, "boundary must be 'conjunctive' or 'disjunctive'");
        }
        Boundary boundary =
            b.name == "conjunctive" ? Boundary::conjunctive : Boundary::disjunctive;
        return Uninorm::representable(h, e, boundary, pol);
      }
      if (v.sub == "cosmin") {
        need_arity(v.args, 6, v.sub_span, "uninorm cosmin");
        return Uninorm::cos_min(need_tnorm(env, v.args[0]), need_number(env, v.args[1]),
                                need_tnorm(env, v.args[2]), need_number(env, v.args[3]),
                                need_uninorm(env, v.args[4]), need_number(env, v.args[5]),
                                CosMinCorner::take_lambda, pol);
      }
      if (v.sub == "cosmax") {
        need_arity(v.args, 6, v.sub_span, "uninorm cosmax");
        return Uninorm::cos_max(need_uninorm(env, v.args[0]), need_number(env, v.args[1]),
                                need_number(env, v.args[2]), need_tconorm(env, v.args[3]),
                                need_number(env, v.args[4]), need_tconorm(env, v.args[5]),
                                CosMaxCorner::take_omega, pol);
      }
      throw NameError(v.sub_span, "unknown uninorm form '" + v.sub + "'");
    }
    if (v.head == "nullnorm") {
      need_arity(v.args, 3, v.span, "nullnorm");
      return Nullnorm(need_tconorm(env, v.args[0]), need_number(env, v.args[1]),
                      need_tnorm(env, v.args[2]), pol);
    }
    if (v.head == "monoid") {
      if (v.sub == "grid") {
        int n = static_cast<int>(v.num2);
        if (v.num2 != n || n < 2) {
          throw TypeMismatch(v.sub_span, "grid size must be an integer >= 2");
        }
        BinaryOp op = need_binary_surface(env, v.args[0]);
        return Monoid::from_op(Carrier::grid(n), op, v.num, pol);
      }
      std::vector<double> values = finite_values(v.list1, "carrier");
      Carrier c = Carrier::finite(values, {}, pol);
      std::size_t n = values.size();
      std::vector<double> entries = finite_values(v.list2, "table");
      if (entries.size() != n * n) {
        throw TypeMismatch(v.sub_span, "table needs " + std::to_string(n * n) +
                                           " entries, got " + std::to_string(entries.size()));
      }
      std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto idx = c.index_of(entries[i * n + j], pol);
          if (!idx) {
            throw TypeMismatch(v.list2[i * n + j].span,
                               "table entry " + fmt(entries[i * n + j]) +
                                   " is not a carrier element");
          }
          table[i][j] = *idx;
        }
      }
      auto e_idx = c.index_of(v.num, pol);
      if (!e_idx) {
        throw TypeMismatch(v.sub_span, "identity " + fmt(v.num) + " is not a carrier element");
      }
      return Monoid::from_table(std::move(c), std::move(table), *e_idx, pol);
    }
    if (v.head == "lattice") {
      if (v.sub == "chain") {
        int n = static_cast<int>(v.num2);
        if (v.num2 != n || n < 1) {
          throw TypeMismatch(v.sub_span, "chain length must be a positive integer");
        }
        return BoundedLattice::chain(static_cast<std::size_t>(n));
      }
      return BoundedLattice::boolean2();
    }
    if (v.head == "indist") {
      std::vector<double> values = finite_values(v.list1, "carrier");
      Carrier c = Carrier::finite(values, {}, pol);
      std::size_t n = values.size();
      std::vector<double> entries = finite_values(v.list2, "table");
      if (entries.size() != n * n) {
        throw TypeMismatch(v.sub_span, "table needs " + std::to_string(n * n) +
                                           " entries, got " + std::to_string(entries.size()));
      }
      std::vector<std::vector<double>> rows(n);
      for (std::size_t i = 0; i < n; ++i) {
        rows[i].assign(entries.begin() + static_cast<std::ptrdiff_t>(i * n),
                       entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      }
      return IndistinguishabilityOp::from_table(name, std::move(c), rows, pol);
    }
    if (v.head == "fuzzyset") {
      if (v.sub == "fn") {
        validate_expr(v.body, v.param);
        FnValue f{v.param, v.body, v.span};
        return SigmaFn{[f](double x) { return eval_expr(f.body, f.param, x); }};
      }
      if (v.sub == "table") {
        return SigmaTable{finite_values(v.list1, "membership table"), v.sub_span};
      }
      SigmaConvention conv = SigmaConvention::direct;
      if (v.args.size() == 4) {
        const OpArg& c = v.args[3];
        if (c.kind != OpArg::Kind::ident || (c.name != "direct" && c.name != "reflected")) {
          throw TypeMismatch(c.span, "convention must be 'direct' or 'reflected'");
        }
        if (c.name == "reflected") conv = SigmaConvention::reflected;
      }
      return SigmaCompose{need_generator(env, v.args[0], pol), need_unary(env, v.args[1]),
                          need_generator(env, v.args[2], pol), conv};
    }
    if (v.head == "vague") {
      need_arity(v.args, 2, v.sub_span, "vague from");
      return vague_from_monoid(need_indist(env, v.args[0]), need_monoid(env, v.args[1]), pol);
    }
  } catch (const ConstraintViolation& e) {
    std::string msg = e.what();
    // Nested constructors may already carry a position prefix.
    if (!msg.empty() && std::isdigit(static_cast<unsigned char>(msg[0]))) throw;
    throw ConstraintViolation(at(v.span) + msg);
  }
  throw InternalInvariantViolation("unhandled constructor head " + v.head);
}

// Existence and rough type check at elaboration time; the carrier binding
// happens when the check runs.
void require_sigma_value(const Env& env, const OpArg& a) {
  const Value& v = need_defined(env, a);
  if (std::holds_alternative<SigmaFn>(v) || std::holds_alternative<SigmaTable>(v) ||
      std::holds_alternative<SigmaCompose>(v) || std::holds_alternative<FnValue>(v) ||
      std::holds_alternative<PieceValue>(v)) {
    return;
  }
  wrong_type(a, v, "a fuzzy set");
}

FuzzySubset materialize_sigma(const Env& env, const OpArg& a, const Carrier& carrier) {
  const Value& v = need_defined(env, a);
  const TolerancePolicy& pol = env.pol;
  if (const auto* sf = std::get_if<SigmaFn>(&v)) {
    return FuzzySubset::from_fn(a.name, carrier, sf->fn, pol);
  }
  if (const auto* st = std::get_if<SigmaTable>(&v)) {
    if (st->values.size() != carrier.size()) {
      throw TypeMismatch(a.span, "membership table for '" + a.name + "' has " +
                                     std::to_string(st->values.size()) +
                                     " entries for a carrier of size " +
                                     std::to_string(carrier.size()));
    }
    return FuzzySubset::from_table(a.name, carrier, st->values, pol);
  }
  if (const auto* sc = std::get_if<SigmaCompose>(&v)) {
    return sigma_from_generators(sc->h, sc->f, sc->t, sc->conv, carrier, pol);
  }
  if (std::function<double(double)> raw = plain_callable(v)) {
    return FuzzySubset::from_fn(a.name, carrier, raw, pol);
  }
  wrong_type(a, v, "a fuzzy set");
}

// --- check elaboration ------------------------------------------------------

std::string render_witness(const ConditionResult& c, bool identity) {
  if (!c.witness) return c.info;
  const Witness& w = *c.witness;
  if (identity && !w.point.empty()) return "sigma(" + fmt(w.point[0]) + ")=" + fmt(w.lhs);
  return w.str();
}

std::vector<CheckLine> lines_from_report(const CheckReport& report, const std::string& prefix) {
  std::vector<CheckLine> lines;
  for (const ConditionResult& c : report.conditions) {
    CheckLine line;
    line.identity_condition = c.name == "identity";
    line.name = line.identity_condition ? "identity-condition" : prefix + "-" + c.name;
    line.pass = c.pass;
    if (!c.pass) line.witness = render_witness(c, line.identity_condition);
    lines.push_back(std::move(line));
  }
  return lines;
}

int checked_grid_size(const Domain& d) {
  if (d.n < 2) throw TypeMismatch(d.span, "grid size must be an integer >= 2");
  return d.n;
}

PreparedCheck elaborate_check(const Env& env, const CheckStmt& st) {
  const TolerancePolicy pol = env.pol;
  PreparedCheck out;
  out.head = st.head;

  if (st.head == "usubnorm") {
    need_arity(st.args, 3, st.head_span, "usubnorm");
    int n = 101;
    if (st.domain) {
      if (st.domain->kind != Domain::Kind::grid) {
        throw TypeMismatch(st.domain->span, "usubnorm runs on a grid domain");
      }
      n = checked_grid_size(*st.domain);
    }
    require_sigma_value(env, st.args[0]);
    Uninorm u = need_uninorm(env, st.args[1]);
    TNorm t = need_tnorm(env, st.args[2]);
    // Copy what the run needs; the environment itself is not captured.
    Env frozen = env;
    OpArg sigma_arg = st.args[0];
    out.execute = [frozen, sigma_arg, u, t, n, pol]() {
      Carrier grid = Carrier::grid(n);
      FuzzySubset sigma = materialize_sigma(frozen, sigma_arg, grid);
      Monoid m = Monoid::from_op(grid, t.as_binary_op(), 1.0, pol);
      return lines_from_report(check_u_fuzzy_submonoid(u, m, sigma, pol), "usubnorm");
    };
    return out;
  }

  if (st.head == "fsubmonoid") {
    need_arity(st.args, 3, st.head_span, "fsubmonoid");
    if (st.domain) {
      throw TypeMismatch(st.domain->span, "fsubmonoid runs on the monoid's own carrier");
    }
    require_sigma_value(env, st.args[0]);
    Nullnorm f = need_nullnorm(env, st.args[1]);
    Monoid m = need_monoid(env, st.args[2]);
    Env frozen = env;
    OpArg sigma_arg = st.args[0];
    out.execute = [frozen, sigma_arg, f, m, pol]() {
      FuzzySubset sigma = materialize_sigma(frozen, sigma_arg, m.carrier());
      return lines_from_report(check_f_fuzzy_submonoid(f, m, sigma, pol), "fsubmonoid");
    };
    return out;
  }

  if (st.head == "subadditive") {
    need_arity(st.args, 1, st.head_span, "subadditive");
    std::function<ExtendedReal(ExtendedReal)> f = need_unary(env, st.args[0]);
    std::vector<ExtendedReal> samples;
    if (st.domain && st.domain->kind == Domain::Kind::samples) {
      for (const Bound& b : st.domain->samples) samples.emplace_back(b.value);
    } else {
      int n = st.domain ? checked_grid_size(*st.domain) : 101;
      Carrier g = Carrier::grid(n);
      for (double x : g.values()) samples.emplace_back(x);
    }
    out.execute = [f, samples, pol]() {
      SubadditiveReport r = subadditive_on(f, samples, pol);
      CheckLine line;
      line.name = "subadditive";
      line.pass = r.subadditive;
      if (!r.subadditive && r.witness) line.witness = r.witness->str();
      return std::vector<CheckLine>{line};
    };
    return out;
  }

  if (st.head == "vaguemonoid") {
    need_arity(st.args, 3, st.head_span, "vaguemonoid");
    if (st.domain) {
      throw TypeMismatch(st.domain->span, "vaguemonoid runs on the carrier of its operands");
    }
    BinaryOp a = need_binary_surface(env, st.args[0]);
    IndistinguishabilityOp e = need_indist(env, st.args[1]);
    VagueOp v = need_vague(env, st.args[2]);
    out.execute = [a, e, v, pol]() {
      std::vector<CheckLine> lines =
          lines_from_report(check_vague_binary(a, e, v, pol), "vaguemonoid");
      std::vector<CheckLine> more =
          lines_from_report(check_vague_monoid(a, e, v, pol), "vaguemonoid");
      for (CheckLine& line : more) {
        // The vague identity is an existence condition, not a sigma(e) = 1
        // condition; report it under the check's own prefix.
        if (line.identity_condition) {
          line.identity_condition = false;
          line.name = "vaguemonoid-identity";
        }
        lines.push_back(std::move(line));
      }
      return lines;
    };
    return out;
  }

  throw NameError(st.head_span, "unknown check '" + st.head + "'");
}

}  // namespace

CheckedProgram elaborate(const Program& p, const TolerancePolicy& pol) {
  Env env;
  env.pol = pol;
  CheckedProgram out;
  for (const Stmt& s : p.statements) {
    if (s.kind == Stmt::Kind::let) {
      if (env.vars.count(s.let.name)) {
        throw NameError(s.let.name_span, "redefinition of '" + s.let.name + "'");
      }
      env.vars.emplace(s.let.name, elaborate_value(env, s.let.name, s.let.value));
      out.defined.push_back(s.let.name);
    } else {
      out.checks.push_back(elaborate_check(env, s.check));
    }
  }
  return out;
}

std::vector<BinaryOp> script_surfaces(const Program& p, const TolerancePolicy& pol) {
  Env env;
  env.pol = pol;
  std::vector<BinaryOp> out;
  for (const Stmt& s : p.statements) {
    if (s.kind != Stmt::Kind::let) continue;
    if (env.vars.count(s.let.name)) {
      throw NameError(s.let.name_span, "redefinition of '" + s.let.name + "'");
    }
    auto inserted =
        env.vars.emplace(s.let.name, elaborate_value(env, s.let.name, s.let.value)).first;
    const Value& value = inserted->second;
    BinaryOp op;
    if (const TNorm* t = std::get_if<TNorm>(&value)) {
      op = t->as_binary_op();
    } else if (const TConorm* sc = std::get_if<TConorm>(&value)) {
      op = sc->as_binary_op();
    } else if (const Uninorm* u = std::get_if<Uninorm>(&value)) {
      op = u->as_binary_op();
    } else if (const Nullnorm* f = std::get_if<Nullnorm>(&value)) {
      op = f->as_binary_op();
    } else {
      continue;
    }
    op.name = s.let.name;
    out.push_back(std::move(op));
  }
  return out;
}

bool ProgramResult::run_pass(bool strict_identity) const {
  for (const CheckLine& line : lines) {
    if (line.pass) continue;
    if (line.identity_condition && !strict_identity) continue;
    return false;
  }
  return true;
}

ProgramResult run_program(const Program& p, const RunOptions& opt) {
  CheckedProgram cp = elaborate(p, opt.pol);
  ProgramResult result;
  for (const PreparedCheck& check : cp.checks) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckLine> lines = check.execute();
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    for (CheckLine& line : lines) {
      line.ms = ms / static_cast<double>(lines.size());
      result.lines.push_back(std::move(line));
    }
  }
  return result;
}

}  // namespace fuzzalg::dsl
