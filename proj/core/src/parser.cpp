// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ctlspec {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(std::string_view s) {
    skip_ws();
    if (text.substr(pos, s.size()) != s) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view s) {
    if (!try_consume(s)) fail("expected '" + std::string(s) + "'");
  }

  bool ident_ahead() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  // IDENT := [A-Za-z_][A-Za-z0-9_]* with an optional trailing prime.
  std::string ident() {
    skip_ws();
    if (!ident_ahead()) fail("expected identifier");
    std::string out;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    if (pos < text.size() && text[pos] == '\'') {
      out += '\'';
      advance();
    }
    return out;
  }

  // Keyword match without consuming identifier prefixes of longer names.
  bool keyword_ahead(std::string_view kw) {
    skip_ws();
    if (text.substr(pos, kw.size()) != kw) return false;
    std::size_t after = pos + kw.size();
    if (after < text.size()) {
      char c = text[after];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
        return false;
    }
    return true;
  }

  bool try_keyword(std::string_view kw) {
    if (!keyword_ahead(kw)) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }

  Int integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected number");
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      advance();
    }
    return Int(digits);
  }
};

// Linear expressions are handled with rational coefficients and cleared to
// integers per atom.
struct RatTerm {
  Rat constant{};
  std::map<VarId, Rat> coeffs;

  void add(VarId v, const Rat& c) {
    Rat next = coeffs.count(v) ? coeffs[v] + c : c;
    if (next == 0)
      coeffs.erase(v);
    else
      coeffs[v] = next;
  }
  void add(const RatTerm& o, const Rat& scale) {
    constant += o.constant * scale;
    for (const auto& [v, c] : o.coeffs) add(v, c * scale);
  }
};

struct ConstraintParser {
  Lexer& lx;
  const std::map<std::string, VarId>& vars;

  Rat number() {
    Int num = lx.integer();
    if (lx.try_consume("/")) {
      Int den = lx.integer();
      if (den == 0) lx.fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  // factor := number ['*'? IDENT] | IDENT
  RatTerm factor() {
    RatTerm t;
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat n = number();
      lx.try_consume("*");
      if (lx.ident_ahead()) {
        t.add(var(), n);
      } else {
        t.constant = n;
      }
    } else {
      t.add(var(), Rat(1));
    }
    return t;
  }

  VarId var() {
    int line = lx.line, col = lx.col;
    std::string name = lx.ident();
    auto it = vars.find(name);
    if (it == vars.end())
      throw ParseError("unknown variable '" + name + "'", line, col);
    return it->second;
  }

  RatTerm expr() {
    RatTerm t;
    bool neg = false;
    if (lx.try_consume("-"))
      neg = true;
    else
      lx.try_consume("+");
    t.add(factor(), neg ? Rat(-1) : Rat(1));
    while (true) {
      if (lx.try_consume("+"))
        t.add(factor(), Rat(1));
      else if (lx.try_consume("-"))
        t.add(factor(), Rat(-1));
      else
        break;
    }
    return t;
  }

  // relation := expr (<=|<|>=|>|=) expr, normalized to p <= 0 / p < 0.
  void relation(std::vector<AtomicConstraint>& out) {
    RatTerm lhs = expr();
    enum { LE, LT, GE, GT, EQ } rel;
    if (lx.try_consume("<="))
      rel = LE;
    else if (lx.try_consume(">="))
      rel = GE;
    else if (lx.try_consume("<"))
      rel = LT;
    else if (lx.try_consume(">"))
      rel = GT;
    else if (lx.try_consume("="))
      rel = EQ;
    else
      lx.fail("expected relator");
    RatTerm rhs = expr();

    auto emit = [&](const RatTerm& a, const RatTerm& b, RelOp op) {
      RatTerm diff = a;
      diff.add(b, Rat(-1));
      Int den = boost::multiprecision::denominator(diff.constant);
      for (const auto& [v, c] : diff.coeffs)
        den = lcm_int(den, boost::multiprecision::denominator(c));
      AtomicConstraint atom;
      atom.op = op;
      Rat k = diff.constant * den;
      atom.term.constant = boost::multiprecision::numerator(k);
      for (const auto& [v, c] : diff.coeffs) {
        Rat q = c * den;
        atom.term.set_coeff(v, boost::multiprecision::numerator(q));
      }
      out.push_back(std::move(atom));
    };
    switch (rel) {
      case LE:
        emit(lhs, rhs, RelOp::NonStrict);
        break;
      case LT:
        emit(lhs, rhs, RelOp::Strict);
        break;
      case GE:
        emit(rhs, lhs, RelOp::NonStrict);
        break;
      case GT:
        emit(rhs, lhs, RelOp::Strict);
        break;
      case EQ:
        emit(lhs, rhs, RelOp::NonStrict);
        emit(rhs, lhs, RelOp::NonStrict);
        break;
    }
  }

  Constraint conjunction() {
    std::vector<AtomicConstraint> atoms;
    if (lx.try_keyword("true")) return Constraint::make(std::move(atoms));
    relation(atoms);
    while (lx.try_consume(",")) relation(atoms);
    return Constraint::make(std::move(atoms));
  }
};

struct CtlParser {
  Lexer& lx;

  CtlRef formula() {
    if (lx.try_keyword("true")) return CtlFormula::truth();
    if (lx.try_keyword("not")) return unary(&CtlFormula::mk_not);
    if (lx.try_keyword("and")) return binary(&CtlFormula::mk_and);
    if (lx.try_keyword("ex")) return unary(&CtlFormula::ex);
    if (lx.try_keyword("eu")) return binary(&CtlFormula::eu);
    if (lx.try_keyword("af")) return unary(&CtlFormula::af);
    if (lx.try_keyword("ef")) return unary(&CtlFormula::ef);
    if (lx.try_keyword("eg")) return unary(&CtlFormula::eg);
    if (lx.ident_ahead()) return CtlFormula::elem(lx.ident());
    lx.fail("expected CTL formula");
  }

  CtlRef unary(CtlRef (*mk)(CtlRef)) {
    lx.expect("(");
    CtlRef f = formula();
    lx.expect(")");
    return mk(std::move(f));
  }

  CtlRef binary(CtlRef (*mk)(CtlRef, CtlRef)) {
    lx.expect("(");
    CtlRef l = formula();
    lx.expect(",");
    CtlRef r = formula();
    lx.expect(")");
    return mk(std::move(l), std::move(r));
  }
};

}  // namespace

Constraint parse_constraint(std::string_view text,
                            const std::map<std::string, VarId>& vars) {
  Lexer lx{text};
  ConstraintParser cp{lx, vars};
  Constraint c = cp.conjunction();
  if (!lx.eof()) lx.fail("trailing input after constraint");
  return c;
}

SystemSpec parse_spec(std::string_view text) {
  Lexer lx{text};
  SystemSpec spec;

  lx.expect("system");
  spec.name = lx.ident();
  lx.expect(";");

  lx.expect("vars");
  spec.schema.names.push_back(lx.ident());
  while (lx.try_consume(",")) spec.schema.names.push_back(lx.ident());
  lx.expect(";");

  std::map<std::string, VarId> state_vars, trans_vars;
  for (std::size_t i = 0; i < spec.schema.names.size(); ++i) {
    const std::string& n = spec.schema.names[i];
    if (state_vars.count(n))
      lx.fail("duplicate variable '" + n + "'");
    state_vars[n] = static_cast<VarId>(i);
    trans_vars[n] = static_cast<VarId>(i);
    trans_vars[n + "'"] =
        static_cast<VarId>(i + spec.schema.names.size());
  }

  if (!lx.keyword_ahead("init")) lx.fail("expected 'init'");
  while (lx.try_keyword("init")) {
    ConstraintParser cp{lx, state_vars};
    spec.inits.push_back(cp.conjunction());
    lx.expect(";");
  }

  if (!lx.keyword_ahead("trans")) lx.fail("expected 'trans'");
  while (lx.try_keyword("trans")) {
    Transition t;
    t.name = lx.ident();
    lx.expect(":");
    ConstraintParser cp{lx, trans_vars};
    t.relation = cp.conjunction();
    lx.expect(";");
    spec.transitions.push_back(std::move(t));
  }

  while (lx.try_keyword("elem")) {
    ElemProp e;
    e.name = lx.ident();
    lx.expect(":");
    ConstraintParser cp{lx, state_vars};
    e.cond = cp.conjunction();
    lx.expect(";");
    spec.elems.push_back(std::move(e));
  }

  lx.expect("prop");
  CtlParser ctl{lx};
  spec.property = ctl.formula();
  lx.expect(";");

  if (!lx.eof()) lx.fail("trailing input after 'prop'");
  return spec;
}

SystemSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return parse_spec(text);
}

}  // namespace ctlspec
