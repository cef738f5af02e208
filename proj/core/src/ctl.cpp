// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/ctl.hpp"

#include <cassert>

namespace ctlspec {

CtlRef CtlFormula::elem(std::string name) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Elem;
  f->name_ = std::move(name);
  return f;
}

CtlRef CtlFormula::truth() {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::True;
  return f;
}

CtlRef CtlFormula::mk_not(CtlRef x) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Not;
  f->left_ = std::move(x);
  return f;
}

CtlRef CtlFormula::mk_and(CtlRef l, CtlRef r) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::And;
  f->left_ = std::move(l);
  f->right_ = std::move(r);
  return f;
}

CtlRef CtlFormula::ex(CtlRef x) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Ex;
  f->left_ = std::move(x);
  return f;
}

CtlRef CtlFormula::eu(CtlRef l, CtlRef r) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Eu;
  f->left_ = std::move(l);
  f->right_ = std::move(r);
  return f;
}

CtlRef CtlFormula::af(CtlRef x) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Af;
  f->left_ = std::move(x);
  return f;
}

CtlRef CtlFormula::ef(CtlRef x) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Ef;
  f->left_ = std::move(x);
  return f;
}

CtlRef CtlFormula::eg(CtlRef x) {
  auto f = std::make_shared<CtlFormula>();
  f->kind_ = CtlKind::Eg;
  f->left_ = std::move(x);
  return f;
}

bool equal(const CtlRef& a, const CtlRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case CtlKind::Elem:
      return a->name() == b->name();
    case CtlKind::True:
      return true;
    case CtlKind::Not:
    case CtlKind::Ex:
    case CtlKind::Af:
    case CtlKind::Ef:
    case CtlKind::Eg:
      return equal(a->left(), b->left());
    case CtlKind::And:
    case CtlKind::Eu:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
  return false;
}

CtlRef desugar(const CtlRef& f) {
  assert(f);
  switch (f->kind()) {
    case CtlKind::Elem:
    case CtlKind::True:
      return f;
    case CtlKind::Not: {
      CtlRef inner = desugar(f->left());
      if (inner->kind() == CtlKind::Not) return inner->left();
      return CtlFormula::mk_not(inner);
    }
    case CtlKind::And:
      return CtlFormula::mk_and(desugar(f->left()), desugar(f->right()));
    case CtlKind::Ex:
      return CtlFormula::ex(desugar(f->left()));
    case CtlKind::Eu:
      return CtlFormula::eu(desugar(f->left()), desugar(f->right()));
    case CtlKind::Af:
      return CtlFormula::af(desugar(f->left()));
    case CtlKind::Ef:
      return CtlFormula::eu(CtlFormula::truth(), desugar(f->left()));
    case CtlKind::Eg:
      return desugar(CtlFormula::mk_not(
          CtlFormula::af(CtlFormula::mk_not(f->left()))));
  }
  return f;
}

bool contains_af(const CtlRef& f) {
  if (!f) return false;
  if (f->kind() == CtlKind::Af) return true;
  return contains_af(f->left()) || contains_af(f->right());
}

bool is_desugared(const CtlRef& f) {
  if (!f) return true;
  if (f->kind() == CtlKind::Ef || f->kind() == CtlKind::Eg) return false;
  if (f->kind() == CtlKind::Not && f->left()->kind() == CtlKind::Not)
    return false;
  return is_desugared(f->left()) && is_desugared(f->right());
}

std::string to_string(const CtlRef& f) {
  if (!f) return "<null>";
  switch (f->kind()) {
    case CtlKind::Elem:
      return f->name();
    case CtlKind::True:
      return "true";
    case CtlKind::Not:
      return "not(" + to_string(f->left()) + ")";
    case CtlKind::And:
      return "and(" + to_string(f->left()) + "," + to_string(f->right()) + ")";
    case CtlKind::Ex:
      return "ex(" + to_string(f->left()) + ")";
    case CtlKind::Eu:
      return "eu(" + to_string(f->left()) + "," + to_string(f->right()) + ")";
    case CtlKind::Af:
      return "af(" + to_string(f->left()) + ")";
    case CtlKind::Ef:
      return "ef(" + to_string(f->left()) + ")";
    case CtlKind::Eg:
      return "eg(" + to_string(f->left()) + ")";
  }
  return "?";
}

}  // namespace ctlspec
