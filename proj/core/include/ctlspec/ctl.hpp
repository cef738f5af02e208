// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

namespace ctlspec {

// CTL state formulas. Ef and Eg are surface sugar; desugar() rewrites
//   ef(f) -> eu(true, f)
//   eg(f) -> not(af(not(f)))
//   not(not(f)) -> f
// so downstream passes only see Elem/True/Not/And/Ex/Eu/Af.
enum class CtlKind { Elem, True, Not, And, Ex, Eu, Af, Ef, Eg };

class CtlFormula;
using CtlRef = std::shared_ptr<const CtlFormula>;

class CtlFormula {
 public:
  static CtlRef elem(std::string name);
  static CtlRef truth();
  static CtlRef mk_not(CtlRef f);
  static CtlRef mk_and(CtlRef l, CtlRef r);
  static CtlRef ex(CtlRef f);
  static CtlRef eu(CtlRef l, CtlRef r);
  static CtlRef af(CtlRef f);
  static CtlRef ef(CtlRef f);
  static CtlRef eg(CtlRef f);

  CtlKind kind() const { return kind_; }
  const std::string& name() const { return name_; }  // Elem only
  const CtlRef& left() const { return left_; }
  const CtlRef& right() const { return right_; }     // And/Eu only

 private:
  CtlKind kind_ = CtlKind::True;
  std::string name_;
  CtlRef left_, right_;
};

bool equal(const CtlRef& a, const CtlRef& b);
CtlRef desugar(const CtlRef& f);
bool contains_af(const CtlRef& f);
bool is_desugared(const CtlRef& f);
std::string to_string(const CtlRef& f);

}  // namespace ctlspec
