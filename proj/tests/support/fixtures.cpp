// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <algorithm>

namespace ctlspec::testing {

const std::map<std::string, VarId>& test_vars() {
  static const std::map<std::string, VarId> vars = {
      {"x1", 0}, {"x2", 1}, {"x3", 2}, {"x4", 3},
      {"y1", 4}, {"y2", 5}, {"y3", 6}, {"y4", 7},
  };
  return vars;
}

Constraint pc(std::string_view text) { return parse_constraint(text, test_vars()); }

bool equivalent(const Constraint& a, const Constraint& b) {
  if (a.is_false() || b.is_false()) return a.is_false() == b.is_false();
  return entails(a, b) && entails(b, a);
}

namespace {

// Conjoins Xv = value (value rational, coefficients kept integral).
Constraint pin(const Constraint& c, VarId v, const Rat& value) {
  Int num = numerator(value), den = denominator(value);
  LinearTerm t1, t2;  // den*Xv - num <= 0 and num - den*Xv <= 0
  t1.set_coeff(v, den);
  t1.constant = -num;
  t2.set_coeff(v, -den);
  t2.constant = num;
  Constraint out = conjoin(c, AtomicConstraint{t1, RelOp::NonStrict});
  return conjoin(out, AtomicConstraint{t2, RelOp::NonStrict});
}

}  // namespace

std::optional<std::vector<Rat>> find_point(const Constraint& c) {
  if (c.is_false() || !satisfiable(c)) return std::nullopt;
  VarId top = c.max_var();
  std::vector<Rat> point(static_cast<std::size_t>(top < 0 ? 0 : top + 1),
                         Rat(0));
  // Fix variables highest-first: project the partially pinned constraint onto
  // the variable, read off its feasible interval, pick an interior value.
  Constraint current = c;
  for (VarId v = top; v >= 0; --v) {
    Constraint iv = project(current, std::set<VarId>{v});
    std::optional<Rat> lo, up;
    bool lo_strict = false, up_strict = false;
    for (const auto& a : iv.atoms()) {
      Int qv = a.term.coeff(v);
      if (qv == 0) continue;
      Rat bound = qv > 0 ? Rat(-a.term.constant, qv)
                         : Rat(a.term.constant, -qv);
      bool is_strict = a.op == RelOp::Strict;
      if (qv > 0) {  // Xv <= bound
        if (!up || bound < *up)
          up = bound, up_strict = is_strict;
        else if (bound == *up && is_strict)
          up_strict = true;
      } else {  // Xv >= bound
        if (!lo || bound > *lo)
          lo = bound, lo_strict = is_strict;
        else if (bound == *lo && is_strict)
          lo_strict = true;
      }
    }
    Rat value(0);
    if (lo && up)
      value = (!lo_strict) ? *lo : (!up_strict) ? *up : (*lo + *up) / 2;
    else if (lo)
      value = lo_strict ? *lo + 1 : *lo;
    else if (up)
      value = up_strict ? *up - 1 : *up;
    point[static_cast<std::size_t>(v)] = value;
    current = pin(current, v, value);
    if (current.is_false() || !satisfiable(current)) return std::nullopt;
  }
  if (!evaluate(c, point)) return std::nullopt;
  return point;
}

Constraint substitute(const Constraint& c, const std::map<VarId, Int>& values) {
  Constraint out = c;
  for (const auto& [v, val] : values) {
    if (out.is_false()) return out;
    out = pin(out, v, Rat(val));
  }
  return out;
}

Constraint random_constraint(std::mt19937& rng, int num_vars, int max_atoms,
                             int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_int_distribution<int> strict(0, 3);
  for (;;) {
    std::vector<AtomicConstraint> atoms;
    int n = natoms(rng);
    for (int i = 0; i < n; ++i) {
      LinearTerm t;
      t.constant = coeff(rng);
      for (VarId v = 0; v < num_vars; ++v) t.set_coeff(v, coeff(rng));
      atoms.push_back(
          {std::move(t), strict(rng) == 0 ? RelOp::Strict : RelOp::NonStrict});
    }
    Constraint c = Constraint::make(std::move(atoms));
    if (!c.is_false() && satisfiable(c)) return c;
  }
}

Constraint weaken(std::mt19937& rng, const Constraint& c) {
  std::uniform_int_distribution<int> keep(0, 2);
  std::uniform_int_distribution<int> slack(0, 3);
  std::vector<AtomicConstraint> atoms;
  for (const auto& a : c.atoms()) {
    if (keep(rng) == 0) continue;
    AtomicConstraint b = a;
    b.term.constant -= slack(rng);  // p <= 0 weakens to p - k <= 0
    if (b.op == RelOp::Strict && slack(rng) == 0) b.op = RelOp::NonStrict;
    atoms.push_back(std::move(b));
  }
  return Constraint::make(std::move(atoms));
}

}  // namespace ctlspec::testing
