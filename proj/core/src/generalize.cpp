// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/generalize.hpp"

#include <vector>

namespace ctlspec {

namespace {

// Atoms of c entailed by d.
std::vector<AtomicConstraint> entailed_atoms(const Constraint& c,
                                             const Constraint& d) {
  std::vector<AtomicConstraint> out;
  for (const auto& a : c.atoms())
    if (entails(d, a)) out.push_back(a);
  return out;
}

bool bounded_by_some(FiringRelation rel, const AtomicConstraint& b,
                     const Constraint& c) {
  for (const auto& a : c.atoms())
    if (atomic_rel(rel, b, a)) return true;
  return false;
}

// W extended with the atoms of d that stay below an atom of c under rel.
Constraint widen(FiringRelation rel, const Constraint& c, const Constraint& d) {
  std::vector<AtomicConstraint> out = entailed_atoms(c, d);
  for (const auto& b : d.atoms())
    if (bounded_by_some(rel, b, c)) out.push_back(b);
  return canonicalize(Constraint::make(std::move(out)));
}

// Atoms of a minimized hull of c and d that stay below an atom of c.
Constraint hull_filter(FiringRelation rel, const Constraint& c,
                       const Constraint& d) {
  Constraint h = remove_redundant(convex_hull(c, d));
  std::vector<AtomicConstraint> out;
  for (const auto& b : h.atoms())
    if (bounded_by_some(rel, b, c)) out.push_back(b);
  return canonicalize(Constraint::make(std::move(out)));
}

}  // namespace

Constraint generalize(GenOp op, const Constraint& c, const Constraint& d) {
  if (!satisfiable(c) || !satisfiable(d))
    throw InvalidInput("generalize: unsatisfiable operand");
  Constraint g;
  switch (op) {
    case GenOp::Top:
      g = Constraint::truth();
      break;
    case GenOp::W:
      g = canonicalize(Constraint::make(entailed_atoms(c, d)));
      break;
    case GenOp::WM:
      g = widen(FiringRelation::Maxcoeff, c, d);
      break;
    case GenOp::WS:
      g = widen(FiringRelation::Sumcoeff, c, d);
      break;
    case GenOp::ChM:
      g = hull_filter(FiringRelation::Maxcoeff, c, d);
      break;
    case GenOp::ChS:
      g = hull_filter(FiringRelation::Sumcoeff, c, d);
      break;
    case GenOp::ChWM:
      g = widen(FiringRelation::Maxcoeff, c, convex_hull(c, d));
      break;
    case GenOp::ChWS:
      g = widen(FiringRelation::Sumcoeff, c, convex_hull(c, d));
      break;
  }
  return remove_redundant(g);
}

FiringRelation default_firing(GenOp op) {
  switch (op) {
    case GenOp::Top:
    case GenOp::W:
    case GenOp::WM:
    case GenOp::ChM:
    case GenOp::ChWM:
      return FiringRelation::Maxcoeff;
    case GenOp::WS:
    case GenOp::ChS:
    case GenOp::ChWS:
      return FiringRelation::Sumcoeff;
  }
  return FiringRelation::Maxcoeff;
}

std::string to_string(GenOp op) {
  switch (op) {
    case GenOp::Top:
      return "top";
    case GenOp::W:
      return "w";
    case GenOp::WM:
      return "wm";
    case GenOp::WS:
      return "ws";
    case GenOp::ChM:
      return "chm";
    case GenOp::ChS:
      return "chs";
    case GenOp::ChWM:
      return "chwm";
    case GenOp::ChWS:
      return "chws";
  }
  return "?";
}

std::optional<GenOp> genop_from_string(std::string_view s) {
  if (s == "top") return GenOp::Top;
  if (s == "w") return GenOp::W;
  if (s == "wm") return GenOp::WM;
  if (s == "ws") return GenOp::WS;
  if (s == "chm") return GenOp::ChM;
  if (s == "chs") return GenOp::ChS;
  if (s == "chwm") return GenOp::ChWM;
  if (s == "chws") return GenOp::ChWS;
  return std::nullopt;
}

}  // namespace ctlspec
