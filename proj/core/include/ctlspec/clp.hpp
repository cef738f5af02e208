// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ctlspec/constraint.hpp"
#include "ctlspec/ctl.hpp"

namespace ctlspec {

using DefId = int;

// A predicate of the specialized program: prop, negprop, or an introduced
// definition printed as new<id>.
struct PredRef {
  enum class Kind { Prop, NegProp, Def };
  Kind kind = Kind::Prop;
  DefId def = -1;

  static PredRef prop() { return {Kind::Prop, -1}; }
  static PredRef negprop() { return {Kind::NegProp, -1}; }
  static PredRef definition(DefId id) { return {Kind::Def, id}; }
  bool is_def() const { return kind == Kind::Def; }
  auto operator<=>(const PredRef&) const = default;
};

std::string to_string(const PredRef& p);

// A state tuple: distinct clause-local variables, one per schema position.
using Tuple = std::vector<VarId>;

struct LitInit {
  Tuple state;
};
struct LitTrans {
  Tuple from, to;
};
struct LitTs {
  Tuple from;
  int list_var = -1;  // shared with the sat_all literal it was born with
};
struct LitElem {
  std::string name;
  Tuple state;
};
struct LitSat {
  Tuple state;
  CtlRef formula;
  bool negated = false;
};
// Successor-list satisfaction. The list is a variable (list_var >= 0) until
// the ts literal carrying the same list_var is unfolded, concrete afterwards.
struct LitSatAll {
  int list_var = -1;
  std::vector<Tuple> states;
  CtlRef formula;
};
struct LitDef {
  PredRef pred;
  Tuple state;  // empty for prop/negprop
  bool negated = false;
};

using BodyLiteral =
    std::variant<LitInit, LitTrans, LitTs, LitElem, LitSat, LitSatAll, LitDef>;

// A clause of the program under specialization. Definition heads always use
// the canonical schema tuple 0..k-1; variables beyond next_var are free.
struct SpecClause {
  PredRef head;
  Tuple head_tuple;
  Constraint constraint;
  std::vector<BodyLiteral> body;
  VarId next_var = 0;
  int next_list_var = 0;

  Tuple fresh_tuple(int arity) {
    Tuple t(arity);
    for (int i = 0; i < arity; ++i) t[i] = next_var++;
    return t;
  }
};

// How a definition's constraint was obtained; retained so tests can assert
// that every constraint is either a projection or a generalization result.
enum class DefOrigin { Root, Fresh, Generalized };

struct Definition {
  DefId id = 0;
  Constraint constraint;  // over the canonical schema tuple
  CtlRef formula;
  std::optional<DefId> parent;  // absent only for the root
  DefOrigin origin = DefOrigin::Fresh;
};

// The definition tree. Node 0 is the synthetic root holding the initial
// query; introduced definitions are numbered from 1.
struct DefinitionTree {
  std::vector<Definition> nodes;
  std::deque<DefId> pending;
  std::set<DefId> processed;

  const Definition& node(DefId id) const { return nodes[id]; }
  DefId create(Constraint c, CtlRef formula, DefId parent, DefOrigin origin);
};

std::string to_string(const BodyLiteral& lit);
// One clause: `head :- constraint | lit, lit, ...` (no pipe when the body is
// empty).
std::string to_string(const SpecClause& clause);
// One clause per line, in order; the determinism contract applies to this
// exact byte sequence.
std::string dump(const std::vector<SpecClause>& clauses);

}  // namespace ctlspec
