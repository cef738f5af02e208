// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/clp.hpp"

namespace ctlspec {

namespace {

std::string var_name(VarId v) { return "X" + std::to_string(v + 1); }

std::string tuple_str(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += var_name(t[i]);
  }
  return out + ")";
}

}  // namespace

std::string to_string(const PredRef& p) {
  switch (p.kind) {
    case PredRef::Kind::Prop:
      return "prop";
    case PredRef::Kind::NegProp:
      return "negprop";
    case PredRef::Kind::Def:
      return "new" + std::to_string(p.def);
  }
  return "?";
}

DefId DefinitionTree::create(Constraint c, CtlRef formula, DefId parent,
                             DefOrigin origin) {
  DefId id = static_cast<DefId>(nodes.size());
  nodes.push_back(
      {id, std::move(c), std::move(formula), parent, origin});
  pending.push_back(id);
  return id;
}

std::string to_string(const BodyLiteral& lit) {
  struct Printer {
    std::string operator()(const LitInit& l) {
      return "init" + tuple_str(l.state);
    }
    std::string operator()(const LitTrans& l) {
      return "t(" + tuple_str(l.from) + "," + tuple_str(l.to) + ")";
    }
    std::string operator()(const LitTs& l) {
      return "ts(" + tuple_str(l.from) + ",Ls" +
             std::to_string(l.list_var + 1) + ")";
    }
    std::string operator()(const LitElem& l) {
      return "elem(" + tuple_str(l.state) + "," + l.name + ")";
    }
    std::string operator()(const LitSat& l) {
      return std::string(l.negated ? "~" : "") + "sat(" + tuple_str(l.state) +
             "," + to_string(l.formula) + ")";
    }
    std::string operator()(const LitSatAll& l) {
      std::string list;
      if (l.list_var >= 0) {
        list = "Ls" + std::to_string(l.list_var + 1);
      } else {
        list = "[";
        for (std::size_t i = 0; i < l.states.size(); ++i) {
          if (i) list += ",";
          list += tuple_str(l.states[i]);
        }
        list += "]";
      }
      return "sat_all(" + list + "," + to_string(l.formula) + ")";
    }
    std::string operator()(const LitDef& l) {
      std::string out = l.negated ? "~" : "";
      out += to_string(l.pred);
      if (!l.state.empty()) out += tuple_str(l.state);
      return out;
    }
  };
  return std::visit(Printer{}, lit);
}

std::string to_string(const SpecClause& clause) {
  std::string out = to_string(clause.head);
  if (!clause.head_tuple.empty()) out += tuple_str(clause.head_tuple);
  out += " :- " + to_string(clause.constraint);
  if (!clause.body.empty()) {
    out += " | ";
    for (std::size_t i = 0; i < clause.body.size(); ++i) {
      if (i) out += ", ";
      out += to_string(clause.body[i]);
    }
  }
  return out;
}

std::string dump(const std::vector<SpecClause>& clauses) {
  std::string out;
  for (const SpecClause& c : clauses) {
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace ctlspec
