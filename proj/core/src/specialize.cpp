// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/specialize.hpp"

#include <cassert>
#include <iterator>
#include <numeric>
#include <utility>

namespace ctlspec {

namespace {

Tuple canonical_tuple(int arity) {
  Tuple t(arity);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple t = a;
  t.insert(t.end(), b.begin(), b.end());
  return t;
}

// Renames a program constraint given over canonical positions 0..n-1 onto
// clause-local variables.
Constraint instantiate(const Constraint& c, const Tuple& onto) {
  return rename_tuple(c, canonical_tuple(static_cast<int>(onto.size())), onto);
}

void splice_at(SpecClause& clause, std::size_t position,
               std::vector<BodyLiteral> repl) {
  clause.body.erase(clause.body.begin() + position);
  clause.body.insert(clause.body.begin() + position,
                     std::make_move_iterator(repl.begin()),
                     std::make_move_iterator(repl.end()));
}

// The clause a pending definition contributes to the program: for the root
// the initial query, otherwise newp(X) <- d(X), sat(X, psi).
SpecClause clause_of(DefId def, const DefinitionTree& tree, int arity) {
  const Definition& d = tree.node(def);
  SpecClause c;
  c.next_var = arity;
  Tuple x = canonical_tuple(arity);
  if (def == 0) {
    c.head = PredRef::negprop();
    c.constraint = Constraint::truth();
    c.body = {LitInit{x}, LitSat{x, d.formula, false}};
  } else {
    c.head = PredRef::definition(def);
    c.head_tuple = x;
    c.constraint = d.constraint;
    c.body = {LitSat{std::move(x), d.formula, false}};
  }
  return c;
}

bool is_program_literal(const BodyLiteral& lit) {
  if (const LitSat* s = std::get_if<LitSat>(&lit)) return !s->negated;
  return !std::holds_alternative<LitDef>(lit);
}

bool eu_or_af_topped(const BodyLiteral& lit) {
  const LitSat* s = std::get_if<LitSat>(&lit);
  if (!s || s->negated) return false;
  CtlKind k = s->formula->kind();
  return k == CtlKind::Eu || k == CtlKind::Af;
}

}  // namespace

std::vector<SpecClause> unfold_once(const SpecClause& clause,
                                    std::size_t position,
                                    const EncodedProgram& program) {
  const int k = program.spec.schema.arity();
  std::vector<SpecClause> out;
  auto emit = [&](SpecClause next) {
    if (satisfiable(next.constraint)) out.push_back(std::move(next));
  };
  auto with = [&](std::vector<BodyLiteral> repl) {
    SpecClause next = clause;
    splice_at(next, position, std::move(repl));
    return next;
  };

  struct Visitor {
    const SpecClause& clause;
    std::size_t position;
    const EncodedProgram& program;
    int k;
    decltype(emit)& emit_;
    decltype(with)& with_;

    void operator()(const LitInit& l) {
      for (const Constraint& init : program.spec.inits) {
        SpecClause next = with_({});
        next.constraint = conjoin(next.constraint, instantiate(init, l.state));
        emit_(std::move(next));
      }
    }

    void operator()(const LitTrans& l) {
      Tuple onto = concat(l.from, l.to);
      for (const Transition& t : program.spec.transitions) {
        SpecClause next = with_({});
        next.constraint =
            conjoin(next.constraint, instantiate(t.relation, onto));
        emit_(std::move(next));
      }
    }

    void operator()(const LitTs& l) {
      assert(program.ts && "ts literal without derived ts clauses");
      for (const TsClause& tc : *program.ts) {
        SpecClause next = with_({});
        next.constraint =
            conjoin(next.constraint, instantiate(tc.region, l.from));
        std::vector<Tuple> succ;
        succ.reserve(tc.updates.size());
        for (const Constraint& update : tc.updates) {
          Tuple y = next.fresh_tuple(k);
          next.constraint = conjoin(
              next.constraint, rename_tuple(update, canonical_tuple(2 * k),
                                            concat(l.from, y)));
          succ.push_back(std::move(y));
        }
        for (BodyLiteral& b : next.body) {
          LitSatAll* sa = std::get_if<LitSatAll>(&b);
          if (sa && sa->list_var == l.list_var) {
            sa->list_var = -1;
            sa->states = succ;
          }
        }
        emit_(std::move(next));
      }
    }

    void operator()(const LitElem& l) {
      Constraint cond;
      bool found = l.name == "true";
      if (!found) {
        for (const ElemProp& e : program.spec.elems) {
          if (e.name == l.name) {
            cond = e.cond;
            found = true;
            break;
          }
        }
      }
      if (!found) return;  // no matching elem clause: the branch dies
      SpecClause next = with_({});
      next.constraint = conjoin(next.constraint, instantiate(cond, l.state));
      emit_(std::move(next));
    }

    void operator()(const LitSat& l) {
      assert(!l.negated && "negative literals are never unfolded");
      const CtlRef& f = l.formula;
      switch (f->kind()) {
        case CtlKind::True:
          emit_(with_({LitElem{"true", l.state}}));
          break;
        case CtlKind::Elem:
          emit_(with_({LitElem{f->name(), l.state}}));
          break;
        case CtlKind::Not:
          emit_(with_({LitSat{l.state, f->left(), true}}));
          break;
        case CtlKind::And:
          emit_(with_({LitSat{l.state, f->left(), false},
                       LitSat{l.state, f->right(), false}}));
          break;
        case CtlKind::Ex: {
          SpecClause next = clause;
          Tuple y = next.fresh_tuple(k);
          splice_at(next, position,
                    {LitTrans{l.state, y}, LitSat{y, f->left(), false}});
          emit_(std::move(next));
          break;
        }
        case CtlKind::Eu: {
          emit_(with_({LitSat{l.state, f->right(), false}}));
          SpecClause next = clause;
          Tuple y = next.fresh_tuple(k);
          splice_at(next, position,
                    {LitSat{l.state, f->left(), false}, LitTrans{l.state, y},
                     LitSat{y, f, false}});
          emit_(std::move(next));
          break;
        }
        case CtlKind::Af: {
          emit_(with_({LitSat{l.state, f->left(), false}}));
          SpecClause next = clause;
          int lv = next.next_list_var++;
          splice_at(next, position,
                    {LitTs{l.state, lv}, LitSatAll{lv, {}, f}});
          emit_(std::move(next));
          break;
        }
        case CtlKind::Ef:
        case CtlKind::Eg:
          throw InvalidInput("unfold_once: formula not desugared");
      }
    }

    void operator()(const LitSatAll& l) {
      assert(l.list_var < 0 && "sat_all over a list variable is not unfoldable");
      if (l.states.empty()) {
        emit_(with_({}));
        return;
      }
      std::vector<Tuple> rest(l.states.begin() + 1, l.states.end());
      emit_(with_({LitSat{l.states.front(), l.formula, false},
                   LitSatAll{-1, std::move(rest), l.formula}}));
    }

    void operator()(const LitDef&) {
      throw InvalidInput("unfold_once: definition literals are not unfoldable");
    }
  };

  std::visit(Visitor{clause, position, program, k, emit, with},
             clause.body[position]);
  return out;
}

bool selectable(const BodyLiteral& lit) {
  struct Visitor {
    bool operator()(const LitInit&) { return true; }
    bool operator()(const LitTrans&) { return true; }
    bool operator()(const LitTs&) { return true; }
    bool operator()(const LitElem&) { return true; }
    bool operator()(const LitSat& l) {
      if (l.negated) return false;
      switch (l.formula->kind()) {
        case CtlKind::True:
        case CtlKind::Elem:
        case CtlKind::Not:
        case CtlKind::And:
        case CtlKind::Ex:
          return true;
        default:
          return false;
      }
    }
    bool operator()(const LitSatAll& l) { return l.list_var < 0; }
    bool operator()(const LitDef&) { return false; }
  };
  return std::visit(Visitor{}, lit);
}

std::vector<SpecClause> unfold(DefId def, const DefinitionTree& tree,
                               const EncodedProgram& program,
                               const SpecConfig& config) {
  SpecClause start = clause_of(def, tree, program.spec.schema.arity());

  std::size_t first = 0;
  while (first < start.body.size() && !is_program_literal(start.body[first]))
    ++first;
  assert(first < start.body.size());

  // An eu- or af-topped formula is unfolded exactly here, never again below:
  // the selection forms exclude it, which is what bounds the procedure.
  int temporal_unfolds = eu_or_af_topped(start.body[first]) ? 1 : 0;
  std::vector<SpecClause> gamma = unfold_once(start, first, program);

  int steps = 0;
  for (std::size_t i = 0; i < gamma.size();) {
    std::size_t pos = 0;
    while (pos < gamma[i].body.size() && !selectable(gamma[i].body[pos]))
      ++pos;
    if (pos == gamma[i].body.size()) {
      ++i;
      continue;
    }
    if (++steps > config.max_unfold_steps)
      throw StepLimit("unfold: step bound exceeded");
    if (config.deadline &&
        std::chrono::steady_clock::now() > *config.deadline)
      throw TimeLimit("unfold: deadline exceeded");
    assert(!eu_or_af_topped(gamma[i].body[pos]));
    temporal_unfolds += eu_or_af_topped(gamma[i].body[pos]) ? 1 : 0;
    std::vector<SpecClause> repl = unfold_once(gamma[i], pos, program);
    gamma.erase(gamma.begin() + i);
    gamma.insert(gamma.begin() + i, std::make_move_iterator(repl.begin()),
                 std::make_move_iterator(repl.end()));
  }
  assert(temporal_unfolds <= 1);
  (void)temporal_unfolds;

  // Remove clauses subsumed by an empty-bodied clause.
  std::vector<bool> removed(gamma.size(), false);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (removed[i] || !gamma[i].body.empty()) continue;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (j == i || removed[j]) continue;
      if (entails(gamma[j].constraint, gamma[i].constraint))
        removed[j] = true;
    }
  }
  std::vector<SpecClause> kept;
  kept.reserve(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!removed[i]) kept.push_back(std::move(gamma[i]));
  return kept;
}

std::vector<SpecClause> generalize_and_fold(DefId gamma,
                                            std::vector<SpecClause> clauses,
                                            DefinitionTree& tree,
                                            const SpecConfig& config,
                                            GenCounters& counters) {
  for (SpecClause& eta : clauses) {
    for (std::size_t pos = 0; pos < eta.body.size(); ++pos) {
      const LitSat* l = std::get_if<LitSat>(&eta.body[pos]);
      if (!l) continue;
      const Tuple x = l->state;
      Constraint ep = rename_tuple(
          project(eta.constraint, x), x,
          canonical_tuple(static_cast<int>(x.size())));

      DefId target = -1;
      // Step 1: fold with an existing definition, newest first.
      for (DefId cand = static_cast<DefId>(tree.nodes.size()) - 1; cand >= 1;
           --cand) {
        const Definition& d = tree.nodes[cand];
        if (equal(d.formula, l->formula) && entails(ep, d.constraint)) {
          target = cand;
          ++counters.reuse;
          break;
        }
      }
      // Step 2: generalize against the nearest firing ancestor.
      if (target < 0) {
        DefId alpha = gamma;
        if (!config.ancestor_includes_self)
          alpha = tree.nodes[alpha].parent.value_or(0);
        while (alpha != 0) {
          const Definition& a = tree.nodes[alpha];
          if (equal(a.formula, l->formula) &&
              fires(config.firing, a.constraint, ep)) {
            Constraint g = generalize(config.genop, a.constraint, ep);
            target = tree.create(std::move(g), l->formula, gamma,
                                 DefOrigin::Generalized);
            ++counters.generalize;
            break;
          }
          alpha = a.parent.value_or(0);
        }
      }
      // Step 3: a fresh definition from the bare projection.
      if (target < 0) {
        target = tree.create(std::move(ep), l->formula, gamma,
                             DefOrigin::Fresh);
        ++counters.fresh;
      }
      if (static_cast<int>(tree.nodes.size()) > config.max_definitions)
        throw StepLimit("specialize: definition bound exceeded");
      eta.body[pos] =
          LitDef{PredRef::definition(target), x, l->negated};
    }
  }
  return clauses;
}

SpecializedProgram specialize(const EncodedProgram& program,
                              const SpecConfig& config) {
  SpecializedProgram out;

  SpecClause g1;
  g1.head = PredRef::prop();
  g1.constraint = Constraint::truth();
  g1.body = {LitDef{PredRef::negprop(), {}, true}};
  out.clauses.push_back(std::move(g1));

  CtlRef psi0 = desugar(CtlFormula::mk_not(program.property_desugared));
  out.tree.nodes.push_back(
      {0, Constraint::truth(), std::move(psi0), std::nullopt, DefOrigin::Root});
  out.tree.pending.push_back(0);

  while (!out.tree.pending.empty()) {
    if (config.deadline &&
        std::chrono::steady_clock::now() > *config.deadline)
      throw TimeLimit("specialize: deadline exceeded");
    DefId gamma = out.tree.pending.front();
    out.tree.pending.pop_front();
    std::vector<SpecClause> unfolded = unfold(gamma, out.tree, program, config);
    std::vector<SpecClause> folded = generalize_and_fold(
        gamma, std::move(unfolded), out.tree, config, out.gen_steps);
    for (SpecClause& c : folded) out.clauses.push_back(std::move(c));
    out.tree.processed.insert(gamma);
  }
  return out;
}

}  // namespace ctlspec
