// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/bottomup.hpp"

#include <cassert>
#include <numeric>
#include <utility>

#include "ctlspec/system.hpp"

namespace ctlspec {

namespace {

Tuple canonical_tuple(int arity) {
  Tuple t(arity);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

const LitDef& as_def(const BodyLiteral& lit) {
  const LitDef* d = std::get_if<LitDef>(&lit);
  if (!d)
    throw InvalidInput(
        "bottom_up: clause body holds a literal that was never folded");
  return *d;
}

}  // namespace

bool ModelTable::insert(Fact f) {
  std::vector<Constraint>& list = facts_[f.pred];
  for (const Constraint& old : list)
    if (entails(f.constraint, old)) return false;
  std::erase_if(list, [&](const Constraint& old) {
    return entails(old, f.constraint);
  });
  list.push_back(std::move(f.constraint));
  return true;
}

const std::vector<Constraint>& ModelTable::facts(const PredRef& p) const {
  static const std::vector<Constraint> empty;
  auto it = facts_.find(p);
  return it == facts_.end() ? empty : it->second;
}

std::size_t ModelTable::fact_count() const {
  std::size_t n = 0;
  for (const auto& [pred, list] : facts_) n += list.size();
  return n;
}

std::string ModelTable::dump(int arity) const {
  std::string out;
  for (const auto& [pred, list] : facts_) {
    std::string head = to_string(pred);
    if (pred.is_def()) {
      head += "(";
      for (int i = 0; i < arity; ++i) {
        if (i) head += ",";
        head += "X" + std::to_string(i + 1);
      }
      head += ")";
    }
    for (const Constraint& c : list) {
      out += head;
      out += " :- ";
      out += to_string(c);
      out += '\n';
    }
  }
  return out;
}

Stratification stratify(const std::vector<SpecClause>& clauses) {
  std::set<PredRef> preds;
  for (const SpecClause& c : clauses) {
    preds.insert(c.head);
    for (const BodyLiteral& lit : c.body) preds.insert(as_def(lit).pred);
  }

  Stratification s;
  for (const PredRef& p : preds) s.level[p] = 0;
  const int bound = static_cast<int>(preds.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const SpecClause& c : clauses) {
      for (const BodyLiteral& lit : c.body) {
        const LitDef& d = as_def(lit);
        int need = s.level[d.pred] + (d.negated ? 1 : 0);
        if (s.level[c.head] < need) {
          if (need > bound)
            throw NotStratified("stratify: negative dependency cycle");
          s.level[c.head] = need;
          changed = true;
        }
      }
    }
  }
  for (const auto& [p, lvl] : s.level) s.max_level = std::max(s.max_level, lvl);
  return s;
}

std::vector<Constraint> negate_facts(const std::vector<Constraint>& facts,
                                     const Constraint& context,
                                     std::size_t max_branches) {
  std::vector<Constraint> branches;
  if (satisfiable(context)) branches.push_back(context);

  // Complementing one fact c = a1,...,am under a branch b splits b into the
  // disjoint pieces b & ~a1, b & a1 & ~a2, ..., which together cover b \ c.
  for (const Constraint& fact : facts) {
    if (!satisfiable(fact)) continue;
    std::vector<Constraint> next;
    for (const Constraint& b : branches) {
      Constraint prefix = b;
      for (const AtomicConstraint& atom : fact.atoms()) {
        Constraint piece = conjoin(prefix, negate_atom(atom));
        if (satisfiable(piece)) {
          if (next.size() >= max_branches)
            throw SizeLimit("negate_facts: branch bound exceeded");
          next.push_back(remove_redundant(piece));
        }
        prefix = conjoin(prefix, atom);
        if (!satisfiable(prefix)) break;
      }
    }
    branches = std::move(next);
  }
  return branches;
}

std::vector<Fact> immediate_consequences(
    const std::vector<SpecClause>& clauses, const ModelTable& model,
    std::size_t max_branches) {
  std::vector<Fact> out;
  for (const SpecClause& clause : clauses) {
    std::vector<Constraint> branches{clause.constraint};
    for (const BodyLiteral& lit : clause.body) {
      const LitDef& d = as_def(lit);
      int arity = static_cast<int>(d.state.size());
      std::vector<Constraint> onto;
      onto.reserve(model.facts(d.pred).size());
      for (const Constraint& f : model.facts(d.pred))
        onto.push_back(rename_tuple(f, canonical_tuple(arity), d.state));

      std::vector<Constraint> next;
      if (!d.negated) {
        for (const Constraint& b : branches) {
          for (const Constraint& f : onto) {
            Constraint g = conjoin(b, f);
            if (!satisfiable(g)) continue;
            if (next.size() >= max_branches)
              throw SizeLimit("immediate_consequences: join bound exceeded");
            next.push_back(std::move(g));
          }
        }
      } else {
        assert(model.complete(d.pred) &&
               "negation evaluated before the predicate completed");
        for (const Constraint& b : branches) {
          for (Constraint& g : negate_facts(onto, b, max_branches)) {
            if (next.size() >= max_branches)
              throw SizeLimit("immediate_consequences: join bound exceeded");
            next.push_back(std::move(g));
          }
        }
      }
      branches = std::move(next);
      if (branches.empty()) break;
    }
    Tuple canon = canonical_tuple(static_cast<int>(clause.head_tuple.size()));
    for (const Constraint& b : branches)
      out.push_back({clause.head,
                     remove_redundant(rename_tuple(
                         project(b, clause.head_tuple), clause.head_tuple,
                         canon))});
  }
  return out;
}

FixpointStatus fixpoint(const std::vector<SpecClause>& clauses,
                        ModelTable& model, const BottomupLimits& limits) {
  for (int iter = 0; iter < limits.max_iterations; ++iter) {
    if (limits.deadline &&
        std::chrono::steady_clock::now() > *limits.deadline)
      return FixpointStatus::TimedOut;
    std::vector<Fact> derived =
        immediate_consequences(clauses, model, limits.max_branches);
    bool changed = false;
    for (Fact& f : derived)
      if (model.insert(std::move(f))) changed = true;
    if (!changed) return FixpointStatus::Completed;
  }
  return FixpointStatus::Diverged;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "VERIFIED";
    case Verdict::Violated:
      return "VIOLATED";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

BottomupResult bottom_up(const std::vector<SpecClause>& clauses,
                         const BottomupLimits& limits) {
  BottomupResult out;
  Stratification strata;
  try {
    strata = stratify(clauses);
  } catch (const NotStratified&) {
    out.reason = "not-stratified";
    return out;
  }

  for (int lvl = 0; lvl <= strata.max_level; ++lvl) {
    std::vector<SpecClause> stratum;
    for (const SpecClause& c : clauses)
      if (strata.level.at(c.head) == lvl) stratum.push_back(c);
    FixpointStatus status;
    try {
      status = fixpoint(stratum, out.model, limits);
    } catch (const SizeLimit&) {
      out.reason = "negation-size-limit";
      return out;
    }
    if (status == FixpointStatus::Diverged) {
      out.reason = "bottomup-divergence";
      return out;
    }
    if (status == FixpointStatus::TimedOut) {
      out.reason = "timeout";
      return out;
    }
    for (const auto& [pred, level] : strata.level)
      if (level == lvl) out.model.mark_complete(pred);
  }

  out.verdict = out.model.facts(PredRef::prop()).empty() ? Verdict::Violated
                                                         : Verdict::Verified;
  return out;
}

}  // namespace ctlspec
