// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/system.hpp"

#include <set>

namespace ctlspec {

namespace {

std::vector<Constraint> guards_of(const SystemSpec& spec) {
  std::vector<VarId> state;
  for (VarId v = 0; v < spec.schema.arity(); ++v) state.push_back(v);
  std::vector<Constraint> gs;
  gs.reserve(spec.transitions.size());
  for (const auto& t : spec.transitions) gs.push_back(project(t.relation, state));
  return gs;
}

// Splits the state space on each guard in turn. The include branch conjoins
// the whole guard; exclude branches negate one atom under the positive prefix
// of earlier atoms, which keeps sibling regions pairwise disjoint.
template <typename Leaf>
void split_regions(const std::vector<Constraint>& guards, std::size_t idx,
                   const Constraint& region, std::vector<int>& in_set,
                   const Leaf& leaf) {
  if (!satisfiable(region)) return;
  if (idx == guards.size()) {
    leaf(region, in_set);
    return;
  }
  in_set.push_back(static_cast<int>(idx));
  split_regions(guards, idx + 1, conjoin(region, guards[idx]), in_set, leaf);
  in_set.pop_back();
  Constraint prefix = region;
  for (const auto& atom : guards[idx].atoms()) {
    split_regions(guards, idx + 1, conjoin(prefix, negate_atom(atom)), in_set,
                  leaf);
    prefix = conjoin(prefix, atom);
  }
}

void collect_elem_names(const CtlRef& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind() == CtlKind::Elem) out.insert(f->name());
  collect_elem_names(f->left(), out);
  collect_elem_names(f->right(), out);
}

}  // namespace

std::vector<TsClause> derive_ts(const SystemSpec& spec,
                                std::size_t max_clauses) {
  auto guards = guards_of(spec);
  std::vector<TsClause> clauses;
  std::optional<Constraint> gap;
  std::vector<int> in_set;
  split_regions(guards, 0, Constraint::truth(), in_set,
                [&](const Constraint& region, const std::vector<int>& s) {
                  if (s.empty()) {
                    if (!gap) gap = region;
                    return;
                  }
                  if (clauses.size() >= max_clauses)
                    throw SizeLimit("derive_ts: region expansion too large");
                  TsClause c;
                  c.region = region;
                  for (int i : s) {
                    c.updates.push_back(spec.transitions[static_cast<std::size_t>(i)].relation);
                    c.transition_index.push_back(i);
                  }
                  clauses.push_back(std::move(c));
                });
  if (gap) throw NotTotal(*gap);
  return clauses;
}

std::optional<Constraint> coverage_gap(const SystemSpec& spec,
                                       std::size_t max_regions) {
  auto guards = guards_of(spec);
  // The uncovered part is the conjunction of all negated guards; walk the
  // same disjoint expansion with an empty include set.
  std::optional<Constraint> gap;
  std::size_t seen = 0;
  std::vector<int> in_set;
  struct Found {};
  try {
    split_regions(guards, 0, Constraint::truth(), in_set,
                  [&](const Constraint& region, const std::vector<int>& s) {
                    if (++seen > max_regions)
                      throw SizeLimit("coverage_gap: region expansion too large");
                    if (s.empty()) {
                      gap = region;
                      throw Found{};
                    }
                  });
  } catch (const Found&) {
  }
  return gap;
}

std::vector<Diagnostic> validate(const SystemSpec& spec) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string m) {
    out.push_back({Diagnostic::Severity::Error, std::move(m)});
  };
  auto warning = [&](std::string m) {
    out.push_back({Diagnostic::Severity::Warning, std::move(m)});
  };

  if (spec.schema.arity() == 0) error("empty state schema");
  if (spec.inits.empty()) error("no init constraint");
  if (spec.transitions.empty()) error("no transitions");
  for (std::size_t i = 0; i < spec.inits.size(); ++i)
    if (!satisfiable(spec.inits[i]))
      error("init constraint " + std::to_string(i + 1) + " is unsatisfiable");
  for (const auto& t : spec.transitions)
    if (!satisfiable(t.relation))
      error("transition '" + t.name + "' has an unsatisfiable relation");
  for (const auto& e : spec.elems)
    if (!satisfiable(e.cond))
      warning("elementary property '" + e.name + "' is unsatisfiable");

  std::set<std::string> declared;
  for (const auto& e : spec.elems) declared.insert(e.name);
  std::set<std::string> used;
  collect_elem_names(spec.property, used);
  for (const auto& n : used)
    if (!declared.count(n))
      error("property uses undeclared elementary property '" + n + "'");

  bool ok = true;
  for (const auto& d : out)
    if (d.severity == Diagnostic::Severity::Error) ok = false;
  if (ok) {
    bool needs_ts = contains_af(desugar(spec.property));
    auto gap = coverage_gap(spec);
    if (gap) {
      std::string msg = "transition relation is not total, e.g. states with " +
                        to_string(*gap, [&](VarId v) {
                          return spec.schema.names[static_cast<std::size_t>(v)];
                        });
      if (needs_ts)
        error(msg + " (af requires a total transition relation)");
      else
        warning(msg);
    }
  }
  return out;
}

EncodedProgram encode(const SystemSpec& spec, std::size_t max_ts_clauses) {
  EncodedProgram p;
  p.spec = spec;
  p.property_desugared = desugar(spec.property);
  if (contains_af(p.property_desugared))
    p.ts = derive_ts(spec, max_ts_clauses);
  return p;
}

}  // namespace ctlspec
