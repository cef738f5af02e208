// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ctlspec/clp.hpp"
#include "ctlspec/generalize.hpp"
#include "ctlspec/system.hpp"
#include "ctlspec/wqo.hpp"

namespace ctlspec {

struct TimeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StepLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecConfig {
  FiringRelation firing = FiringRelation::Always;
  GenOp genop = GenOp::WM;
  // Safety bounds. Specialization terminates for every firing relation and
  // generalization operator; the bounds only guard against encoding bugs.
  int max_unfold_steps = 100000;
  int max_definitions = 100000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Whether the processed definition itself counts as an ancestor candidate
  // when searching for a generalization anchor.
  bool ancestor_includes_self = true;
};

struct GenCounters {
  int reuse = 0;       // folded with an existing definition
  int generalize = 0;  // new definition from the generalization operator
  int fresh = 0;       // new definition from the bare projection

  bool operator==(const GenCounters&) const = default;
};

struct SpecializedProgram {
  std::vector<SpecClause> clauses;  // the prop clause first, then each folded set
  DefinitionTree tree;
  GenCounters gen_steps;
};

// Resolves the literal at `position` against every matching program clause;
// one output clause per match whose conjoined constraint is satisfiable.
std::vector<SpecClause> unfold_once(const SpecClause& clause,
                                    std::size_t position,
                                    const EncodedProgram& program);

// True for literal forms the unfolding loop may select: init, t, ts, elem,
// sat over an elementary property / true / not / and / ex, and sat_all over a
// concrete list. Sat literals topped by eu or af, negated sat literals, and
// definition literals are never selected.
bool selectable(const BodyLiteral& lit);

// Unfolds the clause of the given definition: once at its leftmost program
// literal (this is where an eu- or af-topped formula receives its single
// unfolding), then the leftmost selectable literal to exhaustion, then
// removes clauses subsumed by an empty-bodied clause.
std::vector<SpecClause> unfold(DefId def, const DefinitionTree& tree,
                               const EncodedProgram& program,
                               const SpecConfig& config);

// Folds every sat literal left in `clauses` with a definition: an existing
// one covering the projected context, else a generalization against the
// nearest firing ancestor, else a fresh projection. New definitions join the
// tree as children of `gamma` and are queued for processing.
std::vector<SpecClause> generalize_and_fold(DefId gamma,
                                            std::vector<SpecClause> clauses,
                                            DefinitionTree& tree,
                                            const SpecConfig& config,
                                            GenCounters& counters);

SpecializedProgram specialize(const EncodedProgram& program,
                              const SpecConfig& config = {});

}  // namespace ctlspec
