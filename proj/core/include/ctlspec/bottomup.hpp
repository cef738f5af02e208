// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctlspec/clp.hpp"

namespace ctlspec {

struct NotStratified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constrained fact: all ground instances of pred's tuple satisfying the
// constraint, which is kept satisfiable and over the canonical tuple.
struct Fact {
  PredRef pred;
  Constraint constraint;
};

// Per-predicate fact lists with completion flags. Fact-wise subsumption is
// maintained on insert: no stored constraint entails another stored one.
class ModelTable {
 public:
  // Returns true when the table changed (the fact was not subsumed).
  bool insert(Fact f);
  const std::vector<Constraint>& facts(const PredRef& p) const;
  bool complete(const PredRef& p) const { return complete_.count(p) > 0; }
  void mark_complete(const PredRef& p) { complete_.insert(p); }
  std::size_t fact_count() const;
  const std::map<PredRef, std::vector<Constraint>>& all() const {
    return facts_;
  }
  // One line per fact: `pred(X1,...,Xk) :- constraint`.
  std::string dump(int arity) const;

 private:
  std::map<PredRef, std::vector<Constraint>> facts_;
  std::set<PredRef> complete_;
};

struct Stratification {
  std::map<PredRef, int> level;
  int max_level = 0;
};

// Least stratification of the predicate dependency graph: clause heads sit
// at least as high as positive body predicates and strictly higher than
// negative ones. Signals NotStratified on a negative cycle.
Stratification stratify(const std::vector<SpecClause>& clauses);

// The constraints covering context minus the union of the facts, as a
// disjoint list of satisfiable constraints (facts and context share one
// variable space). Signals SizeLimit when the expansion exceeds the bound.
std::vector<Constraint> negate_facts(const std::vector<Constraint>& facts,
                                     const Constraint& context,
                                     std::size_t max_branches = 4096);

// One round of the non-ground immediate consequence operator over the given
// clauses: joins positive definition literals against current facts,
// evaluates negated ones against completed predicates, projects onto heads.
std::vector<Fact> immediate_consequences(
    const std::vector<SpecClause>& clauses, const ModelTable& model,
    std::size_t max_branches = 4096);

struct BottomupLimits {
  int max_iterations = 1000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::size_t max_branches = 4096;
};

enum class FixpointStatus { Completed, Diverged, TimedOut };

// Iterates immediate_consequences over one stratum until nothing new is
// derivable, or a limit is hit.
FixpointStatus fixpoint(const std::vector<SpecClause>& clauses,
                        ModelTable& model, const BottomupLimits& limits);

enum class Verdict { Verified, Violated, Unknown };

std::string to_string(Verdict v);

struct BottomupResult {
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // set for Unknown
  ModelTable model;
};

// Builds the perfect model stratum by stratum. Verified iff prop is derived;
// Violated iff every stratum completed and prop is absent; Unknown with a
// reason otherwise.
BottomupResult bottom_up(const std::vector<SpecClause>& clauses,
                         const BottomupLimits& limits = {});

}  // namespace ctlspec
