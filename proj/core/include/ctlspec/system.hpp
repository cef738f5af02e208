// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctlspec/constraint.hpp"
#include "ctlspec/ctl.hpp"

namespace ctlspec {

// State variables X1..Xk are VarIds 0..k-1. Transition relations are
// constraints over 2k variables: current state 0..k-1, next state k..2k-1.
struct StateSchema {
  std::vector<std::string> names;
  int arity() const { return static_cast<int>(names.size()); }
};

struct Transition {
  std::string name;
  Constraint relation;  // over (X, X')
};

struct ElemProp {
  std::string name;
  Constraint cond;  // over X
};

struct SystemSpec {
  std::string name;
  StateSchema schema;
  std::vector<Constraint> inits;  // each over X
  std::vector<Transition> transitions;
  std::vector<ElemProp> elems;
  CtlRef property;
};

// One clause of the derived ts relation: a region of states together with the
// ordered list of successor updates that apply there. Regions across the
// clause set are pairwise disjoint and jointly cover the union of the guards.
struct TsClause {
  Constraint region;                  // over X
  std::vector<Constraint> updates;    // each over (X, X'), in transition order
  std::vector<int> transition_index;  // provenance, same length as updates
};

struct NotTotal : std::runtime_error {
  Constraint witness;  // a satisfiable region with no outgoing transition
  explicit NotTotal(Constraint w)
      : std::runtime_error("transition relation is not total"),
        witness(std::move(w)) {}
};

struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derives the ts clause set by splitting the state space on every guard.
// Signals NotTotal when the guards do not cover all states and SizeLimit when
// the region expansion exceeds max_clauses.
std::vector<TsClause> derive_ts(const SystemSpec& spec,
                                std::size_t max_clauses = 512);

// Returns a satisfiable region no guard covers, if one exists.
std::optional<Constraint> coverage_gap(const SystemSpec& spec,
                                       std::size_t max_regions = 4096);

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity;
  std::string message;
};

// Checks satisfiable inits and transition relations, declared elem names in
// the property, and guard coverage. Non-totality is an error only when the
// desugared property uses af (ts is only derived then), otherwise a warning.
std::vector<Diagnostic> validate(const SystemSpec& spec);

// The encoded verification problem: the system plus ts clauses when needed.
struct EncodedProgram {
  SystemSpec spec;
  CtlRef property_desugared;
  std::optional<std::vector<TsClause>> ts;
};

EncodedProgram encode(const SystemSpec& spec, std::size_t max_ts_clauses = 512);

}  // namespace ctlspec
