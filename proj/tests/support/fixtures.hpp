// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ctlspec/constraint.hpp"
#include "ctlspec/parser.hpp"

namespace ctlspec::testing {

// Shared variable table for constraint literals in tests:
// x1..x4 -> 0..3, y1..y4 -> 4..7.
const std::map<std::string, VarId>& test_vars();

// Parses a constraint over the test variable table.
Constraint pc(std::string_view text);

// Bidirectional entailment (solution-set equality).
bool equivalent(const Constraint& a, const Constraint& b);

// A rational solution of a satisfiable constraint, found by projecting
// variables away and back-substituting bounds.
std::optional<std::vector<Rat>> find_point(const Constraint& c);

// Conjoins c with Xv = value for every map entry.
Constraint substitute(const Constraint& c, const std::map<VarId, Int>& values);

// Random satisfiable constraint: at most max_atoms atoms over variables
// 0..num_vars-1 with coefficients and constants in [-bound, bound].
// Retries until satisfiable.
Constraint random_constraint(std::mt19937& rng, int num_vars, int max_atoms,
                             int bound);

// Entailment-weakened copy: drops atoms and relaxes constants, so the result
// is entailed by c.
Constraint weaken(std::mt19937& rng, const Constraint& c);

}  // namespace ctlspec::testing
