// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ctlspec/constraint.hpp"

namespace ctlspec {

// Firing relations on constraints, used to decide when a definition must be
// generalized against an ancestor. All four are reflexive and transitive on
// canonical constraints; Maxcoeff, Sumcoeff and Homeocoeff are thin wqos.
enum class FiringRelation { Always, Maxcoeff, Sumcoeff, Homeocoeff };

// Atom-level relation. Maxcoeff/Sumcoeff compare measures of atoms with the
// same RelOp; Homeocoeff asks for a permutation of coefficient positions
// 0..k (constant included) with |q_i| <= |r_perm(i)|, again op-respecting.
bool atomic_rel(FiringRelation rel, const AtomicConstraint& a,
                const AtomicConstraint& b);

// Constraint-level relation. Always holds universally; Maxcoeff/Sumcoeff need
// every atom of c1 below some atom of c2 (repetitions allowed); Homeocoeff
// needs an injective matching of the atoms of c1 into distinct atoms of c2.
bool fires(FiringRelation rel, const Constraint& c1, const Constraint& c2);

std::string to_string(FiringRelation rel);
std::optional<FiringRelation> firing_from_string(std::string_view s);

}  // namespace ctlspec
