// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ctlspec/constraint.hpp"
#include "ctlspec/wqo.hpp"

namespace ctlspec {

// Generalization operators. Given constraints c (ancestor) and d (candidate),
// each returns a constraint entailed by d that also drives the associated
// firing relation towards termination:
//
//   Top    true
//   W      the atoms of c entailed by d (classical widening)
//   WM     W plus the atoms of d bounded, op- and maxcoeff-wise, by some
//          atom of c
//   WS     likewise with sumcoeff
//   ChM    the atoms of a minimized convex hull of c and d bounded by some
//          atom of c under the maxcoeff relation
//   ChS    likewise with sumcoeff
//   ChWM   WM applied to c and the convex hull of c and d
//   ChWS   WS applied to c and the convex hull of c and d
enum class GenOp { Top, W, WM, WS, ChM, ChS, ChWM, ChWS };

// Result is canonical with redundant atoms removed.
Constraint generalize(GenOp op, const Constraint& c, const Constraint& d);

// Firing relation each operator is paired with in the verifier loop. Top and
// W terminate under any of the thin wqos; the convention here pairs them
// with Maxcoeff.
FiringRelation default_firing(GenOp op);

std::string to_string(GenOp op);
std::optional<GenOp> genop_from_string(std::string_view s);

}  // namespace ctlspec
