// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ctlspec/system.hpp"

namespace ctlspec {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        column(col_) {}
};

// Parses a conjunction of linear relations, e.g. "x1 <= 0, x2 = x1 + 1".
// Relators: <=, <, >=, >, = (an equation expands to two inequations).
// `vars` maps identifiers to VarIds; primed state variables are ordinary
// entries of the map ("x1'" -> k).
Constraint parse_constraint(std::string_view text,
                            const std::map<std::string, VarId>& vars);

// Parses a system description:
//   system IDENT ;
//   vars IDENT (, IDENT)* ;
//   (init constraint ;)+
//   (trans IDENT : constraint ;)+
//   (elem IDENT : constraint ;)*
//   prop ctl ;
// with // line comments. Transition constraints may use primed variables for
// the next state. Signals ParseError with position on malformed input.
SystemSpec parse_spec(std::string_view text);

SystemSpec parse_spec_file(const std::string& path);

}  // namespace ctlspec
