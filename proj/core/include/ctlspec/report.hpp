// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "ctlspec/bottomup.hpp"
#include "ctlspec/generalize.hpp"
#include "ctlspec/specialize.hpp"
#include "ctlspec/wqo.hpp"

namespace ctlspec {

enum class ReportFormat { Text, Json };

struct RunConfig {
  FiringRelation firing = FiringRelation::Always;
  GenOp genop = GenOp::WM;
  int timeout_ms = 100000;  // shared budget for both phases
  int max_bottomup_iters = 1000;
  std::string emit_specialized;  // dump path, empty disables
  std::string emit_model;        // dump path, empty disables
  ReportFormat format = ReportFormat::Text;
};

struct RunReport {
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // set for Unknown
  long long specialize_ms = 0;
  long long bottomup_ms = 0;
  long long total_ms = 0;
  long long definitions = 0;  // predicates introduced beyond the query
  long long clauses = 0;      // clauses in the specialized program
  long long facts = 0;        // facts in the final model
  GenCounters gen_steps;

  bool operator==(const RunReport&) const = default;
};

std::string to_text(const RunReport& r);
std::string to_json(const RunReport& r);
// Inverse of to_json. Signals InvalidInput on malformed or incomplete JSON.
RunReport report_from_json(const std::string& text);

// 0 verified, 1 violated, 2 unknown.
int exit_code(Verdict v);

}  // namespace ctlspec
