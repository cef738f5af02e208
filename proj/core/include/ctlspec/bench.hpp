// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ctlspec/report.hpp"

namespace ctlspec {

struct BenchConfig {
  FiringRelation firing = FiringRelation::Always;
  GenOp genop = GenOp::WM;
};

// Column label: "<firing>+<genop>".
std::string to_string(const BenchConfig& c);

struct BenchCell {
  bool input_error = false;
  std::string error;  // parse or validation message when input_error
  RunReport report;   // meaningful when !input_error
};

struct BenchMatrix {
  std::vector<std::string> models;  // sorted .spec file stems
  std::vector<BenchConfig> configs;
  std::vector<std::vector<BenchCell>> cells;  // [model][config]
};

struct BenchOptions {
  int timeout_ms = 100000;
  int max_bottomup_iters = 1000;
  // When nonempty, each run dumps its specialized program to
  // <dir>/<model>.<firing>-<genop>.pls.
  std::string emit_specialized_dir;
};

// Runs every .spec file in the directory (sorted by name) against every
// config. Per-model parse or validation failures are recorded in their row;
// the sweep continues. An empty or missing directory yields an empty matrix.
BenchMatrix bench(const std::string& directory,
                  const std::vector<BenchConfig>& configs,
                  const BenchOptions& options = {});

// Cell rendering: verdict and milliseconds, with a bare infinity sign for
// runs that timed out.
std::string verdict_text(const BenchCell& c);
std::string time_text(const BenchCell& c);

std::string to_csv(const BenchMatrix& m);
std::string to_json(const BenchMatrix& m);

}  // namespace ctlspec
