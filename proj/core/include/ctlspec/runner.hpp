// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ctlspec/report.hpp"
#include "ctlspec/system.hpp"

namespace ctlspec {

struct EmitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs the full pipeline, encode then specialize then model construction,
// under the shared timeout. Internal failures surface as UNKNOWN with a
// reason; only dump-file write errors signal EmitError.
RunReport run(const SystemSpec& spec, const RunConfig& config);

}  // namespace ctlspec
