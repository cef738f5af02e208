// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/runner.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include "ctlspec/specialize.hpp"

namespace ctlspec {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) throw EmitError("cannot write dump file: " + path);
}

}  // namespace

RunReport run(const SystemSpec& spec, const RunConfig& config) {
  RunReport rep;
  const Clock::time_point start = Clock::now();
  const Clock::time_point deadline =
      start + std::chrono::milliseconds(config.timeout_ms);
  std::optional<SpecializedProgram> sp;

  try {
    EncodedProgram prog = encode(spec);

    SpecConfig sc;
    sc.firing = config.firing;
    sc.genop = config.genop;
    sc.deadline = deadline;
    const Clock::time_point t0 = Clock::now();
    sp = specialize(prog, sc);
    rep.specialize_ms = ms_between(t0, Clock::now());
    rep.definitions = static_cast<long long>(sp->tree.nodes.size()) - 1;
    rep.clauses = static_cast<long long>(sp->clauses.size());
    rep.gen_steps = sp->gen_steps;

    BottomupLimits lim;
    lim.max_iterations = config.max_bottomup_iters;
    lim.deadline = deadline;
    const Clock::time_point t1 = Clock::now();
    BottomupResult br = bottom_up(sp->clauses, lim);
    rep.bottomup_ms = ms_between(t1, Clock::now());
    rep.verdict = br.verdict;
    rep.reason = br.reason;
    rep.facts = static_cast<long long>(br.model.fact_count());

    if (!config.emit_model.empty())
      write_file(config.emit_model, br.model.dump(spec.schema.arity()));
  } catch (const EmitError&) {
    throw;
  } catch (const TimeLimit&) {
    rep.reason = "timeout";
  } catch (const StepLimit&) {
    rep.reason = "specialize-step-limit";
  } catch (const NotTotal&) {
    rep.reason = "not-total";
  } catch (const SizeLimit&) {
    rep.reason = "size-limit";
  } catch (const std::exception&) {
    rep.reason = "internal-error";
  }

  if (sp && !config.emit_specialized.empty())
    write_file(config.emit_specialized, dump(sp->clauses) + "\n");

  rep.total_ms = ms_between(start, Clock::now());
  return rep;
}

}  // namespace ctlspec
