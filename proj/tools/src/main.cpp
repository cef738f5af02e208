// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctlspec/bench.hpp"
#include "ctlspec/parser.hpp"
#include "ctlspec/runner.hpp"

namespace {

using namespace ctlspec;

struct CommonOpts {
  std::string firing = "always";
  std::string gen = "wm";
  int timeout_ms = 100000;
  int max_bottomup_iters = 1000;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--firing", o.firing,
                  "Firing relation: always, maxcoeff, sumcoeff, homeocoeff")
      ->capture_default_str();
  cmd->add_option("--gen", o.gen,
                  "Generalization operator: top, w, wm, ws, chm, chs, chwm, "
                  "chws")
      ->capture_default_str();
  cmd->add_option("--timeout-ms", o.timeout_ms, "Budget for both phases")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-bottomup-iters", o.max_bottomup_iters,
                  "Fixpoint iteration cap per stratum")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "Emit the report as JSON");
}

// Exits with code 3 on unknown enum names.
FiringRelation firing_of(const std::string& s) {
  if (auto f = firing_from_string(s)) return *f;
  std::fprintf(stderr, "unknown firing relation '%s'\n", s.c_str());
  std::exit(3);
}

GenOp genop_of(const std::string& s) {
  if (auto g = genop_from_string(s)) return *g;
  std::fprintf(stderr, "unknown generalization operator '%s'\n", s.c_str());
  std::exit(3);
}

int cmd_verify(const std::string& file, const CommonOpts& o,
               const std::string& emit_specialized,
               const std::string& emit_model) {
  SystemSpec spec;
  try {
    spec = parse_spec_file(file);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "%s: %s\n", file.c_str(), e.what());
    return 3;
  }
  bool bad = false;
  for (const Diagnostic& d : validate(spec)) {
    bool err = d.severity == Diagnostic::Severity::Error;
    bad |= err;
    std::fprintf(stderr, "%s: %s: %s\n", file.c_str(),
                 err ? "error" : "warning", d.message.c_str());
  }
  if (bad) return 3;

  RunConfig rc;
  rc.firing = firing_of(o.firing);
  rc.genop = genop_of(o.gen);
  rc.timeout_ms = o.timeout_ms;
  rc.max_bottomup_iters = o.max_bottomup_iters;
  rc.emit_specialized = emit_specialized;
  rc.emit_model = emit_model;
  rc.format = o.json ? ReportFormat::Json : ReportFormat::Text;

  RunReport rep;
  try {
    rep = run(spec, rc);
  } catch (const EmitError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }
  std::string out = o.json ? to_json(rep) : to_text(rep);
  std::fputs(out.c_str(), stdout);
  return exit_code(rep.verdict);
}

int cmd_bench(const std::string& dir, const CommonOpts& o,
              const std::vector<std::string>& firings,
              const std::vector<std::string>& gens,
              const std::string& emit_dir) {
  std::vector<BenchConfig> configs;
  std::vector<std::string> fs = firings.empty()
                                    ? std::vector<std::string>{o.firing}
                                    : firings;
  std::vector<std::string> gs =
      gens.empty() ? std::vector<std::string>{o.gen} : gens;
  for (const std::string& f : fs)
    for (const std::string& g : gs)
      configs.push_back({firing_of(f), genop_of(g)});

  BenchOptions opts;
  opts.timeout_ms = o.timeout_ms;
  opts.max_bottomup_iters = o.max_bottomup_iters;
  opts.emit_specialized_dir = emit_dir;

  BenchMatrix m;
  try {
    m = bench(dir, configs, opts);
  } catch (const EmitError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }
  std::string out = o.json ? to_json(m) : to_csv(m);
  std::fputs(out.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CTL verifier for constraint-based infinite-state systems"};
  app.set_version_flag("--version", "ctlspec 0.1.0");
  app.require_subcommand(1);

  CommonOpts vo;
  std::string spec_file;
  std::string emit_specialized;
  std::string emit_model;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify one system spec and print a report");
  verify->add_option("spec", spec_file, "Path to a .spec file")->required();
  add_common(verify, vo);
  verify->add_option("--emit-specialized", emit_specialized,
                     "Dump the specialized program to this path");
  verify->add_option("--emit-model", emit_model,
                     "Dump the final fact table to this path");

  CommonOpts bo;
  std::string bench_dir;
  std::string emit_dir;
  std::vector<std::string> firings;
  std::vector<std::string> gens;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Run every .spec in a directory across configurations");
  bench_cmd->add_option("dir", bench_dir, "Directory of .spec files")
      ->required();
  add_common(bench_cmd, bo);
  bench_cmd->add_option("--firings", firings,
                        "Firing relations to sweep (default: --firing)");
  bench_cmd->add_option("--gens", gens,
                        "Generalization operators to sweep (default: --gen)");
  bench_cmd->add_option("--emit-specialized-dir", emit_dir,
                        "Dump each run's specialized program into this "
                        "directory");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed())
    return cmd_verify(spec_file, vo, emit_specialized, emit_model);
  return cmd_bench(bench_dir, bo, firings, gens, emit_dir);
}
