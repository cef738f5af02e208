// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/runner.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ctlspec/bench.hpp"
#include "ctlspec/parser.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ctlspec;
using namespace ctlspec::testing;

namespace {

namespace fs = std::filesystem;

std::string models_dir() { return CTLSPEC_MODELS_DIR; }

SystemSpec load(const std::string& name) {
  return parse_spec_file(models_dir() + "/" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), {}};
}

// Fresh scratch directory, removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ctlspec_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

}  // namespace

TEST_CASE("the two-counter model verifies end to end") {
  SystemSpec spec = load("example1.spec");
  TempDir tmp;

  RunConfig cfg;
  cfg.genop = GenOp::W;
  cfg.emit_specialized = (tmp.path / "spec.pls").string();
  cfg.emit_model = (tmp.path / "model.pls").string();

  RunReport r = run(spec, cfg);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.reason.empty());
  CHECK(r.definitions == 2);
  CHECK(r.clauses == 4);
  CHECK(r.facts == 1);
  CHECK(r.gen_steps == GenCounters{1, 1, 1});
  CHECK(r.specialize_ms >= 0);
  CHECK(r.total_ms >= r.specialize_ms + r.bottomup_ms);

  std::string program = slurp(cfg.emit_specialized);
  CHECK(program.find("prop :-") != std::string::npos);
  CHECK(slurp(cfg.emit_model) == "prop :- true\n");

  SUBCASE("emitted dumps are deterministic") {
    RunConfig again = cfg;
    again.emit_specialized = (tmp.path / "spec2.pls").string();
    again.emit_model = (tmp.path / "model2.pls").string();
    RunReport r2 = run(spec, again);
    CHECK(r2.verdict == r.verdict);
    CHECK(slurp(again.emit_specialized) == program);
    CHECK(slurp(again.emit_model) == slurp(cfg.emit_model));
  }
}

TEST_CASE("the un-negated reachability query is violated") {
  SystemSpec spec = load("example1.spec");
  spec.property = CtlFormula::eu(CtlFormula::truth(),
                                 CtlFormula::elem("negative"));

  RunReport r = run(spec, RunConfig{});
  CHECK(r.verdict == Verdict::Violated);
  CHECK(r.reason.empty());
}

TEST_CASE("budget and capacity failures surface as unknown") {
  SystemSpec spec = load("ticket_liveness.spec");

  SUBCASE("shared deadline") {
    RunConfig cfg;
    cfg.genop = GenOp::Top;
    cfg.timeout_ms = 300;
    RunReport r = run(spec, cfg);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.reason == "timeout");
  }

  SUBCASE("iteration cap on a diverging model construction") {
    RunConfig cfg;
    cfg.genop = GenOp::Top;
    cfg.max_bottomup_iters = 10;
    RunReport r = run(spec, cfg);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.reason == "bottomup-divergence");
  }
}

TEST_CASE("partial transition guards surface as unknown for af") {
  SystemSpec spec = parse_spec(
      "system partial;\n"
      "vars x1;\n"
      "init x1 = 0;\n"
      "trans t: x1 >= 1, x1' = x1;\n"
      "elem done: x1 >= 1;\n"
      "prop af(done);\n");

  RunReport r = run(spec, RunConfig{});
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.reason == "not-total");
}

TEST_CASE("dump write failures are the only hard runner errors") {
  SystemSpec spec = load("example1.spec");
  RunConfig cfg;
  cfg.emit_model = "/nonexistent-dir/model.pls";
  CHECK_THROWS_AS(run(spec, cfg), EmitError);
}

TEST_CASE("reports round-trip through JSON") {
  SystemSpec spec = load("example1.spec");
  RunReport r = run(spec, RunConfig{});
  CHECK(report_from_json(to_json(r)) == r);

  RunReport u;
  u.verdict = Verdict::Unknown;
  u.reason = "timeout";
  u.gen_steps = GenCounters{3, 1, 4};
  CHECK(report_from_json(to_json(u)) == u);

  SUBCASE("text rendering names the verdict and counters") {
    std::string t = to_text(r);
    CHECK(t.find("verdict: VERIFIED") != std::string::npos);
    CHECK(t.find("gen_steps: reuse=") != std::string::npos);
    CHECK(to_text(u).find("verdict: UNKNOWN (timeout)") != std::string::npos);
  }

  SUBCASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(report_from_json("not json"), InvalidInput);
    CHECK_THROWS_AS(report_from_json("{}"), InvalidInput);
    CHECK_THROWS_AS(report_from_json(R"({"verdict": "MAYBE"})"), InvalidInput);
  }
}

TEST_CASE("verdicts map onto process exit codes") {
  CHECK(exit_code(Verdict::Verified) == 0);
  CHECK(exit_code(Verdict::Violated) == 1);
  CHECK(exit_code(Verdict::Unknown) == 2);
}

TEST_CASE("benchmark sweeps keep going past bad inputs") {
  TempDir tmp;
  fs::copy_file(models_dir() + "/example1.spec", tmp.path / "good.spec");
  std::ofstream(tmp.path / "broken.spec") << "system oops;\nvars;\n";
  std::ofstream(tmp.path / "ignored.txt") << "not a model\n";

  std::vector<BenchConfig> configs{{FiringRelation::Always, GenOp::W}};
  BenchOptions opts;
  opts.emit_specialized_dir = (tmp.path / "dumps").string();
  fs::create_directories(opts.emit_specialized_dir);

  BenchMatrix m = bench(tmp.path.string(), configs, opts);
  REQUIRE(m.models == std::vector<std::string>{"broken", "good"});
  REQUIRE(m.cells.size() == 2);
  REQUIRE(m.cells[0].size() == 1);

  CHECK(m.cells[0][0].input_error);
  CHECK(!m.cells[0][0].error.empty());
  CHECK(!m.cells[1][0].input_error);
  CHECK(m.cells[1][0].report.verdict == Verdict::Verified);

  CHECK(verdict_text(m.cells[0][0]) == "input-error");
  CHECK(verdict_text(m.cells[1][0]) == "VERIFIED");
  CHECK(time_text(m.cells[0][0]) == "-");

  CHECK(fs::exists(fs::path(opts.emit_specialized_dir) / "good.always-w.pls"));
  CHECK(!fs::exists(fs::path(opts.emit_specialized_dir) /
                    "broken.always-w.pls"));

  SUBCASE("CSV lists one column pair per config") {
    std::string csv = to_csv(m);
    CHECK(csv.find("model,always+w verdict,always+w ms") == 0);
    CHECK(csv.find("broken,input-error,-") != std::string::npos);
    CHECK(csv.find("good,VERIFIED,") != std::string::npos);
  }

  SUBCASE("JSON names models and configs") {
    std::string j = to_json(m);
    CHECK(j.find("\"good\"") != std::string::npos);
    CHECK(j.find("\"always+w\"") != std::string::npos);
    CHECK(j.find("\"input_error\"") != std::string::npos);
  }
}

TEST_CASE("benchmark cells render timeouts as unbounded") {
  BenchCell c;
  c.report.verdict = Verdict::Unknown;
  c.report.reason = "timeout";
  c.report.total_ms = 12345;
  CHECK(verdict_text(c) == "UNKNOWN(timeout)");
  CHECK(time_text(c) == "∞");

  c.report.reason = "bottomup-divergence";
  CHECK(time_text(c) == "12345");
}

TEST_CASE("an empty benchmark directory yields an empty matrix") {
  TempDir tmp;
  std::vector<BenchConfig> configs{{FiringRelation::Always, GenOp::WM}};
  BenchMatrix m = bench(tmp.path.string(), configs);
  CHECK(m.models.empty());
  CHECK(m.cells.empty());
  CHECK(m.configs.size() == 1);

  BenchMatrix missing = bench((tmp.path / "nope").string(), configs);
  CHECK(missing.models.empty());
}
