// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ctlspec/parser.hpp"
#include "ctlspec/runner.hpp"
#include "json.hpp"

namespace ctlspec {

namespace fs = std::filesystem;

std::string to_string(const BenchConfig& c) {
  return to_string(c.firing) + "+" + to_string(c.genop);
}

BenchMatrix bench(const std::string& directory,
                  const std::vector<BenchConfig>& configs,
                  const BenchOptions& options) {
  BenchMatrix m;
  m.configs = configs;

  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(directory, ec))
    if (entry.path().extension() == ".spec") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  for (const fs::path& file : files) {
    std::string stem = file.stem().string();
    m.models.push_back(stem);
    std::vector<BenchCell>& row = m.cells.emplace_back();

    std::string problem;
    std::optional<SystemSpec> spec;
    try {
      SystemSpec parsed = parse_spec_file(file.string());
      for (const Diagnostic& d : validate(parsed))
        if (d.severity == Diagnostic::Severity::Error) {
          problem = d.message;
          break;
        }
      if (problem.empty()) spec = std::move(parsed);
    } catch (const ParseError& e) {
      problem = e.what();
    }

    for (const BenchConfig& cfg : configs) {
      BenchCell& cell = row.emplace_back();
      if (!spec) {
        cell.input_error = true;
        cell.error = problem;
        continue;
      }
      RunConfig rc;
      rc.firing = cfg.firing;
      rc.genop = cfg.genop;
      rc.timeout_ms = options.timeout_ms;
      rc.max_bottomup_iters = options.max_bottomup_iters;
      if (!options.emit_specialized_dir.empty())
        rc.emit_specialized = (fs::path(options.emit_specialized_dir) /
                               (stem + "." + to_string(cfg.firing) + "-" +
                                to_string(cfg.genop) + ".pls"))
                                  .string();
      cell.report = run(*spec, rc);
    }
  }
  return m;
}

std::string verdict_text(const BenchCell& c) {
  if (c.input_error) return "input-error";
  if (c.report.verdict == Verdict::Unknown)
    return "UNKNOWN(" + c.report.reason + ")";
  return to_string(c.report.verdict);
}

std::string time_text(const BenchCell& c) {
  if (c.input_error) return "-";
  if (c.report.verdict == Verdict::Unknown && c.report.reason == "timeout")
    return "∞";
  return std::to_string(c.report.total_ms);
}

std::string to_csv(const BenchMatrix& m) {
  std::ostringstream out;
  out << "model";
  for (const BenchConfig& c : m.configs) {
    std::string label = to_string(c);
    out << "," << label << " verdict," << label << " ms";
  }
  out << "\n";
  for (size_t i = 0; i < m.models.size(); ++i) {
    out << m.models[i];
    for (const BenchCell& cell : m.cells[i])
      out << "," << verdict_text(cell) << "," << time_text(cell);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const BenchMatrix& m) {
  nlohmann::ordered_json j;
  j["models"] = m.models;
  j["configs"] = nlohmann::json::array();
  for (const BenchConfig& c : m.configs) j["configs"].push_back(to_string(c));
  j["cells"] = nlohmann::json::array();
  for (const auto& row : m.cells) {
    nlohmann::ordered_json jrow = nlohmann::json::array();
    for (const BenchCell& cell : row) {
      nlohmann::ordered_json jc;
      if (cell.input_error) {
        jc["input_error"] = true;
        jc["error"] = cell.error;
      } else {
        jc["verdict"] = to_string(cell.report.verdict);
        jc["reason"] = cell.report.reason;
        jc["total_ms"] = cell.report.total_ms;
        jc["timeout"] = cell.report.verdict == Verdict::Unknown &&
                        cell.report.reason == "timeout";
      }
      jrow.push_back(jc);
    }
    j["cells"].push_back(jrow);
  }
  return j.dump(2) + "\n";
}

}  // namespace ctlspec
