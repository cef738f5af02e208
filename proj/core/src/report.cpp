// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/report.hpp"

#include "json.hpp"

namespace ctlspec {

namespace {

Verdict verdict_from_string(const std::string& s) {
  if (s == "VERIFIED") return Verdict::Verified;
  if (s == "VIOLATED") return Verdict::Violated;
  if (s == "UNKNOWN") return Verdict::Unknown;
  throw InvalidInput("report: unknown verdict '" + s + "'");
}

}  // namespace

std::string to_text(const RunReport& r) {
  std::string out;
  out += "verdict: " + to_string(r.verdict);
  if (!r.reason.empty()) out += " (" + r.reason + ")";
  out += '\n';
  out += "specialize_ms: " + std::to_string(r.specialize_ms) + '\n';
  out += "bottomup_ms: " + std::to_string(r.bottomup_ms) + '\n';
  out += "total_ms: " + std::to_string(r.total_ms) + '\n';
  out += "definitions: " + std::to_string(r.definitions) + '\n';
  out += "clauses: " + std::to_string(r.clauses) + '\n';
  out += "facts: " + std::to_string(r.facts) + '\n';
  out += "gen_steps: reuse=" + std::to_string(r.gen_steps.reuse) +
         " generalize=" + std::to_string(r.gen_steps.generalize) +
         " fresh=" + std::to_string(r.gen_steps.fresh) + '\n';
  return out;
}

std::string to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["specialize_ms"] = r.specialize_ms;
  j["bottomup_ms"] = r.bottomup_ms;
  j["total_ms"] = r.total_ms;
  j["definitions"] = r.definitions;
  j["clauses"] = r.clauses;
  j["facts"] = r.facts;
  j["gen_steps"] = {{"reuse", r.gen_steps.reuse},
                    {"generalize", r.gen_steps.generalize},
                    {"fresh", r.gen_steps.fresh}};
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    RunReport r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.reason = j.at("reason").get<std::string>();
    r.specialize_ms = j.at("specialize_ms").get<long long>();
    r.bottomup_ms = j.at("bottomup_ms").get<long long>();
    r.total_ms = j.at("total_ms").get<long long>();
    r.definitions = j.at("definitions").get<long long>();
    r.clauses = j.at("clauses").get<long long>();
    r.facts = j.at("facts").get<long long>();
    const auto& g = j.at("gen_steps");
    r.gen_steps.reuse = g.at("reuse").get<int>();
    r.gen_steps.generalize = g.at("generalize").get<int>();
    r.gen_steps.fresh = g.at("fresh").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("report: bad JSON: ") + e.what());
  }
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return 0;
    case Verdict::Violated:
      return 1;
    case Verdict::Unknown:
      return 2;
  }
  return 2;
}

}  // namespace ctlspec
