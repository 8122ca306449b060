#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ukb/bundle.hpp"
#include "ukb/json_io.hpp"

namespace ukb {

struct RunConfig {
  std::string command;
  std::string input_path;
  std::uint64_t seed = 42;
  int samples = 200;
  ToleranceConfig tol;
  std::string output;  // empty = stdout
};

struct Report {
  std::string command;
  bool pass = true;
  std::vector<CheckClause> checks;
  Json data = Json::object();

  void add(CheckClause clause) {
    pass = pass && clause.pass;
    checks.push_back(std::move(clause));
  }
  void merge(const CheckReport& r, const std::string& prefix);
};

// Dispatches on config.command; throws InputError for malformed input.
Report run(const RunConfig& config);

Json report_to_json(const Report& report);

// Full pipeline: run, serialize, write; returns the process exit code
// (0 pass, 1 property violation, 2 input error).
int run_cli(const RunConfig& config);

// The verify-all property suite for one algebra; clauses appended to report.
void verify_algebra(const std::string& name, const AlgebraPtr& a, int samples,
                    std::uint64_t seed, Report& report);

}  // namespace ukb
