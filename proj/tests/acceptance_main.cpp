// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one [PASS]/[FAIL] line per criterion.
//
//   fockent_acceptance [--seed S] [--criterion N] [--cli PATH]
//
// With --cli, criterion 10 also launches `PATH verify --seed S` twice as
// separate processes and compares output bytes and exit statuses.

#include <fockent/acceptance.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct ProcessRun {
  int status = -1;
  std::string csv;
  std::string json;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProcessRun run_verify(const std::string& cli, std::uint64_t seed, const std::string& tag) {
  ProcessRun r;
  const std::string base = "fockent_verify_" + tag;
  const std::string prefix = cli + " verify --seed " + std::to_string(seed);
  const int raw = std::system((prefix + " --out " + base + ".csv 2>/dev/null").c_str());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  const int raw_json = std::system((prefix + " --format json --out " + base + ".json 2>/dev/null").c_str());
  if (!WIFEXITED(raw_json) || WEXITSTATUS(raw_json) != r.status) r.status = -1;
  r.csv = slurp(base + ".csv");
  r.json = slurp(base + ".json");
  return r;
}

fockent::CriterionResult process_determinism(const std::string& cli, std::uint64_t seed) {
  fockent::CriterionResult r{10, "cli_determinism", {}};
  const ProcessRun a = run_verify(cli, seed, "a");
  const ProcessRun b = run_verify(cli, seed, "b");
  r.worst("verify output missing", a.csv.empty() || a.json.empty() ? 1.0 : 0.0, 0.0);
  r.worst("two verify runs differ (CSV bytes)", a.csv == b.csv ? 0.0 : 1.0, 0.0);
  r.worst("two verify runs differ (JSON bytes)", a.json == b.json ? 0.0 : 1.0, 0.0);
  r.worst("two verify runs differ (exit status)", a.status == b.status ? 0.0 : 1.0, 0.0);
  r.worst("verify exit status (must be 0)", static_cast<double>(a.status), 0.0);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  int only = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (i + 1 >= argc) {
      std::cerr << "missing value for " << a << '\n';
      return 2;
    }
    if (a == "--seed") seed = std::stoull(argv[++i]);
    else if (a == "--criterion") only = std::stoi(argv[++i]);
    else if (a == "--cli") cli = argv[++i];
    else {
      std::cerr << "unknown argument " << a << '\n';
      return 2;
    }
  }
  if (only < 0 || only > fockent::kCriterionCount) {
    std::cerr << "--criterion must be 1.." << fockent::kCriterionCount << '\n';
    return 2;
  }

  std::vector<fockent::CriterionResult> results;
  try {
    if (only >= 1 && only < fockent::kCriterionCount) {
      results.push_back(fockent::run_criterion(only, seed));
    } else if (only == fockent::kCriterionCount) {
      std::vector<fockent::CriterionResult> first;
      for (int id = 1; id < fockent::kCriterionCount; ++id) first.push_back(fockent::run_criterion(id, seed));
      results.push_back(fockent::criterion_determinism(seed, first));
    } else {
      results = fockent::run_acceptance(seed);
    }
    if (!cli.empty() && (only == 0 || only == fockent::kCriterionCount)) {
      auto proc = process_determinism(cli, seed);
      auto& ten = results.back();
      for (auto& c : proc.checks) ten.checks.push_back(std::move(c));
    }
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << '\n';
    return 4;
  }

  bool ok = true;
  for (const auto& r : results) {
    std::cout << fockent::criterion_line(r) << '\n';
    for (const auto& c : r.checks)
      std::cout << "    " << (c.kind == fockent::CheckKind::info ? "info" : (c.passed() ? "ok  " : "FAIL")) << "  "
                << c.name << ": " << fockent::format_double(c.measured)
                << (c.kind == fockent::CheckKind::info ? "" : " (bound " + fockent::format_double(c.bound) + ")")
                << ", " << c.cases << " cases\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
