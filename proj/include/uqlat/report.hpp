#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace uqlat {

struct CheckResult {
  std::string check;     // check id
  std::string instance;  // instance descriptor
  bool pass = false;
  std::string witness;   // valuation slack, counterexample, ...
};

// Deterministically ordered result list for one verification suite.
struct Report {
  std::string suite;
  std::map<std::string, std::string> meta;  // seed, parameters
  std::vector<CheckResult> checks;

  void add(std::string check, std::string instance, bool pass, std::string witness = "") {
    checks.push_back({std::move(check), std::move(instance), pass, std::move(witness)});
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  bool passed() const { return failures() == 0; }
};

}  // namespace uqlat
