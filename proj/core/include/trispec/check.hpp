#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace trispec {

/// Outcome of one exhaustive check. On failure the witness names the
/// elements that break the law.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct CheckList {
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
};

}  // namespace trispec
