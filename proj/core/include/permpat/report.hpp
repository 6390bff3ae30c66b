#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// One named pass/fail entry of a check report.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

inline const CheckResult* find_check(const std::vector<CheckResult>& checks,
                                     std::string_view name) {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace permpat
