#pragma once

#include <string>
#include <vector>

namespace centerpoint {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks. Verification routines report
/// failures here instead of throwing.
class VerificationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const VerificationReport& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }
  bool ok() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const std::vector<CheckResult>& checks() const { return checks_; }
  /// True when a check with this name exists and failed.
  bool failed(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name && !c.passed) return true;
    return false;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace centerpoint
