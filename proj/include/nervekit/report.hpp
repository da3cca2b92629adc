#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace nervekit {

struct Violation {
  std::string rule;     // short identifier, e.g. "d_i d_j"
  std::string witness;  // human-readable location of the failure
};

/// Result of a validation pass. Empty means every checked invariant holds.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t size() const { return violations.size(); }
  void add(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }
  void append(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) violations.push_back({v.rule, prefix + v.witness});
  }
};

/// One line of a run report.
struct CheckResult {
  std::string check;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::int64_t>> bounds;

  CheckResult() = default;
  explicit CheckResult(std::string name) : check(std::move(name)) {}
  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
  void absorb(const ValidationReport& r, std::size_t max_witnesses = 16) {
    if (r.ok()) return;
    pass = false;
    for (std::size_t i = 0; i < r.violations.size() && i < max_witnesses; ++i)
      witnesses.push_back(r.violations[i].rule + ": " + r.violations[i].witness);
  }
};

/// Thrown when loaded data violates an invariant; carries the report.
class ValidationError : public std::exception {
 public:
  explicit ValidationError(ValidationReport r);
  const char* what() const noexcept override { return message_.c_str(); }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
  std::string message_;
};

}  // namespace nervekit
