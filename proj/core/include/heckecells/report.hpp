// Line-oriented verification reports: one ok / not ok entry per check with
// a structured trailer, plus a JSON rendering of the same data.
#pragma once

#include "heckecells/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hc {

struct CheckResult {
  enum class Status { Pass, Fail, Skipped, Finding };
  std::string id;
  Status status = Status::Pass;
  size_t checked = 0;  // instances examined
  std::string summary;
  std::vector<std::string> witnesses;
  std::vector<std::string> caveats;

  static CheckResult pass(std::string id, size_t checked, std::string summary = "");
  static CheckResult fail(std::string id, size_t checked, std::string summary,
                          std::vector<std::string> witnesses);
  static CheckResult skipped(std::string id, std::string why);
  void add_witness(const std::string& w, size_t cap = 6);
  void note_caveat(const std::string& c);
};

struct VerificationReport {
  std::string title;
  std::string region_label;
  std::optional<WeightSpec> weights;
  int radius = 0;
  std::vector<CheckResult> checks;

  /// Findings count as passes (recomputation takes precedence over quoted
  /// identities); Skipped counts as pass only when lenient.
  bool all_pass(bool lenient_skip = true) const;
  void append(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const VerificationReport& other);
};

std::string render_tap(const VerificationReport& rep);
std::string render_json(const VerificationReport& rep);

}  // namespace hc
