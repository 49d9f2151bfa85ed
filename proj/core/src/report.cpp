#include "heckecells/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hc {

CheckResult CheckResult::pass(std::string id, size_t checked, std::string summary) {
  CheckResult r;
  r.id = std::move(id);
  r.status = Status::Pass;
  r.checked = checked;
  r.summary = std::move(summary);
  return r;
}

CheckResult CheckResult::fail(std::string id, size_t checked, std::string summary,
                              std::vector<std::string> witnesses) {
  CheckResult r;
  r.id = std::move(id);
  r.status = Status::Fail;
  r.checked = checked;
  r.summary = std::move(summary);
  r.witnesses = std::move(witnesses);
  return r;
}

CheckResult CheckResult::skipped(std::string id, std::string why) {
  CheckResult r;
  r.id = std::move(id);
  r.status = Status::Skipped;
  r.summary = std::move(why);
  return r;
}

void CheckResult::add_witness(const std::string& w, size_t cap) {
  status = Status::Fail;
  if (witnesses.size() < cap) witnesses.push_back(w);
}

void CheckResult::note_caveat(const std::string& c) {
  for (const auto& e : caveats)
    if (e == c) return;
  caveats.push_back(c);
}

bool VerificationReport::all_pass(bool lenient_skip) const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::Fail) return false;
    if (c.status == CheckResult::Status::Skipped && !lenient_skip) return false;
  }
  return true;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

namespace {

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "PASS";
    case CheckResult::Status::Fail: return "FAIL";
    case CheckResult::Status::Skipped: return "SKIPPED";
    default: return "FINDING";
  }
}

}  // namespace

std::string render_tap(const VerificationReport& rep) {
  std::ostringstream os;
  os << "# " << rep.title;
  if (!rep.region_label.empty()) os << " region=" << rep.region_label;
  if (rep.weights) os << " weights=" << rep.weights->render();
  if (rep.radius > 0) os << " radius=" << rep.radius;
  os << "\n";
  os << "1.." << rep.checks.size() << "\n";
  size_t n = 0;
  for (const auto& c : rep.checks) {
    ++n;
    bool ok = c.status != CheckResult::Status::Fail;
    os << (ok ? "ok " : "not ok ") << n << " - " << c.id;
    if (c.status == CheckResult::Status::Skipped) os << " # SKIPPED";
    if (c.status == CheckResult::Status::Finding) os << " # FINDING";
    if (!c.summary.empty()) os << " " << c.summary;
    os << " [checked " << c.checked << "]";
    os << "\n";
    for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
    for (const auto& cv : c.caveats) os << "    caveat: " << cv << "\n";
  }
  return os.str();
}

std::string render_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["title"] = rep.title;
  if (!rep.region_label.empty()) j["region"] = rep.region_label;
  if (rep.weights) {
    nlohmann::json w;
    w["type"] = to_string(rep.weights->type);
    w["a"] = rep.weights->a;
    w["b"] = rep.weights->b;
    if (rep.weights->type == GroupType::C2affine) w["c"] = rep.weights->c;
    j["weights"] = w;
  }
  if (rep.radius > 0) j["radius"] = rep.radius;
  j["results"] = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json e;
    e["id"] = c.id;
    e["status"] = status_name(c.status);
    e["checked"] = c.checked;
    if (!c.summary.empty()) e["summary"] = c.summary;
    e["witnesses"] = c.witnesses;
    e["caveats"] = c.caveats;
    j["results"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace hc
