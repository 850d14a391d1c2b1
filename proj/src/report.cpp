#include "ydforge/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace ydforge {

bool Report::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

long Report::total_instances() const {
  long t = 0;
  for (const auto& r : records) t += r.instances;
  return t;
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string Report::to_jsonl() const {
  std::ostringstream os;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["identity"] = r.label;
    j["instances"] = r.instances;
    j["pass"] = r.pass;
    if (!r.pass) j["counterexample"] = r.counterexample;
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string Report::to_console() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << (r.pass ? "[pass] " : "[FAIL] ") << std::left << std::setw(28) << r.id
       << " instances=" << std::setw(6) << r.instances << " " << std::fixed
       << std::setprecision(1) << r.wall_ms << " ms";
    if (!r.pass) os << "\n       counterexample: " << r.counterexample;
    os << "\n";
  }
  return os.str();
}

IdentityCheck::IdentityCheck(std::string id, std::string label) {
  record_.id = std::move(id);
  record_.label = std::move(label);
}

void IdentityCheck::count(bool ok, const std::string& witness_on_failure) {
  record_.instances++;
  if (!ok && record_.pass) {
    record_.pass = false;
    record_.counterexample = witness_on_failure;
  }
}

IdentityRecord IdentityCheck::finish(double wall_ms) {
  record_.wall_ms = wall_ms;
  return record_;
}

}  // namespace ydforge
