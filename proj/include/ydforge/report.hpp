#pragma once

#include <string>
#include <vector>

namespace ydforge {

/// Outcome of one verified identity family.
struct IdentityRecord {
  std::string id;       // stable machine id, e.g. "yd.braided"
  std::string label;    // what the identity states
  long instances = 0;   // number of checked instances
  bool pass = true;
  std::string counterexample;  // first failing instance, empty when pass
  double wall_ms = 0.0;        // console diagnostics only, never serialized
};

struct Report {
  std::vector<IdentityRecord> records;

  bool all_pass() const;
  long total_instances() const;
  void append(const Report& other);

  /// JSON lines, one record per identity; deterministic field order and
  /// no timing data, so identical runs serialize byte-identically.
  std::string to_jsonl() const;

  /// Human-readable table for the console, including timings.
  std::string to_console() const;
};

/// Collects one identity family: counts instances, records the first
/// counterexample.
class IdentityCheck {
 public:
  IdentityCheck(std::string id, std::string label);

  void count(bool ok, const std::string& witness_on_failure);
  template <typename WitnessFn>
  void count_lazy(bool ok, WitnessFn&& witness) {
    if (ok) { record_.instances++; return; }
    count(false, witness());
  }

  IdentityRecord finish(double wall_ms = 0.0);

 private:
  IdentityRecord record_;
};

}  // namespace ydforge
