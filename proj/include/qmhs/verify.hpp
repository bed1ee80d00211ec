#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmhs/harmonic.hpp"

namespace qmhs {

// One identifier per verified congruence statement. Order here is the
// canonical report order.
enum class CheckId {
  sp1,
  sp2,
  dilcher,
  modifier_t,
  t0,
  stuffle,
  homo_recursion,
  homoall,
  cor1,
  cor2,
  cor3,
  depth2,
  reversal,
  phi2,
  h3,
  lehmer,
  pn_bridge,
};

inline constexpr int kCheckCount = 17;

const std::vector<CheckId>& all_checks();
std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(const std::string& name);
// One line: the congruence the check verifies and its parameter domain.
std::string check_description(CheckId id);

enum class Status { passed, failed, skipped };

struct CheckResult {
  CheckId id;
  std::string params;   // e.g. "p=7,n=2"
  Status status;
  std::string witness;  // canonical polynomial string of the nonzero
                        // difference; empty unless failed
  std::string note;     // skip reason ("skipped: ..."), annotation, or empty
};

struct VerifyConfig {
  long prime_min = 2;
  long prime_max = 31;
  long depth_max = 5;           // bound for l sweeps
  long n_max = 8;               // bound for depth-one order sweeps
  std::vector<CheckId> checks;  // empty means all
  int jobs = 1;                 // worker threads in run_all; no effect on output
};

struct Summary {
  long passed = 0;
  long failed = 0;
  long skipped = 0;
};

struct Report {
  // Ordered key/value echo of the configuration (excludes jobs, which never
  // affects results).
  std::vector<std::pair<std::string, std::string>> environment;
  std::vector<CheckResult> results;
  // One entry per configured check, canonical order, zeros when no params.
  std::vector<std::pair<CheckId, Summary>> summary;
};

std::vector<long> primes_in(long lo, long hi);

// Sweeps one check over the configured ranges. Hypothesis-violating
// parameter tuples come back as skipped results.
std::vector<CheckResult> run_check(CheckId id, const VerifyConfig& config);

// Full catalog; results are deterministic and independent of config.jobs.
Report run_all(const VerifyConfig& config);

bool any_failed(const Report& report);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);
std::string to_text(const Report& report);

// Inverse of to_json: reconstructs an identical in-memory Report.
Report parse_report_json(const std::string& text);

}  // namespace qmhs
