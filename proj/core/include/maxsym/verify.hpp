#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace maxsym {

// One reproduced claim: pass iff expected == computed, exact string
// equality, no tolerances.
struct CheckRecord {
  std::string id;        // stable across releases
  std::string anchor;    // the published claim this check reproduces
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;  // sorted by id; ids unique

  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

struct VerifyOptions {
  std::int64_t finite_budget = 1'000'000;    // spherical enumerations
  std::int64_t infinite_budget = 100'000;    // expected-infinite consistency checks
  // Test hook: replaces the expected value of the matching check ids.
  std::map<std::string, std::string> expected_overrides;
};

// Runs the full claim suite deterministically; failures do not stop the run.
VerificationReport run_verification(const VerifyOptions& options = {});

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);  // stable key order
std::string render_csv(const VerificationReport& report);

}  // namespace maxsym
