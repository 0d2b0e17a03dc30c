#ifndef PLANEPAIRS_REPORT_HPP
#define PLANEPAIRS_REPORT_HPP

#include <string>
#include <vector>

namespace planepairs {

/// One verified claim: a stable id, a human-readable statement, the
/// expected and computed values as canonical strings, and the verdict.
struct CheckRecord {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0.0; // wall time; reported only in the volatile section
};

struct Report {
  int schema_version = 1;
  unsigned long seed = 0;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  /// JSON document. Everything outside the "volatile" object is a pure
  /// function of the configuration and seed; timings and the timestamp
  /// live under "volatile".
  std::string to_json() const;
  /// Fixed-width human-readable table with a final tally line.
  std::string summary() const;
};

/// Options shared by the suite runners.
struct SuiteOptions {
  unsigned long seed = 42;
  int jobs = 1;        // worker threads; record order is deterministic
  int n = -1;          // suite-specific size override (-1 = default)
  std::string family;  // restrict catalog/cones suites to one family
  std::string only;    // restrict to records whose id contains this string
  bool mutate = false; // deform suite: verify a corrupted fixture (must fail)
};

/// Named suites: "catalog", "borel", "tangent", "betti", "deform",
/// "cones", "family". Unknown names throw.
Report run_suites(const std::vector<std::string>& suites,
                  const SuiteOptions& opt);

/// All suites at their default sizes.
std::vector<std::string> all_suites();

} // namespace planepairs

#endif
