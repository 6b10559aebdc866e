/* verify.hpp
 *
 * Claim-by-claim verification suites behind `pdcc verify`. Each claim is
 * an exact check (rational arithmetic, tolerance zero) over the builtin
 * systems, the transcribed appendix fixtures, or the duality machinery;
 * results carry a stable id, a one-line statement, and a detail string so
 * the CLI can print a pass/fail table and a byte-stable JSON artifact.
 */
#pragma once

#include <string>
#include <vector>

namespace pdcc {

// status is "pass", "fail", or "reported". A "reported" claim records a
// computed fact whose expected value the source text leaves open; it never
// fails the suite.
struct ClaimResult {
  std::string id;
  std::string statement;
  std::string status;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  int passed = 0;
  int failed = 0;
  int reported = 0;
  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  std::string fixtures_dir;     // empty means the compiled-in default
  bool include_n5 = true;       // n = 5 appendix and duality claims
  std::uint64_t seed = 0;       // property-suite RNG seed
};

// suite is one of "appendix", "formulas", "duality".
// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

std::string default_fixtures_dir();

}  // namespace pdcc
