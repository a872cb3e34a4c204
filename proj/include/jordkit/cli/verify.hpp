#pragma once

// Runs every registry fixture and the property suites.

#include <optional>
#include <string>
#include <vector>

#include "jordkit/cli/registry.hpp"
#include "jordkit/cli/selfcheck.hpp"

namespace jordkit::cli {

/// Module a fixture kind belongs to, for `verify --only`.
std::string fixture_group(const std::string& kind);
std::vector<std::string> verify_groups();

/// Checks one fixture against its expectation. Never throws: errors while
/// evaluating the fixture count as a failure.
CheckResult run_fixture(const Registry& r, const Fixture& f);

struct VerifyOptions {
  std::optional<std::string> only;  // group name
  SuiteOptions suites;
  bool run_suites = true;
};

struct VerifyReport {
  std::vector<CheckResult> fixtures;
  std::vector<CheckResult> suites;
  std::size_t failures() const;
};

/// Throws std::invalid_argument for an unknown group in `only`.
VerifyReport run_verify(const Registry& r, const VerifyOptions& o);

}  // namespace jordkit::cli
