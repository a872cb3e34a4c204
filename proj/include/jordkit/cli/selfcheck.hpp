#pragma once

// Randomized and exhaustive property suites shared by `verify` and the
// acceptance runner.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jordkit/core.hpp"

namespace jordkit::cli {

struct CheckResult {
  std::string group;
  std::string name;
  std::string anchor;
  bool passed = true;
  std::string detail;
  std::size_t cases = 0;
};

struct RandomJordan {
  GroupFamily family;
  JordanSet jord;
};

/// Random admissible Jordan set for the series over the given labels, with
/// at most max_blocks blocks. About half of the lines are gap-free ladders.
RandomJordan random_valid_jordan(std::mt19937_64& rng, const LabelTable& labels, Series s, int max_blocks);
/// Random block list, not necessarily admissible for anything.
std::vector<JordanBlock> random_blocks(std::mt19937_64& rng, const LabelTable& labels, int max_blocks);

struct SuiteOptions {
  std::size_t cases = 1000;
  std::uint64_t seed = 20240601;
  int unramified_oracle_max = 12;
  int speh_max_product = 12;
  int antipode_max_rank = 60;
};

struct PropertySuite {
  std::string group;
  std::string name;
  std::function<CheckResult(const LabelTable&, const SuiteOptions&)> run;
};

/// All suites in a fixed order.
const std::vector<PropertySuite>& property_suites();

// The four randomized suites that pin down the construction.
CheckResult check_dimension_parity(const LabelTable& labels, const SuiteOptions& o);
CheckResult check_coset_invariance(const LabelTable& labels, const SuiteOptions& o);
CheckResult check_order_robustness(const LabelTable& labels, const SuiteOptions& o);
CheckResult check_validate_permutation(const LabelTable& labels, const SuiteOptions& o);

/// Both routes for every rank 1..max, compared with each other and with
/// "n is even".
CheckResult check_antipodes(const LabelTable& labels, const SuiteOptions& o);

}  // namespace jordkit::cli
