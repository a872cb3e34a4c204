#pragma once

// Unramified strongly negative and isolated parameters: pairs (p1, p2) of
// partitions into distinct parts, p1 on the trivial character and p2 on the
// unramified quadratic character. Sp(2n): odd parts, total 2n+1, |p2| even.
// SO(2n+1): even parts, total 2n.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

#include "jordkit/core.hpp"

namespace jordkit {

using BigInt = boost::multiprecision::cpp_int;

struct UnramifiedParam {
  std::vector<int> p1;
  std::vector<int> p2;

  /// Lexicographic on (p2, p1).
  friend std::strong_ordering operator<=>(const UnramifiedParam& a, const UnramifiedParam& b) {
    if (auto c = a.p2 <=> b.p2; c != 0) return c;
    return a.p1 <=> b.p1;
  }
  friend bool operator==(const UnramifiedParam&, const UnramifiedParam&) = default;
};

std::string to_string(const UnramifiedParam& p);

struct IsolationConstraint {
  bool no_consecutive = true;  // no two parts of one partition differ by 2
  bool exclude_three = true;   // part 3 is excluded (part 2 in the SO variant)
};

inline constexpr int kMaxEnumerationRank = 20;

bool is_valid_param(Series s, int n, const UnramifiedParam& p);
bool satisfies_isolation(Series s, const UnramifiedParam& p, IsolationConstraint c = {});

BigInt count_strongly_negative(Series s, int n);
BigInt count_isolated(Series s, int n, IsolationConstraint c = {});

/// All parameters in lexicographic order of (p2, p1). Throws
/// std::out_of_range for n > kMaxEnumerationRank.
std::vector<UnramifiedParam> enumerate_sn_params(Series s, int n);

JordanSet param_to_jordan(Series s, const UnramifiedParam& p, const CuspidalLabel& trivial,
                          const CuspidalLabel& psi_un);

}  // namespace jordkit
