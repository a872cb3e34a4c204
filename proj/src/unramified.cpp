#include "jordkit/unramified.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jordkit {

namespace {

int target(Series s, int n) { return s == Series::Sp ? 2 * n + 1 : 2 * n; }
int first_part(Series s) { return s == Series::Sp ? 1 : 2; }
int low_excluded(Series s) { return s == Series::Sp ? 3 : 2; }

struct PartitionCounts {
  std::vector<BigInt> even;  // even number of parts
  std::vector<BigInt> odd;
  BigInt all(std::size_t k) const { return even[k] + odd[k]; }
};

// Distinct parts of the series' parity, optionally isolated, for every sum up
// to total. State: (sum, parity of the number of parts, previous part taken).
PartitionCounts distinct_part_counts(Series s, int total, const IsolationConstraint* iso) {
  const auto n = static_cast<std::size_t>(total) + 1;
  // dp[taken][parity][sum]
  std::vector<BigInt> dp[2][2];
  for (auto& row : dp)
    for (auto& v : row) v.assign(n, BigInt(0));
  dp[0][0][0] = 1;
  for (int part = first_part(s); part <= total; part += 2) {
    std::vector<BigInt> next[2][2];
    for (auto& row : next)
      for (auto& v : row) v.assign(n, BigInt(0));
    bool allowed = !(iso && iso->exclude_three && part == low_excluded(s));
    for (int t = 0; t < 2; ++t)
      for (int par = 0; par < 2; ++par)
        for (std::size_t sum = 0; sum < n; ++sum) {
          const BigInt& c = dp[t][par][sum];
          if (c == 0) continue;
          next[0][par][sum] += c;
          if (!allowed || (iso && iso->no_consecutive && t == 1)) continue;
          auto ns = sum + static_cast<std::size_t>(part);
          if (ns < n) next[1][par ^ 1][ns] += c;
        }
    for (int t = 0; t < 2; ++t)
      for (int par = 0; par < 2; ++par) dp[t][par] = std::move(next[t][par]);
  }
  PartitionCounts r;
  r.even.assign(n, BigInt(0));
  r.odd.assign(n, BigInt(0));
  for (std::size_t sum = 0; sum < n; ++sum) {
    r.even[sum] = dp[0][0][sum] + dp[1][0][sum];
    r.odd[sum] = dp[0][1][sum] + dp[1][1][sum];
  }
  return r;
}

BigInt count(Series s, int n, const IsolationConstraint* iso) {
  if (n < 0) return 0;
  const int total = target(s, n);
  auto pc = distinct_part_counts(s, total, iso);
  BigInt sum = 0;
  for (int k2 = 0; k2 <= total; ++k2) {
    auto i2 = static_cast<std::size_t>(k2), i1 = static_cast<std::size_t>(total - k2);
    sum += pc.all(i1) * (s == Series::Sp ? pc.even[i2] : pc.all(i2));
  }
  return sum;
}

bool distinct_with_parity(Series s, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || (p[i] - first_part(s)) % 2 != 0) return false;
    if (i > 0 && p[i] <= p[i - 1]) return false;
  }
  return true;
}

int sum_of(const std::vector<int>& p) {
  int t = 0;
  for (int x : p) t += x;
  return t;
}

}  // namespace

std::string to_string(const UnramifiedParam& p) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  return "p1=" + list(p.p1) + " p2=" + list(p.p2);
}

bool is_valid_param(Series s, int n, const UnramifiedParam& p) {
  if (!distinct_with_parity(s, p.p1) || !distinct_with_parity(s, p.p2)) return false;
  if (sum_of(p.p1) + sum_of(p.p2) != target(s, n)) return false;
  return s == Series::SO_odd || p.p2.size() % 2 == 0;
}

bool satisfies_isolation(Series s, const UnramifiedParam& p, IsolationConstraint c) {
  for (const auto* v : {&p.p1, &p.p2}) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (c.exclude_three && (*v)[i] == low_excluded(s)) return false;
      if (c.no_consecutive && i > 0 && (*v)[i] - (*v)[i - 1] == 2) return false;
    }
  }
  return true;
}

BigInt count_strongly_negative(Series s, int n) { return count(s, n, nullptr); }

BigInt count_isolated(Series s, int n, IsolationConstraint c) { return count(s, n, &c); }

std::vector<UnramifiedParam> enumerate_sn_params(Series s, int n) {
  if (n < 0) return {};
  if (n > kMaxEnumerationRank)
    throw std::out_of_range("enumeration is limited to rank " + std::to_string(kMaxEnumerationRank));
  const int total = target(s, n);
  // by_sum[k]: all partitions of k into distinct parts of the right parity.
  std::vector<std::vector<std::vector<int>>> by_sum(static_cast<std::size_t>(total) + 1);
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int next, int sum) {
    by_sum[static_cast<std::size_t>(sum)].push_back(cur);
    for (int part = next; sum + part <= total; part += 2) {
      cur.push_back(part);
      rec(part + 2, sum + part);
      cur.pop_back();
    }
  };
  rec(first_part(s), 0);

  std::vector<UnramifiedParam> out;
  for (int k2 = 0; k2 <= total; ++k2)
    for (const auto& p2 : by_sum[static_cast<std::size_t>(k2)]) {
      if (s == Series::Sp && p2.size() % 2 != 0) continue;
      for (const auto& p1 : by_sum[static_cast<std::size_t>(total - k2)]) out.push_back({p1, p2});
    }
  std::sort(out.begin(), out.end());
  return out;
}

JordanSet param_to_jordan(Series s, const UnramifiedParam& p, const CuspidalLabel& trivial,
                          const CuspidalLabel& psi_un) {
  int total = sum_of(p.p1) + sum_of(p.p2);
  int n = s == Series::Sp ? (total - 1) / 2 : total / 2;
  if (!is_valid_param(s, n, p)) throw std::invalid_argument("invalid unramified parameter " + to_string(p));
  std::vector<JordanBlock> blocks;
  for (int a : p.p1) blocks.push_back({trivial, a});
  for (int b : p.p2) blocks.push_back({psi_un, b});
  return JordanSet(std::move(blocks));
}

}  // namespace jordkit
