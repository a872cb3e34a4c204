#include "jordkit/gf2.hpp"

#include <algorithm>

namespace jordkit::gf2 {

namespace {
int lead(Vec v) { return 63 - std::countl_zero(v); }
}  // namespace

Vec Span::reduce(Vec v) const {
  for (Vec r : rows_)
    if (v & bit(lead(r))) v ^= r;
  return v;
}

bool Span::insert(Vec v) {
  v = reduce(v);
  if (v == 0) return false;
  int l = lead(v);
  for (Vec& r : rows_)
    if (r & bit(l)) r ^= v;
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), [](Vec a, Vec b) { return a > b; });
  return true;
}

std::optional<Vec> coordinates(const std::vector<Vec>& gens, Vec target) {
  // Track which generators make up each echelon row.
  std::vector<std::pair<Vec, Vec>> rows;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Vec v = gens[i], who = bit(static_cast<int>(i));
    for (const auto& [r, w] : rows)
      if (v & bit(lead(r))) v ^= r, who ^= w;
    if (v == 0) continue;
    int l = lead(v);
    for (auto& [r, w] : rows)
      if (r & bit(l)) r ^= v, w ^= who;
    rows.emplace_back(v, who);
  }
  Vec used = 0;
  for (const auto& [r, w] : rows)
    if (target & bit(lead(r))) target ^= r, used ^= w;
  if (target != 0) return std::nullopt;
  return used;
}

AffineSystem::Solution AffineSystem::solve() const {
  // Gauss-Jordan on augmented rows; the rhs is kept separately.
  std::vector<std::pair<Vec, bool>> rows;
  std::vector<int> pivots;
  Solution s;
  for (auto [c, b] : eqs_) {
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (c & bit(pivots[k])) c ^= rows[k].first, b ^= rows[k].second;
    if (c == 0) {
      if (b) return s;  // 0 = 1
      continue;
    }
    int p = std::countr_zero(c);
    for (auto& [rc, rb] : rows)
      if (rc & bit(p)) rc ^= c, rb ^= b;
    rows.emplace_back(c, b);
    pivots.push_back(p);
  }
  s.consistent = true;
  s.rank = static_cast<int>(rows.size());
  Vec pivot_mask = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    pivot_mask |= bit(pivots[k]);
    if (rows[k].second) s.particular |= bit(pivots[k]);
  }
  for (int f = 0; f < n_; ++f) {
    if (pivot_mask & bit(f)) continue;
    Vec v = bit(f);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k].first & bit(f)) v |= bit(pivots[k]);
    s.kernel.push_back(v);
  }
  return s;
}

}  // namespace jordkit::gf2
