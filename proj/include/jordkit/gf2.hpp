#pragma once

// Linear algebra over GF(2) on 64-bit masks. Bit i is coordinate i.

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jordkit::gf2 {

using Vec = std::uint64_t;

inline int parity(Vec v) { return std::popcount(v) & 1; }
inline Vec bit(int i) { return Vec{1} << i; }

/// Echelon basis of a subspace, kept reduced on insertion.
class Span {
 public:
  /// Adds v; returns false if v already lies in the span.
  bool insert(Vec v);
  bool contains(Vec v) const { return reduce(v) == 0; }
  std::size_t rank() const { return rows_.size(); }
  Vec reduce(Vec v) const;

 private:
  std::vector<Vec> rows_;  // distinct leading bits
};

/// Expresses target as a sum of gens. Returns the mask of generator indices
/// used, or nullopt if target is outside their span. Generators must be
/// independent for the answer to be unique.
std::optional<Vec> coordinates(const std::vector<Vec>& gens, Vec target);

/// Affine system { x : parity(coeffs_k & x) = rhs_k } in n unknowns.
class AffineSystem {
 public:
  explicit AffineSystem(int unknowns) : n_(unknowns) {}
  void add(Vec coeffs, bool rhs) { eqs_.emplace_back(coeffs, rhs); }
  int unknowns() const { return n_; }

  struct Solution {
    bool consistent = false;
    int rank = 0;
    Vec particular = 0;
    /// Basis of the homogeneous solution space.
    std::vector<Vec> kernel;
  };
  Solution solve() const;

 private:
  int n_;
  std::vector<std::pair<Vec, bool>> eqs_;
};

}  // namespace jordkit::gf2
