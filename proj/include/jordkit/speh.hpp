#pragma once

// Speh representations u(delta(rho,l), m) as a determinant of segment
// representations, expanded in the free abelian group on multisegments.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordkit/core.hpp"
#include "jordkit/halfint.hpp"
#include "jordkit/reducibility.hpp"

namespace jordkit {

/// Sorted list of segments; the empty list is the unit.
using Multisegment = std::vector<Segment>;

Multisegment normalize(Multisegment ms);
std::string to_string(const Multisegment& ms);

/// Finite Z-linear combination of multisegments, product by concatenation.
class GrothendieckElement {
 public:
  GrothendieckElement() = default;
  static GrothendieckElement unit() { return monomial({}); }
  static GrothendieckElement monomial(Multisegment ms, std::int64_t coeff = 1);

  void add(Multisegment ms, std::int64_t coeff);
  const std::map<Multisegment, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Multisegment& ms) const;
  bool is_zero() const { return terms_.empty(); }

  GrothendieckElement& operator+=(const GrothendieckElement& o);
  friend GrothendieckElement operator+(GrothendieckElement a, const GrothendieckElement& b) { return a += b; }
  friend GrothendieckElement operator-(const GrothendieckElement& a, const GrothendieckElement& b);
  friend GrothendieckElement operator*(const GrothendieckElement& a, const GrothendieckElement& b);
  friend bool operator==(const GrothendieckElement&, const GrothendieckElement&) = default;

 private:
  std::map<Multisegment, std::int64_t> terms_;  // no zero coefficients
};

std::string to_string(const GrothendieckElement& g);

/// (b_k, e_k) for k = 1..m: centers (m-1)/2 - (k-1), half-width (l-1)/2.
std::vector<std::pair<HalfInt, HalfInt>> speh_segments(int l, int m);

/// The multisegment of the identity permutation (the standard module).
Multisegment standard_multisegment(const CuspidalLabel& rho, int l, int m);

/// det [delta([b_i, e_j] rho)]: an entry with b_i = e_j + 1 is the unit and
/// an entry with b_i > e_j + 1 is zero.
GrothendieckElement speh_determinant(const CuspidalLabel& rho, int l, int m);

struct ExpansionStats {
  std::size_t terms = 0;
  bool identity_present = false;
  std::int64_t identity_coefficient = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

ExpansionStats expansion_stats(const GrothendieckElement& g, const Multisegment& identity);

}  // namespace jordkit
