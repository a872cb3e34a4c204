#pragma once

// Segments and tempered reducibility read off from Jordan blocks.

#include <optional>
#include <string>
#include <vector>

#include "jordkit/core.hpp"
#include "jordkit/halfint.hpp"

namespace jordkit {

/// [nu^b rho, nu^e rho] with e - b a non-negative integer.
struct Segment {
  CuspidalLabel rho;
  HalfInt b;
  HalfInt e;

  /// Throws std::invalid_argument unless e - b is a non-negative integer.
  static Segment make(CuspidalLabel rho, HalfInt b, HalfInt e);
  /// delta(rho, m) as [-(m-1)/2, (m-1)/2].
  static Segment centered(CuspidalLabel rho, int m);

  int length() const { return static_cast<int>((e - b).doubled() / 2) + 1; }
  Segment contragredient() const { return Segment{rho, -e, -b}; }
  bool contains(HalfInt x) const { return b <= x && x <= e; }

  friend bool operator==(const Segment& x, const Segment& y) {
    return x.rho.id == y.rho.id && x.b == y.b && x.e == y.e;
  }
  friend auto operator<=>(const Segment& x, const Segment& y) {
    if (auto c = x.rho.id <=> y.rho.id; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.e <=> y.e;
  }
};

std::string to_string(const Segment& s);

struct CuspidalReducibilityData {
  CuspidalLabel rho;
  std::string pi_tag;
  std::vector<HalfInt> points;  // x >= 0 with nu^x rho x pi reducible
};

/// Reducible iff x or -x is one of the exponents b, b+1, ..., e for some point x. Throws when the
/// data belongs to a different line.
bool segment_induction_reducible(const Segment& seg, const CuspidalReducibilityData& data);

/// Whether delta(rho,m) x pi reduces for tempered pi with Jordan set j in the
/// given series. If the line of rho meets j, reducible iff m has the line's
/// parity and the block is not in j; otherwise iff m has the label's base
/// parity for the series.
bool is_reducible_tempered(Series series, const JordanSet& j, const JordanBlock& block);

/// delta(rho,2x-1), delta(rho,2x-3), ... down to m = 1 or 2. Needs x >= 1.
std::vector<JordanBlock> jord_line_from_reducibility(const CuspidalLabel& rho, HalfInt x);

/// (a + 1)/2 for the largest m on the line, if the line meets j.
std::optional<HalfInt> reducibility_from_jord_line(const JordanSet& j, const CuspidalLabel& rho);

struct FormulationCheck {
  bool via_base = false;  // reducible against the rank-zero base and block not in j
  bool direct = false;    // is_reducible_tempered(series, j, block)
  bool exempt = false;    // Sp on the trivial GL(1) line
  bool agrees = false;    // exempt or via_base == direct
};

/// Compares the two readings of a Jordan block: reducibility against the
/// rank-zero base minus membership, and the direct rule for j.
FormulationCheck equivalent_formulation_check(Series series, const JordanSet& j, const JordanBlock& block,
                                              const JordanSet& base);

}  // namespace jordkit
