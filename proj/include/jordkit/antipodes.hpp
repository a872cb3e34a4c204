#pragma once

// Packets containing both a cuspidal member and a member supported on the
// minimal parabolic subgroup ("antipodes"), searched over ladder Jordan sets
// on quadratic characters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordkit/core.hpp"

namespace jordkit {

struct LadderLine {
  QuadChar character;
  int k;
  friend bool operator==(const LadderLine&, const LadderLine&) = default;
  friend auto operator<=>(const LadderLine&, const LadderLine&) = default;
};

/// Lines with k >= 1, sorted by character. SO: delta(psi, 2l) for l = 1..k.
/// Sp: delta(psi, 2l-1) for l = 1..k.
struct LadderSpec {
  std::vector<LadderLine> lines;
  friend bool operator==(const LadderSpec&, const LadderSpec&) = default;
  friend auto operator<=>(const LadderSpec&, const LadderSpec&) = default;
};

std::string to_string(const LadderSpec& l, const QuadCharSpace& space);
JordanSet ladder_jordan(Series s, const LadderSpec& l, const QuadCharSpace& space);

bool is_sum_of_two_squares(std::int64_t n);
/// Legendre: n >= 0 is a sum of three squares iff n is not 4^a(8b+7).
bool is_sum_of_three_squares(std::int64_t n);
/// (m1, m2, m3, m4) with l = m1(m1+1) + m2^2 + m3^2 + m4^2, m1 in {0,1}:
/// m1 = 0 when l is a sum of three squares, otherwise m1 = 1.
std::array<std::int64_t, 4> gauss_decomposition_sp(std::int64_t l);
/// (t1, t2, t3) with l = sum t_i(t_i+1)/2, if found.
std::optional<std::array<std::int64_t, 3>> three_triangular(std::int64_t l);

/// Ladder specs with the right total dimension and a cuspidal member that the
/// counting argument admits. SO: sum k(k+1) = 2n with sum floor((k+1)/2)
/// even. Sp: sum k^2 = 2n+1, trivial line with odd k, other lines even k.
std::vector<LadderSpec> antipodal_candidates(Series s, int n, const QuadCharSpace& space);

enum class Verdict { no, yes, unknown };
std::string_view to_string(Verdict v);

/// Number-theoretic answer. For Sp it is only claimed with four quadratic
/// characters; other character counts give unknown.
Verdict exists_antipodal_packet(Series s, int n, const QuadCharSpace& space);

struct PacketSearch {
  std::vector<LadderSpec> qualifying;  // ladder sets whose packet has antipodes
  std::uint64_t ladder_sets = 0;
  std::uint64_t characters_examined = 0;
};

/// Builds every ladder Jordan set over the space's characters and checks the
/// packet for a cuspidal member and a minimal-parabolic member.
PacketSearch packet_level_antipodes(Series s, int n, const QuadCharSpace& space);

/// Antipodes within packets on the trivial and unramified quadratic lines.
bool iwahori_antipodes_sp(int n);
bool iwahori_antipodes_so(int n);

}  // namespace jordkit
