#include <gtest/gtest.h>

#include "jordkit/antipodes.hpp"
#include "jordkit/compgroup.hpp"
#include "jordkit/packets.hpp"

using namespace jordkit;

namespace {

bool brute_two_squares(std::int64_t n) {
  for (std::int64_t a = 0; a * a <= n; ++a)
    for (std::int64_t b = 0; a * a + b * b <= n; ++b)
      if (a * a + b * b == n) return true;
  return false;
}

bool brute_three_squares(std::int64_t n) {
  for (std::int64_t a = 0; a * a <= n; ++a)
    for (std::int64_t b = 0; a * a + b * b <= n; ++b)
      for (std::int64_t c = 0; a * a + b * b + c * c <= n; ++c)
        if (a * a + b * b + c * c == n) return true;
  return false;
}

// Every element of every ladder packet, built in full.
bool full_packet_search(Series s, int n, const QuadCharSpace& space) {
  for (const auto& l : antipodal_candidates(s, n, space)) {
    auto j = ladder_jordan(s, l, space);
    auto p = build_packet({s, n}, j);
    bool cusp = false, minpar = false;
    for (const auto& e : p.elements) {
      cusp |= is_cuspidal_element(e);
      minpar |= supported_on_minimal_parabolic(e);
    }
    if (cusp && minpar) return true;
  }
  return false;
}

}  // namespace

TEST(NumberTheory, SumsOfSquares) {
  for (std::int64_t n = 0; n <= 600; ++n) {
    EXPECT_EQ(is_sum_of_two_squares(n), brute_two_squares(n)) << n;
    EXPECT_EQ(is_sum_of_three_squares(n), brute_three_squares(n)) << n;
  }
}

TEST(NumberTheory, GaussDecomposition) {
  EXPECT_EQ(gauss_decomposition_sp(6), (std::array<std::int64_t, 4>{0, 2, 1, 1}));
  EXPECT_EQ(gauss_decomposition_sp(7), (std::array<std::int64_t, 4>{1, 2, 1, 0}));
  for (std::int64_t l = 0; l <= 3000; ++l) {
    auto [m1, m2, m3, m4] = gauss_decomposition_sp(l);
    EXPECT_EQ(m1 * (m1 + 1) + m2 * m2 + m3 * m3 + m4 * m4, l);
    auto t = three_triangular(l);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ((*t)[0] * ((*t)[0] + 1) / 2 + (*t)[1] * ((*t)[1] + 1) / 2 + (*t)[2] * ((*t)[2] + 1) / 2, l);
  }
}

TEST(Ladders, JordanSets) {
  QuadCharSpace space(2);
  LadderSpec so{{{1, 2}, {2, 1}}};
  EXPECT_EQ(to_string(ladder_jordan(Series::SO_odd, so, space)), "{psi01:2, psi01:4, psi10:2}");
  LadderSpec sp{{{0, 1}, {3, 2}}};
  EXPECT_EQ(to_string(ladder_jordan(Series::Sp, sp, space)), "{psi11:1, psi11:3, triv:1}");
}

TEST(Antipodes, ExistIffEvenRank) {
  QuadCharSpace space(2);
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(exists_antipodal_packet(Series::SO_odd, n, space) == Verdict::yes, n % 2 == 0) << n;
    EXPECT_EQ(exists_antipodal_packet(Series::Sp, n, space) == Verdict::yes, n % 2 == 0) << n;
  }
  EXPECT_EQ(exists_antipodal_packet(Series::Sp, 4, QuadCharSpace(3)), Verdict::unknown);
}

TEST(Antipodes, SearchAgreesWithFullPackets) {
  QuadCharSpace space(2);
  for (Series s : {Series::SO_odd, Series::Sp})
    for (int n = 1; n <= 8; ++n) {
      bool search = !packet_level_antipodes(s, n, space).qualifying.empty();
      EXPECT_EQ(search, full_packet_search(s, n, space)) << n;
    }
}

TEST(Antipodes, Iwahori) {
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(iwahori_antipodes_sp(n), brute_two_squares(2 * n + 1)) << n;
  EXPECT_TRUE(iwahori_antipodes_so(2));
}
