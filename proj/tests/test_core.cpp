#include <gtest/gtest.h>

#include "jordkit/core.hpp"
#include "jordkit/halfint.hpp"
#include "jordkit/parse.hpp"
#include "test_support.hpp"

using namespace jordkit;
using jordkit::test::fj;
using jordkit::test::label;

TEST(HalfInt, ParseAndFormat) {
  for (const char* s : {"0", "3", "-2", "1/2", "-7/2"}) EXPECT_EQ(HalfInt::parse(s).to_string(), s);
  EXPECT_EQ(HalfInt::parse("3/2").doubled(), 3);
  EXPECT_THROW(HalfInt::parse("2/2"), std::invalid_argument);
  EXPECT_THROW(HalfInt::parse("1/3"), std::invalid_argument);
  EXPECT_THROW(HalfInt::parse(""), std::invalid_argument);
  EXPECT_THROW(HalfInt::parse("x"), std::invalid_argument);
}

TEST(HalfInt, Arithmetic) {
  auto a = HalfInt::from_doubled(3), b = HalfInt::from_doubled(-1);
  EXPECT_EQ(a + b, HalfInt(1));
  EXPECT_EQ(a - b, HalfInt(2));
  EXPECT_EQ(-a, HalfInt::from_doubled(-3));
  EXPECT_LT(b, a);
  EXPECT_TRUE((a + a).is_integer());
  EXPECT_FALSE(a.is_integer());
}

TEST(Labels, Invariants) {
  EXPECT_THROW(CuspidalLabel::make("", 1, PhiType::orthogonal, 0, Parity::even), std::invalid_argument);
  EXPECT_THROW(CuspidalLabel::make("a:b", 1, PhiType::orthogonal, 0, Parity::even), std::invalid_argument);
  EXPECT_THROW(CuspidalLabel::make("x", 0, PhiType::orthogonal, 0, Parity::even), std::invalid_argument);
  EXPECT_THROW(CuspidalLabel::make("x", 1, PhiType::symplectic, 0, Parity::even), std::invalid_argument);
  QuadCharSpace space(2);
  EXPECT_EQ(quadratic_label(space, 0).id, "triv");
  EXPECT_EQ(quadratic_label(space, 2).id, "psi10");
  EXPECT_EQ(space.parse("01"), 1u);
  EXPECT_EQ(space.format(2), "10");
  EXPECT_THROW(space.parse("012"), std::invalid_argument);
  LabelTable t(space);
  t.add(quadratic_label(space, 1));
  EXPECT_THROW(t.add(quadratic_label(space, 1)), std::invalid_argument);
  EXPECT_EQ(t.trivial(), nullptr);
}

TEST(JordanSet, CanonicalOrderAndDuplicates) {
  JordanSet j({{label("triv"), 5}, {label("psi_un"), 1}, {label("triv"), 1}});
  EXPECT_EQ(to_string(j), "{psi_un:1, triv:1, triv:5}");
  EXPECT_EQ(j.line("triv"), (std::vector<int>{1, 5}));
  EXPECT_EQ(j.lines().size(), 2u);
  EXPECT_THROW(JordanSet({{label("triv"), 1}, {label("triv"), 1}}), DuplicateBlockError);
  EXPECT_THROW(JordanSet({{label("triv"), 0}}), std::invalid_argument);
  EXPECT_THROW(fj("Sp4: triv:1, triv:1"), DuplicateBlockError);
}

TEST(JordanSet, BlockTypes) {
  // GL(1) characters are orthogonal, so odd m gives an orthogonal block.
  EXPECT_EQ(block_phi_type({label("triv"), 3}), PhiType::orthogonal);
  EXPECT_EQ(block_phi_type({label("triv"), 2}), PhiType::symplectic);
  EXPECT_EQ(block_phi_type({label("rho"), 2}), PhiType::orthogonal);
  EXPECT_EQ(block_phi_type({label("rho"), 1}), PhiType::symplectic);
}

TEST(Validation, Clauses) {
  auto ok = fj("Sp4: triv:1, triv:3, triv:5");
  EXPECT_TRUE(validate_jordan_set(ok.family, ok.jord).ok());
  auto so = fj("SO2: psi_a:2, psi_b:2");
  EXPECT_TRUE(validate_jordan_set(so.family, so.jord).ok());

  auto bad_c = fj("Sp1: triv:1, psi_a:1, psi_b:1");
  auto r = validate_jordan_set(bad_c.family, bad_c.jord);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].clause, Clause::central_character);

  auto bad_dim = fj("Sp3: triv:1, triv:3, triv:5");
  r = validate_jordan_set(bad_dim.family, bad_dim.jord);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].clause, Clause::dimension);

  auto bad_a = fj("Sp1: triv:2, triv:1");
  r = validate_jordan_set(bad_a.family, bad_a.jord);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].clause, Clause::block_type);
  EXPECT_NE(r.describe().find("(a)"), std::string::npos);

  EXPECT_THROW(require_valid(bad_a.family, bad_a.jord), InvalidJordanSet);
  // The SO series has no central character condition.
  auto so_any = fj("SO1: psi_a:2");
  EXPECT_TRUE(validate_jordan_set(so_any.family, so_any.jord).ok());
}

TEST(JordanSet, AMinusAndGaps) {
  auto x = fj("Sp4: triv:1, triv:3, triv:5");
  EXPECT_EQ(a_minus(x.jord, label("triv"), 5), 3);
  EXPECT_EQ(a_minus(x.jord, label("triv"), 1), std::nullopt);
  EXPECT_THROW(a_minus(x.jord, label("triv"), 7), std::invalid_argument);
  EXPECT_FALSE(has_gaps(x.jord));
  EXPECT_TRUE(has_gaps(fj("Sp4: psi_un:1, psi_a:1, psi_b:7").jord));
  EXPECT_TRUE(has_gaps(fj("Sp2: triv:5").jord));
  EXPECT_FALSE(has_gaps(fj("SO2: psi_a:2, psi_b:2").jord));
}

TEST(JordanSet, RankZeroAndSpeh) {
  EXPECT_TRUE(rank_zero_jordan_set(Series::SO_odd, label("triv")).empty());
  EXPECT_EQ(to_string(rank_zero_jordan_set(Series::Sp, label("triv"))), "{triv:1}");
  EXPECT_THROW(rank_zero_jordan_set(Series::Sp, label("psi_un")), std::invalid_argument);
  EXPECT_TRUE(is_isolated_gl_speh(1, 3));
  EXPECT_FALSE(is_isolated_gl_speh(2, 3));
  EXPECT_FALSE(is_isolated_gl_speh(3, 2));
}

TEST(Parse, FamiliesAndRoundTrip) {
  EXPECT_EQ(parse_family("Sp4"), (GroupFamily{Series::Sp, 4}));
  EXPECT_EQ(parse_family("SO0"), (GroupFamily{Series::SO_odd, 0}));
  EXPECT_THROW(parse_family("GL2"), std::invalid_argument);
  auto e = fj("SO0:");
  EXPECT_TRUE(e.jord.empty());
  for (const char* s : {"Sp4: triv:1, triv:3, triv:5", "SO2: psi_a:2, psi_b:2", "SO0:"}) {
    auto x = fj(s);
    EXPECT_EQ(format_jordan(x.family, x.jord), s);
  }
  EXPECT_THROW(fj("Sp4: nosuch:1"), std::invalid_argument);
  EXPECT_THROW(fj("Sp4 triv:1"), std::invalid_argument);
  EXPECT_THROW(fj("Sp4: triv:x"), std::invalid_argument);
}

TEST(Parse, Elements) {
  auto x = fj("Sp4: triv:1, triv:3, triv:5");
  EXPECT_EQ(parse_element(x.jord, "1"), 0u);
  EXPECT_EQ(parse_element(x.jord, "triv:1*triv:5"), 0b101u);
  EXPECT_EQ(parse_basis(x.jord, "triv:1*triv:3; triv:3*triv:5"), (std::vector<Subset>{0b011, 0b110}));
  EXPECT_THROW(parse_element(x.jord, "triv:7"), std::invalid_argument);
}
