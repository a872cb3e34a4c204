#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "jordkit/cli/report.hpp"
#include "jordkit/cli/selfcheck.hpp"
#include "jordkit/packets.hpp"
#include "test_support.hpp"

using namespace jordkit;
using jordkit::test::fj;

namespace {

PacketElement element(const char* jordan, const char* signs) {
  auto x = fj(jordan);
  auto g = ComponentGroup::make(x.family, x.jord);
  return build_element(g, g.parse_character(signs));
}

std::vector<std::string> segments(const std::vector<Segment>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

struct Counts {
  std::size_t elements = 0, cuspidal = 0, minimal = 0;
};

Counts counts(const char* jordan) {
  auto x = fj(jordan);
  auto p = build_packet(x.family, x.jord);
  Counts c;
  c.elements = p.elements.size();
  for (const auto& e : p.elements) {
    c.cuspidal += is_cuspidal_element(e);
    c.minimal += supported_on_minimal_parabolic(e);
  }
  return c;
}

}  // namespace

TEST(Packets, TwoQuadraticLinesSO) {
  auto c = counts("SO2: psi_a:2, psi_b:2");
  EXPECT_EQ(c.elements, 2u);
  EXPECT_EQ(c.cuspidal, 1u);
  auto e = element("SO2: psi_a:2, psi_b:2", "++");
  EXPECT_TRUE(supported_on_minimal_parabolic(e));
  EXPECT_EQ(segments(gl_factor_inventory(e)), (std::vector<std::string>{"[1/2,1/2]psi_a", "[1/2,1/2]psi_b"}));
  EXPECT_TRUE(e.base_jord.empty());
}

TEST(Packets, ThreeQuadraticLinesSO) {
  auto c = counts("SO3: psi_un:2, psi_a:2, psi_b:2");
  EXPECT_EQ(c.elements, 4u);
  EXPECT_EQ(c.cuspidal, 0u);
}

TEST(Packets, SymplecticCuspidalLinesSO) {
  const char* sets[] = {"SO1: symp1:1", "SO2: symp1:1, symp2:1", "SO3: symp1:1, symp2:1, symp3:1",
                        "SO4: symp1:1, symp2:1, symp3:1, symp4:1",
                        "SO5: symp1:1, symp2:1, symp3:1, symp4:1, symp5:1",
                        "SO6: symp1:1, symp2:1, symp3:1, symp4:1, symp5:1, symp6:1"};
  std::size_t k = 1;
  for (const char* s : sets) {
    auto c = counts(s);
    EXPECT_EQ(c.elements, std::size_t{1} << (k - 1));
    EXPECT_EQ(c.cuspidal, std::size_t{1} << (k - 1));
    ++k;
  }
}

TEST(Packets, TrivialLadderSp) {
  auto c = counts("Sp4: triv:1, triv:3, triv:5");
  EXPECT_EQ(c.elements, 4u);
  EXPECT_EQ(c.cuspidal, 1u);
  EXPECT_EQ(c.minimal, 3u);
  auto mm = element("Sp4: triv:1, triv:3, triv:5", "--");
  EXPECT_TRUE(is_cuspidal_element(mm));
  EXPECT_FALSE(supported_on_minimal_parabolic(mm));
  EXPECT_TRUE(gl_factor_inventory(mm).empty());

  auto pp = element("Sp4: triv:1, triv:3, triv:5", "++");
  ASSERT_EQ(pp.steps.size(), 1u);
  EXPECT_EQ(pp.steps[0].kind, StepKind::PairRemoval);
  EXPECT_EQ(to_string(pp.steps[0].segment), "[-1,2]triv");
  ASSERT_EQ(pp.steps[0].selections.size(), 1u);
  EXPECT_EQ(pp.steps[0].selections[0].rule, SelectionRule::RuleB);
  EXPECT_TRUE(pp.steps[0].selections[0].embeds);
  auto mp = element("Sp4: triv:1, triv:3, triv:5", "-+");
  EXPECT_FALSE(mp.steps[0].selections[0].embeds);
}

TEST(Packets, PsiUnLadderSp) {
  auto c = counts("Sp2: triv:1, psi_un:1, psi_un:3");
  EXPECT_EQ(c.elements, 4u);
  EXPECT_EQ(c.cuspidal, 2u);
  auto pp = element("Sp2: triv:1, psi_un:1, psi_un:3", "++");
  auto mp = element("Sp2: triv:1, psi_un:1, psi_un:3", "-+");
  ASSERT_EQ(pp.steps.size(), 1u);
  EXPECT_EQ(pp.steps[0].selections[0].rule, SelectionRule::RuleD);
  EXPECT_NE(pp.steps[0].selections[0].embeds, mp.steps[0].selections[0].embeds);
}

TEST(Packets, GL2LineSp) {
  auto c = counts("Sp2: triv:1, rho:2");
  EXPECT_EQ(c.elements, 2u);
  EXPECT_EQ(c.cuspidal, 1u);
  auto p = element("Sp2: triv:1, rho:2", "+");
  ASSERT_EQ(p.steps.size(), 1u);
  EXPECT_EQ(p.steps[0].kind, StepKind::HalfShift);
}

TEST(Packets, GL2TwoBlockLineSp) {
  auto c = counts("Sp6: triv:1, rho:2, rho:4");
  EXPECT_EQ(c.elements, 4u);
  EXPECT_EQ(c.cuspidal, 1u);
  auto e = element("Sp6: triv:1, rho:2, rho:4", "+-");
  ASSERT_EQ(e.steps.size(), 2u);
  EXPECT_EQ(e.steps[0].kind, StepKind::HalfShift);
  EXPECT_EQ(e.steps[1].kind, StepKind::GapShift);
  EXPECT_EQ(segments(gl_factor_inventory(e)), (std::vector<std::string>{"[1/2,1/2]rho", "[3/2,3/2]rho"}));
  EXPECT_EQ(segments(construction_order(e)), (std::vector<std::string>{"[3/2,3/2]rho", "[1/2,1/2]rho"}));
  EXPECT_EQ(to_string(e.base_jord), "{rho:2, triv:1}");
  EXPECT_EQ(cli::base_character_text(e), "-");
  EXPECT_FALSE(supported_on_minimal_parabolic(e));
  auto pp = element("Sp6: triv:1, rho:2, rho:4", "++");
  EXPECT_EQ(pp.steps[0].selections[0].rule, SelectionRule::RuleC);
  EXPECT_TRUE(pp.steps[0].selections[0].embeds);
}

TEST(Packets, NoMinimalParabolicOffTheTrivialBase) {
  EXPECT_EQ(counts("Sp1: psi_un:1, psi_a:1, psi_b:1").minimal, 0u);
  EXPECT_EQ(counts("Sp4: psi_un:1, psi_a:1, psi_b:7").minimal, 0u);
}

TEST(Packets, IwahoriLadders) {
  auto x = fj("Sp6: triv:1, triv:3, triv:5, psi_un:1, psi_un:3");
  auto p = build_packet(x.family, x.jord);
  EXPECT_EQ(p.elements.size(), 16u);
  std::size_t cusp = 0;
  for (const auto& e : p.elements) {
    cusp += is_cuspidal_element(e);
    if (e.character.negatives == 0) EXPECT_TRUE(supported_on_minimal_parabolic(e));
  }
  EXPECT_EQ(cusp, 2u);
}

TEST(Packets, CuspidalElementIffCuspidalCharacter) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto r = cli::random_valid_jordan(rng, jordkit::test::labels(), i % 2 ? Series::Sp : Series::SO_odd, 9);
    auto p = build_packet(r.family, r.jord);
    ASSERT_EQ(p.elements.size(), p.group.order());
    for (const auto& e : p.elements) {
      EXPECT_EQ(is_cuspidal_element(e), is_cuspidal_character(p.group, e.character));
      EXPECT_EQ(gl_factor_inventory(e).size(), e.steps.size());
      for (std::size_t k = 0; k + 1 < e.steps.size(); ++k) EXPECT_EQ(e.steps[k].inner_jord, e.steps[k + 1].jord);
    }
  }
}

TEST(Packets, InvalidInputThrows) {
  auto x = fj("Sp1: triv:1, psi_a:1, psi_b:1");
  EXPECT_THROW(build_packet(x.family, x.jord), InvalidJordanSet);
}

TEST(Packets, JsonReport) {
  auto x = fj("Sp4: triv:1, triv:3, triv:5");
  auto j = cli::packet_json(build_packet(x.family, x.jord));
  EXPECT_EQ(j["summary"]["characters"], 4);
  EXPECT_EQ(j["summary"]["cuspidal"], 1);
  EXPECT_EQ(j["elements"][2]["steps"][1]["kind"], "GapShift");
  EXPECT_EQ(j["elements"][3]["base"]["jordan"], "Sp4: triv:1, triv:3, triv:5");
}

TEST(SuiteChecks, RandomizedPropertiesHold) {
  cli::SuiteOptions o;
  o.cases = 200;
  for (auto* check : {cli::check_dimension_parity, cli::check_coset_invariance, cli::check_order_robustness,
                      cli::check_validate_permutation}) {
    auto r = check(jordkit::test::labels(), o);
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_EQ(r.cases, o.cases);
  }
}
