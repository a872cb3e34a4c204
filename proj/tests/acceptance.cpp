// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jordkit/antipodes.hpp"
#include "jordkit/cli/registry.hpp"
#include "jordkit/cli/report.hpp"
#include "jordkit/cli/selfcheck.hpp"
#include "jordkit/packets.hpp"
#include "jordkit/parse.hpp"
#include "jordkit/reducibility.hpp"
#include "jordkit/speh.hpp"
#include "jordkit/unramified.hpp"

using namespace jordkit;

namespace {

constexpr double kCountSeconds = 1.0;
constexpr double kAntipodeSeconds = 30.0;
constexpr std::size_t kSuiteCases = 1000;

const BigInt kSpStronglyNegative170("568385730874");
const BigInt kSpIsolated170("11322187942");
const BigInt kSpComplementary170("557063542932");

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double t = seconds_since(t0);
  failures += !o.passed;
  std::cout << (o.passed ? "PASS " : "FAIL ") << id << "  " << title << "  [" << std::fixed << std::setprecision(3)
            << t << " s]";
  if (!o.detail.str().empty()) std::cout << "  " << o.detail.str();
  std::cout << std::endl;
}

const cli::Registry& reg() {
  static const cli::Registry r = cli::Registry::builtin();
  return r;
}

FamilyJordan fj(const std::string& s) { return parse_jordan(s, reg().labels); }

struct PacketCounts {
  std::size_t elements = 0, cuspidal = 0, minimal = 0;
  std::vector<std::string> cuspidal_chars;
};

PacketCounts packet_counts(const std::string& jordan) {
  auto x = fj(jordan);
  auto p = build_packet(x.family, x.jord);
  PacketCounts c;
  c.elements = p.elements.size();
  for (const auto& e : p.elements) {
    if (is_cuspidal_element(e)) ++c.cuspidal, c.cuspidal_chars.push_back(p.group.format_character(e.character));
    c.minimal += supported_on_minimal_parabolic(e);
  }
  return c;
}

template <class T>
void expect_eq(Outcome& o, const std::string& what, const T& expected, const T& got) {
  if (expected == got) return;
  std::ostringstream os;
  os << what << ": expected " << expected << ", got " << got;
  o.fail(os.str());
}

void expect_packet(Outcome& o, const std::string& jordan, std::size_t elements, std::optional<std::size_t> cuspidal,
                   std::optional<std::size_t> minimal = std::nullopt) {
  auto c = packet_counts(jordan);
  expect_eq(o, jordan + " elements", elements, c.elements);
  if (cuspidal) expect_eq(o, jordan + " cuspidal", *cuspidal, c.cuspidal);
  if (minimal) expect_eq(o, jordan + " minimal-parabolic", *minimal, c.minimal);
}

std::vector<int> tempered_table(const std::string& jordan, const std::string& rho, int max_m) {
  auto x = fj(jordan);
  std::vector<int> out;
  for (int m = 1; m <= max_m; ++m)
    if (is_reducible_tempered(x.family.series, x.jord, {reg().labels.at(rho), m})) out.push_back(m);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

int main() {
  criterion("AC1", "Sp(340) strongly negative count", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    BigInt v = count_strongly_negative(Series::Sp, 170);
    double t = seconds_since(t0);
    expect_eq(o, "count", kSpStronglyNegative170, v);
    if (t >= kCountSeconds) o.fail("runtime " + std::to_string(t) + " s");
  });

  criterion("AC2", "Sp(340) isolated count and difference", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    BigInt iso = count_isolated(Series::Sp, 170);
    double t = seconds_since(t0);
    expect_eq(o, "isolated", kSpIsolated170, iso);
    expect_eq(o, "strongly negative minus isolated", kSpComplementary170, count_strongly_negative(Series::Sp, 170) - iso);
    if (t >= kCountSeconds) o.fail("runtime " + std::to_string(t) + " s");
  });

  criterion("AC3", "counting DP equals enumeration for n <= 12", [](Outcome& o) {
    for (Series s : {Series::Sp, Series::SO_odd})
      for (int n = 0; n <= 12; ++n) {
        auto params = enumerate_sn_params(s, n);
        std::size_t iso = 0;
        for (const auto& p : params) iso += satisfies_isolation(s, p);
        std::string where = std::string(to_string(s)) + " n=" + std::to_string(n);
        expect_eq(o, where + " strongly negative", BigInt(params.size()), count_strongly_negative(s, n));
        expect_eq(o, where + " isolated", BigInt(iso), count_isolated(s, n));
      }
  });

  criterion("AC4", "antipodes iff n even, n in [1,60], both routes", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    cli::SuiteOptions opts;
    opts.antipode_max_rank = 60;
    auto r = cli::check_antipodes(reg().labels, opts);
    double t = seconds_since(t0);
    if (!r.passed) o.fail(r.detail);
    expect_eq(o, "ranks checked", std::size_t{120}, r.cases);
    if (t >= kAntipodeSeconds) o.fail("runtime " + std::to_string(t) + " s");
  });

  criterion("AC5", "packet examples", [](Outcome& o) {
    auto ort1 = packet_counts("SO2: psi_a:2, psi_b:2");
    expect_eq(o, "two quadratic lines elements", std::size_t{2}, ort1.elements);
    expect_eq(o, "two quadratic lines cuspidal", std::size_t{1}, ort1.cuspidal);
    expect_packet(o, "SO3: psi_un:2, psi_a:2, psi_b:2", 4, 0);
    std::string symp_lines;
    for (int k = 1; k <= 6; ++k) {
      symp_lines += (k == 1 ? "" : ", ") + std::string("symp") + std::to_string(k) + ":1";
      std::size_t n = std::size_t{1} << (k - 1);
      expect_packet(o, "SO" + std::to_string(k) + ": " + symp_lines, n, n);
    }
    for (int k = 1; k <= 4; ++k) {
      std::string line_a, line_b;
      for (int l = 1; l <= k; ++l) {
        line_a += (l == 1 ? "" : ", ") + std::string("psi_a:") + std::to_string(2 * l);
        line_b += ", psi_b:" + std::to_string(2 * l);
      }
      auto x = fj("SO" + std::to_string(k * (k + 1)) + ": " + line_a + line_b);
      expect_eq(o, "two equal ladders k=" + std::to_string(k) + " cuspidal", std::uint64_t{1},
                count_cuspidal_characters(x.family, x.jord));
    }
    expect_packet(o, "Sp4: triv:1, triv:3, triv:5", 4, 1, 3);
    expect_packet(o, "Sp2: triv:1, psi_un:1, psi_un:3", 4, 2);
    expect_packet(o, "Sp2: triv:1, rho:2", 2, 1);
    expect_packet(o, "Sp6: triv:1, rho:2, rho:4", 4, 1);

    auto x = fj("Sp6: triv:1, rho:2, rho:4");
    auto g = ComponentGroup::make(x.family, x.jord);
    auto e = build_element(g, g.parse_character("+-"));
    std::vector<std::string> factors;
    for (const auto& s : gl_factor_inventory(e)) factors.push_back(to_string(s));
    std::vector<std::string> expected{"[1/2,1/2]rho", "[3/2,3/2]rho"};
    if (factors != expected) o.fail("phi(1,-1) factors differ");
    expect_eq(o, "phi(1,-1) base", std::string("Sp2: rho:2, triv:1"), format_jordan(e.base_family, e.base_jord));
    expect_eq(o, "phi(1,-1) base character", std::string("-"), cli::base_character_text(e));
  });

  criterion("AC6", "tempered reducibility tables for m <= 50", [](Outcome& o) {
    auto range = [](int from, int skip) {
      std::vector<int> v;
      for (int m = from; m <= 50; m += 2)
        if (m != skip) v.push_back(m);
      return v;
    };
    expect_eq(o, "SO(1) trivial line", join(range(2, -1)), join(tempered_table("SO0:", "triv", 50)));
    expect_eq(o, "Sp(0) trivial line", join(range(1, 1)), join(tempered_table("Sp0: triv:1", "triv", 50)));
    for (int k = 1; k <= 4; ++k) {
      std::string j = "Sp" + std::to_string(k) + ": triv:" + std::to_string(2 * k + 1);
      expect_eq(o, j, join(range(1, 2 * k + 1)), join(tempered_table(j, "triv", 50)));
    }
  });

  criterion("AC7", "reducibility point -> Jordan line -> point", [](Outcome& o) {
    for (const auto& rho : reg().labels.all())
      for (int d = 2; d <= 20; ++d) {
        auto x = HalfInt::from_doubled(d);
        JordanSet j(jord_line_from_reducibility(rho, x));
        auto back = reducibility_from_jord_line(j, rho);
        if (back != x) o.fail(rho.id + " at " + x.to_string());
      }
  });

  criterion("AC8", "Speh determinant expansions", [](Outcome& o) {
    const auto& t = reg().labels.at("triv");
    const auto& r = reg().labels.at("rho");
    auto seg = [](const CuspidalLabel& rho, int b2, int e2) {
      return Segment::make(rho, HalfInt::from_doubled(b2), HalfInt::from_doubled(e2));
    };
    GrothendieckElement g12, g22;
    g12.add(normalize({seg(t, -1, -1), seg(t, 1, 1)}), 1);
    g12.add(normalize({seg(t, -1, 1)}), -1);
    g22.add(normalize({seg(r, -2, 0), seg(r, 0, 2)}), 1);
    g22.add(normalize({seg(r, -2, 2), seg(r, 0, 0)}), -1);
    if (speh_determinant(t, 1, 2) != g12) o.fail("(1,2) expansion is " + to_string(speh_determinant(t, 1, 2)));
    if (speh_determinant(r, 2, 2) != g22) o.fail("(2,2) expansion is " + to_string(speh_determinant(r, 2, 2)));
    for (int l = 1; l <= 12; ++l)
      for (int m = 1; l * m <= 12; ++m) {
        auto st = expansion_stats(speh_determinant(r, l, m), standard_multisegment(r, l, m));
        std::size_t fact = 1;
        for (int k = 2; k <= m; ++k) fact *= static_cast<std::size_t>(k);
        std::string where = "(" + std::to_string(l) + "," + std::to_string(m) + ")";
        if (st.identity_coefficient != 1) o.fail(where + " identity coefficient " + std::to_string(st.identity_coefficient));
        if (st.terms > fact) o.fail(where + " has " + std::to_string(st.terms) + " terms");
      }
  });

  criterion("AC9", "randomized invariant suites", [](Outcome& o) {
    cli::SuiteOptions opts;
    opts.cases = kSuiteCases;
    for (auto* check : {cli::check_dimension_parity, cli::check_coset_invariance, cli::check_order_robustness,
                        cli::check_validate_permutation}) {
      auto r = check(reg().labels, opts);
      if (!r.passed) o.fail(r.name + ": " + r.detail);
      if (r.cases < kSuiteCases) o.fail(r.name + " ran " + std::to_string(r.cases) + " cases");
      o.detail << (o.detail.str().empty() ? "" : ", ") << r.name << " " << r.cases;
    }
  });

  std::cout << failures << " of 9 criteria failed" << std::endl;
  return failures;
}
