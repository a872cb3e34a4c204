#include "jordkit/cli/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "jordkit/antipodes.hpp"
#include "jordkit/compgroup.hpp"
#include "jordkit/packets.hpp"
#include "jordkit/reducibility.hpp"
#include "jordkit/speh.hpp"
#include "jordkit/unramified.hpp"

namespace jordkit::cli {

namespace {

class Recorder {
 public:
  Recorder(std::string group, std::string name, std::string anchor) {
    r_.group = std::move(group);
    r_.name = std::move(name);
    r_.anchor = std::move(anchor);
  }
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (r_.passed) r_.detail = what;
    r_.passed = false;
  }
  void count() { ++r_.cases; }
  CheckResult done() {
    if (r_.passed) r_.detail = std::to_string(r_.cases) + " cases";
    return r_;
  }

 private:
  CheckResult r_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Series random_series(std::mt19937_64& rng) { return uniform(rng, 0, 1) ? Series::Sp : Series::SO_odd; }

ComponentCharacter random_character(std::mt19937_64& rng, const ComponentGroup& g) {
  Subset f = rng() & g.full();
  if (g.family().series == Series::Sp) return g.from_function(f);
  if (gf2::parity(f)) f ^= 1;
  return {f};
}

Subset random_member(std::mt19937_64& rng, const ComponentGroup& g) {
  Subset e = rng() & g.full();
  if (!g.contains(e)) e ^= g.dim_parity_functional() & (~g.dim_parity_functional() + 1);  // lowest odd block
  return e;
}

int sum_m(const JordanSet& j) {
  int s = 0;
  for (const auto& b : j) s += b.m;
  return s;
}

std::string describe_case(const GroupFamily& fam, const JordanSet& j) { return fam.name() + " " + to_string(j); }

std::vector<Segment> sorted_segments(const PacketElement& e) {
  auto v = gl_factor_inventory(e);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

RandomJordan random_valid_jordan(std::mt19937_64& rng, const LabelTable& labels, Series s, int max_blocks) {
  auto pool = labels.all();
  const PhiType required = s == Series::Sp ? PhiType::orthogonal : PhiType::symplectic;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(pool.begin(), pool.end(), rng);
    int lines = uniform(rng, s == Series::SO_odd ? 0 : 1, std::min<int>(4, static_cast<int>(pool.size())));
    std::vector<JordanBlock> blocks;
    for (int i = 0; i < lines; ++i) {
      const auto& rho = pool[static_cast<std::size_t>(i)];
      int start = rho.phi_type == required ? 1 : 2;
      if (uniform(rng, 0, 1)) {
        int k = uniform(rng, 1, 4);
        for (int t = 0; t < k; ++t) blocks.push_back({rho, start + 2 * t});
      } else {
        bool any = false;
        for (int t = 0; t < 6; ++t)
          if (uniform(rng, 0, 9) < 4) blocks.push_back({rho, start + 2 * t}), any = true;
        if (!any) blocks.push_back({rho, start + 2 * uniform(rng, 0, 5)});
      }
    }
    if (static_cast<int>(blocks.size()) > max_blocks) continue;
    JordanSet j(std::move(blocks));
    int dim = j.total_dimension();
    if (s == Series::Sp && dim % 2 == 0) continue;
    GroupFamily fam{s, s == Series::Sp ? (dim - 1) / 2 : dim / 2};
    if (validate_jordan_set(fam, j).ok()) return {fam, j};
  }
  throw std::logic_error("random_valid_jordan: no admissible set found");
}

std::vector<JordanBlock> random_blocks(std::mt19937_64& rng, const LabelTable& labels, int max_blocks) {
  auto pool = labels.all();
  std::set<std::pair<std::string, int>> seen;
  std::vector<JordanBlock> out;
  int n = uniform(rng, 0, max_blocks);
  for (int i = 0; i < n; ++i) {
    const auto& rho = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    int m = uniform(rng, 1, 8);
    if (seen.insert({rho.id, m}).second) out.push_back({rho, m});
  }
  return out;
}

CheckResult check_dimension_parity(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("packets", "dimension-parity-conservation",
               "each step removes an even dimension; bases are gap-free cuspidal pairs of the right parity");
  std::mt19937_64 rng(o.seed);
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, random_series(rng), 9);
    auto g = ComponentGroup::make(fam, j);
    auto e = build_element(g, random_character(rng, g));
    const std::string where = describe_case(fam, j);
    rec.count();
    for (const auto& s : e.steps) {
      int removed = s.jord.total_dimension() - s.inner_jord.total_dimension();
      rec.check(removed > 0 && removed % 2 == 0, "odd or non-positive dimension change in " + where);
      rec.check(sum_m(s.inner_jord) < sum_m(s.jord), "step measure did not decrease in " + where);
      if (s.kind == StepKind::HalfShift) {
        JordanBlock d2{s.segment.rho, 2};
        auto idx = s.jord.index_of(d2.rho.id, 2);
        rec.check(idx.has_value() && s.inner_jord == s.jord.without(std::span(&d2, 1)),
                  "half shift did not remove exactly delta(rho,2) in " + where);
        if (idx) {
          auto expected = s.values;
          expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(*idx));
          rec.check(expected == s.inner_values, "half shift character is not the restriction in " + where);
        }
      }
    }
    rec.check(static_cast<int>(e.steps.size()) <= sum_m(j), "recursion deeper than the step measure in " + where);
    int bd = e.base_jord.total_dimension();
    if (fam.series == Series::Sp) rec.check(bd % 2 == 1 && bd >= 1, "Sp base of even dimension in " + where);
    else rec.check(bd % 2 == 0, "SO base of odd dimension in " + where);
    rec.check(!has_gaps(e.base_jord), "base has gaps in " + where);
    rec.check(is_cuspidal_function(e.base_jord, e.base_character.negatives), "base character not cuspidal in " + where);
  }
  return rec.done();
}

CheckResult check_coset_invariance(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("compgroup", "cuspidality-coset-invariance",
               "for Sp, f and f*lambda (lambda = dimension parity) are cuspidal together");
  std::mt19937_64 rng(o.seed + 1);
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, Series::Sp, 12);
    auto g = ComponentGroup::make(fam, j);
    Subset f = rng() & g.full();
    Subset lambda = g.dim_parity_functional();
    rec.count();
    rec.check(is_cuspidal_function(j, f) == is_cuspidal_function(j, f ^ lambda),
              "coset representatives disagree on " + describe_case(fam, j));
    rec.check(is_cuspidal_character(g, g.from_function(f)) == is_cuspidal_function(j, f),
              "normalized representative disagrees on " + describe_case(fam, j));
  }
  return rec.done();
}

CheckResult check_order_robustness(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("packets", "order-robustness",
               "element attributes do not depend on which line is processed first");
  std::mt19937_64 rng(o.seed + 2);
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, random_series(rng), 10);
    auto g = ComponentGroup::make(fam, j);
    auto ch = random_character(rng, g);
    auto canonical = build_element(g, ch);
    TieBreak tie(rng());
    auto shuffled = build_element(g, ch, &tie);
    const std::string where = describe_case(fam, j) + " character " + g.format_character(ch);
    rec.count();
    rec.check(is_cuspidal_element(canonical) == is_cuspidal_element(shuffled), "cuspidal flag differs for " + where);
    rec.check(supported_on_minimal_parabolic(canonical) == supported_on_minimal_parabolic(shuffled),
              "minimal-parabolic flag differs for " + where);
    rec.check(canonical.base_jord == shuffled.base_jord, "base Jordan set differs for " + where);
    rec.check(canonical.base_character == shuffled.base_character, "base character differs for " + where);
    rec.check(sorted_segments(canonical) == sorted_segments(shuffled), "segment multiset differs for " + where);
    auto lean = ElementSummarizer(g).summarize(ch.negatives);
    rec.check(lean.cuspidal == is_cuspidal_element(canonical) &&
                  lean.minimal_parabolic == supported_on_minimal_parabolic(canonical) &&
                  lean.steps == static_cast<int>(canonical.steps.size()),
              "summary disagrees with the descriptor for " + where);
  }
  return rec.done();
}

CheckResult check_validate_permutation(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("core", "validation-permutation-invariance", "validation does not depend on block order");
  std::mt19937_64 rng(o.seed + 3);
  for (std::size_t c = 0; c < o.cases; ++c) {
    std::vector<JordanBlock> blocks;
    GroupFamily fam;
    if (uniform(rng, 0, 1)) {
      auto r = random_valid_jordan(rng, labels, random_series(rng), 10);
      blocks.assign(r.jord.begin(), r.jord.end());
      fam = r.family;
    } else {
      blocks = random_blocks(rng, labels, 8);
      fam = GroupFamily{random_series(rng), uniform(rng, 0, 12)};
    }
    auto shuffled = blocks;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto a = validate_jordan_set(fam, JordanSet(blocks));
    auto b = validate_jordan_set(fam, JordanSet(shuffled));
    rec.count();
    bool same = a.ok() == b.ok() && a.violations.size() == b.violations.size();
    for (std::size_t i = 0; same && i < a.violations.size(); ++i)
      same = a.violations[i].clause == b.violations[i].clause && a.violations[i].blocks == b.violations[i].blocks;
    rec.check(same, "reordering changed the verdict for " + fam.name() + " " + to_string(JordanSet(blocks)));
  }
  return rec.done();
}

namespace {

CheckResult check_valid_set_shape(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("core", "valid-set-shape",
               "Sp sets have odd dimension, SO sets even; one parity per line; a_minus chains terminate");
  std::mt19937_64 rng(o.seed + 4);
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, random_series(rng), 12);
    rec.count();
    int d = j.total_dimension();
    rec.check(fam.series == Series::Sp ? d % 2 == 1 : d % 2 == 0, "wrong total parity for " + to_string(j));
    for (const auto& line : j.lines()) {
      auto ms = j.line(line.id);
      for (int m : ms) rec.check((m - ms.front()) % 2 == 0, "mixed parity on a line in " + to_string(j));
      int a = ms.back(), steps = 0;
      while (auto prev = a_minus(j, line, a)) {
        rec.check(*prev < a, "a_minus did not decrease in " + to_string(j));
        a = *prev;
        ++steps;
      }
      rec.check(steps + 1 == static_cast<int>(ms.size()), "a_minus chain skipped blocks in " + to_string(j));
    }
  }
  return rec.done();
}

CheckResult check_characters(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("compgroup", "characters-and-evaluation",
               "character count equals the group order, SO characters are trivial on the product, evaluation is multiplicative");
  std::mt19937_64 rng(o.seed + 5);
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, random_series(rng), 8);
    auto g = ComponentGroup::make(fam, j);
    auto chars = g.characters();
    rec.count();
    rec.check(chars.size() == g.order(), "character count differs from order for " + to_string(j));
    std::set<Subset> distinct;
    std::uint64_t brute_cusp = 0;
    for (const auto& ch : chars) {
      distinct.insert(ch.negatives);
      if (fam.series == Series::SO_odd) rec.check(g.evaluate(ch, g.full()) == 1, "SO character nontrivial on the product");
      brute_cusp += is_cuspidal_character(g, ch);
    }
    rec.check(distinct.size() == chars.size(), "repeated character for " + to_string(j));
    rec.check(brute_cusp == count_cuspidal_characters(fam, j), "cuspidal count disagrees with listing for " + to_string(j));
    if (has_gaps(j)) rec.check(brute_cusp == 0, "cuspidal character on a set with gaps");
    auto ch = random_character(rng, g);
    Subset e1 = random_member(rng, g), e2 = random_member(rng, g);
    rec.check(g.evaluate(ch, e1 ^ e2) == g.evaluate(ch, e1) * g.evaluate(ch, e2), "evaluation not multiplicative");
    rec.check(g.evaluate(ch, 0) == 1, "character nontrivial on the identity");
    std::vector<int> vals = g.basis_values(ch);
    rec.check(g.parse_character(g.format_character(ch)) == ch, "sign string does not round-trip");
  }
  return rec.done();
}

CheckResult check_reducibility(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("reducibility", "tempered-reducibility-partition",
               "irreducible members of the line's parity are exactly the Jordan blocks; both readings agree off the exempt line");
  std::mt19937_64 rng(o.seed + 6);
  const auto all = labels.all();
  const auto* triv = labels.trivial();
  for (std::size_t c = 0; c < o.cases / 4 + 1; ++c) {
    auto [fam, j] = random_valid_jordan(rng, labels, random_series(rng), 10);
    rec.count();
    for (const auto& rho : all) {
      auto line = j.line(rho.id);
      Parity p = line.empty() ? rho.base_parity_for(fam.series) : parity_of(line.front());
      std::vector<int> exceptions;
      for (int m = 1; m <= 60; ++m) {
        JordanBlock b{rho, m};
        bool red = is_reducible_tempered(fam.series, j, b);
        if (parity_of(m) != p) rec.check(!red, "reducible at the wrong parity");
        else if (!red) exceptions.push_back(m);
        if (triv && m <= 15) {
          auto base = rank_zero_jordan_set(fam.series, *triv);
          rec.check(equivalent_formulation_check(fam.series, j, b, base).agrees,
                    "readings disagree for " + to_string(b) + " and " + to_string(j));
        }
      }
      rec.check(exceptions == line, "exceptions differ from the Jordan line of " + rho.id + " in " + to_string(j));
    }
  }
  return rec.done();
}

CheckResult check_reducibility_roundtrip(const LabelTable& labels, const SuiteOptions&) {
  Recorder rec("reducibility", "point-line-roundtrip", "x -> Jordan line -> x for x = 1, 3/2, ..., 10");
  for (const auto& rho : labels.all()) {
    for (int d = 2; d <= 20; ++d) {
      auto x = HalfInt::from_doubled(d);
      auto blocks = jord_line_from_reducibility(rho, x);
      JordanSet j(blocks);
      rec.count();
      rec.check(reducibility_from_jord_line(j, rho) == x, "roundtrip failed at " + x.to_string());
      rec.check(!has_gaps(j), "line from " + x.to_string() + " has gaps");
      rec.check(j.line(rho.id).front() == (d % 2 == 0 ? 1 : 2), "line from " + x.to_string() + " ends wrongly");
    }
  }
  return rec.done();
}

CheckResult check_contragredient(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("reducibility", "segment-contragredient", "segment reducibility is unchanged by the contragredient");
  std::mt19937_64 rng(o.seed + 7);
  const auto all = labels.all();
  for (std::size_t c = 0; c < o.cases; ++c) {
    const auto& rho = all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
    auto b = HalfInt::from_doubled(uniform(rng, -12, 12));
    auto e = b + HalfInt(uniform(rng, 0, 8));
    auto seg = Segment::make(rho, b, e);
    CuspidalReducibilityData data{rho, "random", {}};
    for (int k = uniform(rng, 0, 3); k > 0; --k) data.points.push_back(HalfInt::from_doubled(uniform(rng, 0, 10)));
    rec.count();
    rec.check(segment_induction_reducible(seg, data) == segment_induction_reducible(seg.contragredient(), data),
              "contragredient changed reducibility of " + to_string(seg));
  }
  return rec.done();
}

CheckResult check_unramified(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("unramified", "counting-oracle", "dynamic programming agrees with explicit enumeration");
  const auto* triv = labels.trivial();
  const auto* psi = labels.find("psi_un");
  for (Series s : {Series::Sp, Series::SO_odd}) {
    for (int n = 0; n <= o.unramified_oracle_max; ++n) {
      auto params = enumerate_sn_params(s, n);
      std::size_t iso = 0;
      for (const auto& p : params) {
        rec.check(is_valid_param(s, n, p), "enumerated an invalid parameter " + to_string(p));
        if (s == Series::Sp) rec.check(p.p1.size() % 2 == 1, "p1 with an even number of parts: " + to_string(p));
        iso += satisfies_isolation(s, p);
        if (triv && psi) {
          auto j = param_to_jordan(s, p, *triv, *psi);
          rec.check(validate_jordan_set(GroupFamily{s, n}, j).ok(), "parameter gives an invalid Jordan set: " + to_string(p));
        }
      }
      rec.check(std::is_sorted(params.begin(), params.end()), "enumeration is not sorted");
      rec.count();
      rec.check(count_strongly_negative(s, n) == params.size(),
                "strongly negative count differs from enumeration at rank " + std::to_string(n));
      rec.check(count_isolated(s, n) == iso, "isolated count differs from enumeration at rank " + std::to_string(n));
    }
  }
  for (int n = 0; n <= 200; n += 7)
    rec.check(count_isolated(Series::Sp, n) <= count_strongly_negative(Series::Sp, n), "isolated count exceeds total");
  return rec.done();
}

CheckResult check_speh(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("speh", "determinant-invariants",
               "identity monomial with coefficient +1, at most m! monomials, every monomial of total length l*m");
  const CuspidalLabel rho = labels.all().front();
  for (int l = 1; l <= o.speh_max_product; ++l)
    for (int m = 1; l * m <= o.speh_max_product; ++m) {
      auto g = speh_determinant(rho, l, m);
      auto st = expansion_stats(g, standard_multisegment(rho, l, m));
      std::uint64_t fact = 1;
      for (int k = 2; k <= m; ++k) fact *= static_cast<std::uint64_t>(k);
      rec.count();
      const std::string where = "(l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")";
      rec.check(st.identity_coefficient == 1, "identity coefficient is not +1 at " + where);
      rec.check(st.terms <= fact, "more than m! monomials at " + where);
      auto segs = speh_segments(l, m);
      std::multiset<HalfInt> bs, es;
      for (auto [b, e] : segs) bs.insert(b), es.insert(e);
      for (const auto& [ms, c] : g.terms()) {
        int len = 0;
        for (const auto& s : ms) {
          len += s.length();
          rec.check(bs.count(s.b) && es.count(s.e), "monomial segment off the grid at " + where);
        }
        rec.check(len == l * m, "monomial of length " + std::to_string(len) + " at " + where);
      }
    }
  if (o.speh_max_product >= 2) {
    auto g = speh_determinant(rho, 1, 2);
    auto st = expansion_stats(g, standard_multisegment(rho, 1, 2));
    rec.check(st.terms == 2 && st.positive == 1 && st.negative == 1, "(1,2) is not induced minus Steinberg");
  }
  return rec.done();
}

CheckResult check_grothendieck_algebra(const LabelTable& labels, const SuiteOptions& o) {
  Recorder rec("speh", "grothendieck-ring-laws", "product is commutative, associative and distributes over sums");
  std::mt19937_64 rng(o.seed + 8);
  const CuspidalLabel rho = labels.all().front();
  auto random_element = [&] {
    GrothendieckElement g;
    for (int t = uniform(rng, 0, 3); t > 0; --t) {
      Multisegment ms;
      for (int k = uniform(rng, 0, 2); k > 0; --k) {
        auto b = HalfInt::from_doubled(uniform(rng, -4, 4));
        ms.push_back(Segment::make(rho, b, b + HalfInt(uniform(rng, 0, 2))));
      }
      g.add(ms, uniform(rng, -3, 3));
    }
    return g;
  };
  for (std::size_t c = 0; c < o.cases; ++c) {
    auto a = random_element(), b = random_element(), d = random_element();
    rec.count();
    rec.check(a * b == b * a, "product not commutative");
    rec.check((a * b) * d == a * (b * d), "product not associative");
    rec.check(a * (b + d) == a * b + a * d, "product does not distribute");
    rec.check(a * GrothendieckElement::unit() == a, "unit is not neutral");
  }
  return rec.done();
}

CheckResult check_number_theory(const LabelTable&, const SuiteOptions&) {
  Recorder rec("antipodes", "sums-of-squares-helpers",
               "three-square decompositions re-evaluate; every l <= 10^4 is a sum of three triangular numbers");
  for (std::int64_t l = 0; l <= 10000; ++l) {
    auto [m1, m2, m3, m4] = gauss_decomposition_sp(l);
    rec.count();
    rec.check(m1 * (m1 + 1) + m2 * m2 + m3 * m3 + m4 * m4 == l, "decomposition does not re-evaluate at " + std::to_string(l));
    rec.check(m1 == (is_sum_of_three_squares(l) ? 0 : 1), "m1 does not follow the three-squares test at " + std::to_string(l));
    auto t = three_triangular(l);
    rec.check(t && (*t)[0] * ((*t)[0] + 1) / 2 + (*t)[1] * ((*t)[1] + 1) / 2 + (*t)[2] * ((*t)[2] + 1) / 2 == l,
              "no three-triangular witness for " + std::to_string(l));
  }
  for (std::int64_t n = 0; n <= 2000; ++n) {
    bool brute = false;
    for (std::int64_t a = 0; a * a <= n && !brute; ++a)
      for (std::int64_t b = 0; a * a + b * b <= n && !brute; ++b)
        for (std::int64_t c = 0; a * a + b * b + c * c <= n && !brute; ++c) brute = a * a + b * b + c * c == n;
    rec.check(brute == is_sum_of_three_squares(n), "three-squares test wrong at " + std::to_string(n));
  }
  return rec.done();
}

}  // namespace

CheckResult check_antipodes(const LabelTable&, const SuiteOptions& o) {
  Recorder rec("antipodes", "antipodes-iff-even-rank",
               "a packet with antipodes exists iff the rank is even, by counting and by packet search");
  const QuadCharSpace space(2);
  for (Series s : {Series::SO_odd, Series::Sp}) {
    for (int n = 1; n <= o.antipode_max_rank; ++n) {
      const std::string where = std::string(to_string(s)) + " rank " + std::to_string(n);
      auto verdict = exists_antipodal_packet(s, n, space);
      auto cands = antipodal_candidates(s, n, space);
      auto search = packet_level_antipodes(s, n, space);
      std::sort(cands.begin(), cands.end());
      std::sort(search.qualifying.begin(), search.qualifying.end());
      rec.count();
      rec.check(verdict == (n % 2 == 0 ? Verdict::yes : Verdict::no), "counting route gives the wrong parity at " + where);
      rec.check(search.qualifying.empty() == (n % 2 == 1), "packet search gives the wrong parity at " + where);
      rec.check(cands == search.qualifying, "candidate list differs from packet search at " + where);
      bool iwahori = s == Series::Sp ? iwahori_antipodes_sp(n) : iwahori_antipodes_so(n);
      if (iwahori) rec.check(verdict == Verdict::yes, "Iwahori antipodes without antipodes at " + where);
      if (s == Series::Sp)
        for (const auto& l : cands) {
          int odd_nontrivial = 0;
          for (const auto& line : l.lines) odd_nontrivial += line.character != 0 && line.k % 2 == 1;
          rec.check(odd_nontrivial == 0, "candidate with odd nontrivial lines at " + where);
        }
    }
  }
  return rec.done();
}

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites = {
      {"core", "validation-permutation-invariance", check_validate_permutation},
      {"core", "valid-set-shape", check_valid_set_shape},
      {"compgroup", "characters-and-evaluation", check_characters},
      {"compgroup", "cuspidality-coset-invariance", check_coset_invariance},
      {"reducibility", "tempered-reducibility-partition", check_reducibility},
      {"reducibility", "point-line-roundtrip", check_reducibility_roundtrip},
      {"reducibility", "segment-contragredient", check_contragredient},
      {"packets", "dimension-parity-conservation", check_dimension_parity},
      {"packets", "order-robustness", check_order_robustness},
      {"unramified", "counting-oracle", check_unramified},
      {"speh", "determinant-invariants", check_speh},
      {"speh", "grothendieck-ring-laws", check_grothendieck_algebra},
      {"antipodes", "sums-of-squares-helpers", check_number_theory},
      {"antipodes", "antipodes-iff-even-rank", check_antipodes},
  };
  return suites;
}

}  // namespace jordkit::cli
