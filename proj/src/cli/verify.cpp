#include "jordkit/cli/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "jordkit/cli/report.hpp"
#include "jordkit/compgroup.hpp"
#include "jordkit/packets.hpp"
#include "jordkit/parse.hpp"
#include "jordkit/reducibility.hpp"
#include "jordkit/speh.hpp"
#include "jordkit/unramified.hpp"

namespace jordkit::cli {

using nlohmann::json;

namespace {

// Collects mismatches as "field: expected X, got Y".
class Mismatches {
 public:
  template <class T>
  void expect(const std::string& field, const T& expected, const T& got) {
    if (expected == got) return;
    json e = expected, g = got;
    add(field + ": expected " + e.dump() + ", got " + g.dump());
  }
  void add(std::string m) {
    if (!text_.empty()) text_ += "; ";
    text_ += std::move(m);
  }
  bool empty() const { return text_.empty(); }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

void check_validate(const Registry& r, const json& f, Mismatches& out) {
  auto fj = parse_jordan(f.at("jordan").get<std::string>(), r.labels);
  auto rep = validate_jordan_set(fj.family, fj.jord);
  std::set<std::string> clauses;
  for (const auto& v : rep.violations) clauses.insert(std::string(to_string(v.clause)));
  const auto& ex = f.at("expect");
  out.expect("ok", ex.at("ok").get<bool>(), rep.ok());
  out.expect("clauses", ex.at("clauses").get<std::set<std::string>>(), clauses);
}

void check_packet(const Registry& r, const json& f, Mismatches& out) {
  auto fj = parse_jordan(f.at("jordan").get<std::string>(), r.labels);
  auto p = build_packet(fj.family, fj.jord);
  int cusp = 0, minpar = 0;
  std::vector<std::string> cusp_chars;
  bool trivial_minpar = false;
  for (const auto& e : p.elements) {
    if (is_cuspidal_element(e)) ++cusp, cusp_chars.push_back(p.group.format_character(e.character));
    minpar += supported_on_minimal_parabolic(e);
    if (e.character.negatives == 0) trivial_minpar = supported_on_minimal_parabolic(e);
  }
  const auto& ex = f.at("expect");
  if (ex.contains("characters")) out.expect("characters", ex["characters"].get<std::size_t>(), p.elements.size());
  if (ex.contains("cuspidal")) out.expect("cuspidal", ex["cuspidal"].get<int>(), cusp);
  if (ex.contains("minimal_parabolic")) out.expect("minimal_parabolic", ex["minimal_parabolic"].get<int>(), minpar);
  if (ex.contains("cuspidal_characters"))
    out.expect("cuspidal_characters", ex["cuspidal_characters"].get<std::vector<std::string>>(), cusp_chars);
  if (ex.contains("basis")) {
    std::vector<std::string> basis;
    for (Subset b : p.group.basis()) basis.push_back(p.group.describe(b));
    out.expect("basis", ex["basis"].get<std::vector<std::string>>(), basis);
  }
  if (ex.contains("trivial_minimal_parabolic"))
    out.expect("trivial_minimal_parabolic", ex["trivial_minimal_parabolic"].get<bool>(), trivial_minpar);
}

void check_element(const Registry& r, const json& f, Mismatches& out) {
  auto fj = parse_jordan(f.at("jordan").get<std::string>(), r.labels);
  auto g = ComponentGroup::make(fj.family, fj.jord);
  auto e = build_element(g, g.parse_character(f.at("character").get<std::string>()));
  json steps = json::array();
  for (const auto& s : e.steps) {
    json sel = json::array();
    for (const auto& x : s.selections)
      sel.push_back({{"rule", to_string(x.rule)}, {"segment", to_string(x.segment)}, {"embeds", x.embeds}});
    steps.push_back({{"kind", to_string(s.kind)}, {"segment", to_string(s.segment)}, {"selections", sel}});
  }
  const auto& ex = f.at("expect");
  out.expect("steps", ex.at("steps"), steps);
  out.expect("base", ex.at("base").get<std::string>(), format_jordan(e.base_family, e.base_jord));
  out.expect("base_character", ex.at("base_character").get<std::string>(), base_character_text(e));
}

void check_cuspidal_count(const Registry& r, const json& f, Mismatches& out) {
  auto fj = parse_jordan(f.at("jordan").get<std::string>(), r.labels);
  require_valid(fj.family, fj.jord);
  out.expect("count", f.at("expect").at("count").get<std::uint64_t>(), count_cuspidal_characters(fj.family, fj.jord));
}

void check_reducibility_table(const Registry& r, const json& f, Mismatches& out) {
  auto fj = parse_jordan(f.at("jordan").get<std::string>(), r.labels);
  require_valid(fj.family, fj.jord);
  const auto& rho = r.labels.at(f.at("rho").get<std::string>());
  std::vector<int> reducible;
  for (int m = 1; m <= f.at("max_m").get<int>(); ++m)
    if (is_reducible_tempered(fj.family.series, fj.jord, JordanBlock{rho, m})) reducible.push_back(m);
  out.expect("reducible", f.at("expect").at("reducible").get<std::vector<int>>(), reducible);
}

void check_segment_table(const Registry& r, const json& f, Mismatches& out) {
  const auto& ds = r.dataset(f.at("dataset").get<std::string>());
  std::vector<int> reducible;
  for (int m = 1; m <= f.at("max_m").get<int>(); ++m)
    if (segment_induction_reducible(Segment::centered(ds.data.rho, m), ds.data)) reducible.push_back(m);
  out.expect("reducible", f.at("expect").at("reducible").get<std::vector<int>>(), reducible);
}

Series parse_series(const std::string& s) {
  if (s == "Sp") return Series::Sp;
  if (s == "SO") return Series::SO_odd;
  throw std::invalid_argument("family must be Sp or SO, got '" + s + "'");
}

void check_count(const Registry&, const json& f, Mismatches& out) {
  Series s = parse_series(f.at("family").get<std::string>());
  int n = f.at("rank").get<int>();
  BigInt v = f.value("isolated", false) ? count_isolated(s, n) : count_strongly_negative(s, n);
  out.expect("value", f.at("expect").at("value").get<std::string>(), v.str());
}

void check_speh(const Registry& r, const json& f, Mismatches& out) {
  const auto& rho = r.labels.at(f.at("rho").get<std::string>());
  auto g = speh_determinant(rho, f.at("l").get<int>(), f.at("m").get<int>());
  auto key = [](const json& terms) {
    std::set<std::pair<std::int64_t, std::vector<std::string>>> s;
    for (const auto& t : terms) s.insert({t.at("coeff").get<std::int64_t>(), t.at("segments").get<std::vector<std::string>>()});
    return s;
  };
  auto expected = key(f.at("expect").at("terms"));
  auto got = key(grothendieck_json(g));
  if (expected != got) out.expect("terms", f.at("expect").at("terms"), grothendieck_json(g));
}

using FixtureCheck = void (*)(const Registry&, const json&, Mismatches&);

struct KindInfo {
  const char* kind;
  const char* group;
  FixtureCheck check;
};

constexpr KindInfo kKinds[] = {
    {"validate", "core", check_validate},
    {"packet", "packets", check_packet},
    {"element", "packets", check_element},
    {"cuspidal_count", "compgroup", check_cuspidal_count},
    {"reducibility_table", "reducibility", check_reducibility_table},
    {"segment_table", "reducibility", check_segment_table},
    {"count", "unramified", check_count},
    {"speh", "speh", check_speh},
};

const KindInfo* kind_info(const std::string& kind) {
  for (const auto& k : kKinds)
    if (kind == k.kind) return &k;
  return nullptr;
}

}  // namespace

std::string fixture_group(const std::string& kind) {
  if (const auto* k = kind_info(kind)) return k->group;
  return "unknown";
}

std::vector<std::string> verify_groups() {
  return {"core", "compgroup", "reducibility", "packets", "unramified", "antipodes", "speh"};
}

CheckResult run_fixture(const Registry& r, const Fixture& f) {
  CheckResult res;
  res.group = fixture_group(f.kind);
  res.name = f.name;
  res.anchor = f.anchor;
  res.cases = 1;
  Mismatches m;
  try {
    const auto* k = kind_info(f.kind);
    if (!k) throw std::invalid_argument("unknown fixture kind '" + f.kind + "'");
    k->check(r, f.body, m);
  } catch (const std::exception& e) {
    m.add(std::string("error: ") + e.what());
  }
  res.passed = m.empty();
  res.detail = m.text();
  return res;
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : fixtures) n += !c.passed;
  for (const auto& c : suites) n += !c.passed;
  return n;
}

VerifyReport run_verify(const Registry& r, const VerifyOptions& o) {
  if (o.only) {
    auto groups = verify_groups();
    if (std::find(groups.begin(), groups.end(), *o.only) == groups.end())
      throw std::invalid_argument("unknown verify group '" + *o.only + "'");
  }
  VerifyReport rep;
  for (const auto& f : r.fixtures)
    if (!o.only || fixture_group(f.kind) == *o.only) rep.fixtures.push_back(run_fixture(r, f));
  if (o.run_suites)
    for (const auto& s : property_suites())
      if (!o.only || s.group == *o.only) {
        CheckResult c;
        try {
          c = s.run(r.labels, o.suites);
        } catch (const std::exception& e) {
          c = CheckResult{s.group, s.name, "", false, std::string("error: ") + e.what(), 0};
        }
        rep.suites.push_back(std::move(c));
      }
  return rep;
}

}  // namespace jordkit::cli
