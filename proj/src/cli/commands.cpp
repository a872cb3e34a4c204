#include "jordkit/cli/commands.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jordkit/antipodes.hpp"
#include "jordkit/cli/registry.hpp"
#include "jordkit/cli/report.hpp"
#include "jordkit/cli/verify.hpp"
#include "jordkit/packets.hpp"
#include "jordkit/parse.hpp"
#include "jordkit/speh.hpp"
#include "jordkit/unramified.hpp"

namespace jordkit::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  std::optional<std::string> registry;
};

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

Series series_named(const std::string& s) { return s == "SO" ? Series::SO_odd : Series::Sp; }

// --- count / enumerate ------------------------------------------------------

struct CountArgs {
  std::string family;
  int rank = 0;
  bool isolated = false;
};

void add_count_flags(CLI::App* sub, CountArgs& a) {
  sub->add_option("--family", a.family, "Sp or SO")->required()->check(CLI::IsMember({"Sp", "SO"}));
  sub->add_option("--rank", a.rank, "rank n")->required()->check(CLI::NonNegativeNumber);
  sub->add_flag("--isolated", a.isolated, "only isolated parameters");
}

int cmd_count(const Globals& gl, const CountArgs& a, std::ostream& out) {
  const Series s = series_named(a.family);
  BigInt v = a.isolated ? count_isolated(s, a.rank) : count_strongly_negative(s, a.rank);
  if (gl.json) {
    auto j = envelope("count");
    j["family"] = to_string(s);
    j["rank"] = a.rank;
    j["isolated"] = a.isolated;
    j["value"] = v.str();
    emit(out, j);
  } else {
    out << v << "\n";
  }
  return 0;
}

int cmd_enumerate(const Globals& gl, const CountArgs& a, std::ostream& out) {
  const Series s = series_named(a.family);
  auto params = enumerate_sn_params(s, a.rank);
  json list = json::array();
  for (const auto& p : params) {
    if (a.isolated && !satisfies_isolation(s, p)) continue;
    if (gl.json) list.push_back({{"p1", p.p1}, {"p2", p.p2}});
    else out << to_string(p) << "\n";
  }
  if (gl.json) {
    auto j = envelope("enumerate");
    j["family"] = to_string(s);
    j["rank"] = a.rank;
    j["isolated"] = a.isolated;
    j["params"] = list;
    emit(out, j);
  }
  return 0;
}

// --- packet / character -----------------------------------------------------

FamilyJordan parse_valid(const Registry& r, const std::string& text) {
  auto fj = parse_jordan(text, r.labels);
  require_valid(fj.family, fj.jord);
  return fj;
}

ComponentGroup make_group(const FamilyJordan& fj, const std::string& basis) {
  if (basis.empty()) return ComponentGroup::make(fj.family, fj.jord);
  return ComponentGroup::with_basis(fj.family, fj.jord, parse_basis(fj.jord, basis));
}

struct PacketArgs {
  std::string jordan;
  std::string basis;
  std::string character;
  std::optional<std::uint64_t> shuffle_seed;
};

int cmd_packet(const Globals& gl, const Registry& r, const PacketArgs& a, std::ostream& out) {
  auto g = make_group(parse_valid(r, a.jordan), a.basis);
  Packet p{g, {}};
  for (const auto& c : g.characters()) p.elements.push_back(build_element(g, c));
  if (gl.json) {
    auto j = envelope("packet");
    j.update(packet_json(p));
    emit(out, j);
  } else {
    out << packet_text(p);
  }
  return 0;
}

int cmd_character(const Globals& gl, const Registry& r, const PacketArgs& a, std::ostream& out) {
  auto g = make_group(parse_valid(r, a.jordan), a.basis);
  auto c = g.parse_character(a.character);
  std::optional<TieBreak> rng;
  if (a.shuffle_seed) rng.emplace(*a.shuffle_seed);
  auto e = build_element(g, c, rng ? &*rng : nullptr);
  if (gl.json) {
    auto j = envelope("character");
    j["group"] = group_json(g);
    j["element"] = element_json(g, e);
    emit(out, j);
  } else {
    out << format_jordan(g.family(), g.jord()) << "\n" << element_text(g, e);
    out << "induction from the base:";
    for (const auto& s : construction_order(e)) out << " " << to_string(s);
    out << "\n";
  }
  return 0;
}

// --- reducibility -----------------------------------------------------------

struct ReducibilityArgs {
  std::string jordan;
  std::string rho;
  std::string dataset;
  std::string point;
  int max_m = 50;
};

int cmd_reducibility(const Globals& gl, const Registry& r, const ReducibilityArgs& a, std::ostream& out) {
  auto j = envelope("reducibility");
  if (!a.point.empty()) {
    if (a.rho.empty()) throw std::invalid_argument("--point needs --rho");
    const auto& rho = r.labels.at(a.rho);
    auto x = HalfInt::parse(a.point);
    auto blocks = jord_line_from_reducibility(rho, x);
    JordanSet line(blocks);
    if (gl.json) {
      j["mode"] = "point";
      j["rho"] = rho.id;
      j["point"] = x.to_string();
      json ms = json::array();
      for (const auto& b : line) ms.push_back(b.m);
      j["jordan_line"] = ms;
      emit(out, j);
    } else {
      out << to_string(line) << "\n";
    }
    return 0;
  }

  std::vector<std::pair<int, bool>> rows;
  if (!a.dataset.empty()) {
    const auto& ds = r.dataset(a.dataset);
    for (int m = 1; m <= a.max_m; ++m)
      rows.emplace_back(m, segment_induction_reducible(Segment::centered(ds.data.rho, m), ds.data));
    j["mode"] = "segments";
    j["dataset"] = ds.name;
    j["rho"] = ds.data.rho.id;
  } else {
    if (a.jordan.empty() || a.rho.empty())
      throw std::invalid_argument("reducibility needs a Jordan set and --rho, --dataset, or --point with --rho");
    auto fj = parse_valid(r, a.jordan);
    const auto& rho = r.labels.at(a.rho);
    for (int m = 1; m <= a.max_m; ++m)
      rows.emplace_back(m, is_reducible_tempered(fj.family.series, fj.jord, JordanBlock{rho, m}));
    j["mode"] = "tempered";
    j["jordan"] = format_jordan(fj.family, fj.jord);
    j["rho"] = rho.id;
  }
  if (gl.json) {
    json table = json::array();
    for (auto [m, red] : rows) table.push_back({{"m", m}, {"reducible", red}});
    j["table"] = table;
    emit(out, j);
  } else {
    for (auto [m, red] : rows) out << std::setw(4) << m << "  " << (red ? "reducible" : "irreducible") << "\n";
  }
  return 0;
}

// --- speh -------------------------------------------------------------------

struct SpehArgs {
  int l = 1;
  int m = 1;
  std::string rho;
};

int cmd_speh(const Globals& gl, const Registry& r, const SpehArgs& a, std::ostream& out) {
  const auto& rho = a.rho.empty() ? r.trivial() : r.labels.at(a.rho);
  auto g = speh_determinant(rho, a.l, a.m);
  auto st = expansion_stats(g, standard_multisegment(rho, a.l, a.m));
  if (gl.json) {
    auto j = envelope("speh");
    j["rho"] = rho.id;
    j["l"] = a.l;
    j["m"] = a.m;
    j["terms"] = grothendieck_json(g);
    j["stats"] = {{"terms", st.terms},
                  {"identity_coefficient", st.identity_coefficient},
                  {"positive", st.positive},
                  {"negative", st.negative}};
    emit(out, j);
  } else {
    for (const auto& [ms, c] : g.terms()) out << (c > 0 ? "+" : "") << c << "  " << to_string(ms) << "\n";
    out << st.terms << " terms (" << st.positive << " positive, " << st.negative << " negative)\n";
  }
  return 0;
}

// --- antipodes --------------------------------------------------------------

struct AntipodeArgs {
  std::string family;
  int max_rank = 60;
  int min_rank = 1;
  bool packet_search = false;
  int quad_dim = 2;
};

int cmd_antipodes(const Globals& gl, const AntipodeArgs& a, std::ostream& out) {
  const Series s = series_named(a.family);
  const QuadCharSpace space(a.quad_dim);
  json rows = json::array();
  bool consistent = true;
  for (int n = a.min_rank; n <= a.max_rank; ++n) {
    auto verdict = exists_antipodal_packet(s, n, space);
    auto cands = antipodal_candidates(s, n, space);
    std::optional<PacketSearch> search;
    if (a.packet_search) {
      search = packet_level_antipodes(s, n, space);
      bool found = !search->qualifying.empty();
      if (verdict != Verdict::unknown && found != (verdict == Verdict::yes)) consistent = false;
    }
    std::string witness = cands.empty() ? "" : to_string(cands.front(), space);
    if (gl.json) {
      json row = {{"n", n}, {"exists", to_string(verdict)}, {"candidates", cands.size()}};
      if (!witness.empty()) row["witness"] = witness;
      if (search)
        row["packet_search"] = {{"qualifying", search->qualifying.size()},
                                {"ladder_sets", search->ladder_sets},
                                {"characters_examined", search->characters_examined}};
      rows.push_back(row);
    } else {
      out << std::setw(4) << n << "  " << std::setw(7) << to_string(verdict);
      if (search) out << "  search " << (search->qualifying.empty() ? "none" : "found") << " (" << search->qualifying.size() << ")";
      if (!witness.empty()) out << "  " << witness;
      out << "\n";
    }
  }
  if (gl.json) {
    auto j = envelope("antipodes");
    j["family"] = to_string(s);
    j["quad_dim"] = a.quad_dim;
    j["rows"] = rows;
    if (a.packet_search) j["routes_agree"] = consistent;
    emit(out, j);
  } else if (a.packet_search) {
    out << (consistent ? "routes agree" : "routes disagree") << "\n";
  }
  return consistent ? 0 : 1;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string only;
  std::size_t cases = 1000;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool fixtures_only = false;
};

json check_json(const CheckResult& c) {
  return {{"group", c.group}, {"name", c.name}, {"anchor", c.anchor},
          {"passed", c.passed}, {"detail", c.detail}, {"cases", c.cases}};
}

int cmd_verify(const Globals& gl, const Registry& r, const VerifyArgs& a, std::ostream& out) {
  VerifyOptions o;
  if (!a.only.empty()) o.only = a.only;
  o.suites.cases = a.cases;
  o.suites.seed = a.seed;
  o.run_suites = !a.fixtures_only;
  auto rep = run_verify(r, o);
  if (gl.json) {
    auto j = envelope("verify");
    json fx = json::array(), su = json::array();
    for (const auto& c : rep.fixtures) fx.push_back(check_json(c));
    for (const auto& c : rep.suites) su.push_back(check_json(c));
    j["fixtures"] = fx;
    j["suites"] = su;
    j["failures"] = rep.failures();
    emit(out, j);
  } else {
    auto line = [&](const CheckResult& c) {
      out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(13) << c.group << c.name;
      if (!c.passed) out << "  [" << c.anchor << "]  " << c.detail;
      else if (c.cases > 1) out << "  (" << c.detail << ")";
      out << std::right << "\n";
    };
    for (const auto& c : rep.fixtures) line(c);
    for (const auto& c : rep.suites) line(c);
    out << rep.fixtures.size() << " fixtures, " << rep.suites.size() << " property suites, " << rep.failures()
        << " failures\n";
  }
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan blocks, packets and counting for Sp(2n) and SO(2n+1)", "jordkit"};
  app.require_subcommand(1);
  Globals gl;
  std::string registry_path;
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--registry", registry_path, std::string("registry JSON file (default: $") + kRegistryEnv + " or built-in)");

  CountArgs count_args, enum_args;
  auto* count = app.add_subcommand("count", "number of unramified strongly negative (or isolated) representations");
  add_count_flags(count, count_args);
  auto* enumerate = app.add_subcommand("enumerate", "list the unramified parameters, one per line");
  add_count_flags(enumerate, enum_args);

  PacketArgs packet_args, char_args;
  auto* packet = app.add_subcommand("packet", "every element of the packet of a Jordan set");
  packet->add_option("jordan", packet_args.jordan, "e.g. \"Sp4: triv:1, triv:3, triv:5\"")->required();
  packet->add_option("--basis", packet_args.basis, "component group basis, e.g. \"triv:1*triv:3; triv:3*triv:5\"");
  auto* character = app.add_subcommand("character", "one packet element by its values on the basis");
  character->add_option("jordan", char_args.jordan, "Jordan set")->required();
  character->add_option("--character", char_args.character, "signs on the basis, e.g. \"+-\"")->required();
  character->add_option("--basis", char_args.basis, "component group basis");
  character->add_option("--shuffle-seed", char_args.shuffle_seed, "break ties between lines at random");

  ReducibilityArgs red_args;
  auto* red = app.add_subcommand("reducibility", "reducibility tables and Jordan lines from reducibility points");
  red->add_option("jordan", red_args.jordan, "Jordan set of the tempered representation");
  red->add_option("--rho", red_args.rho, "cuspidal label");
  red->add_option("--dataset", red_args.dataset, "segment table for a registry reducibility dataset");
  red->add_option("--point", red_args.point, "reducibility point x >= 1; prints the Jordan line");
  red->add_option("--max-m", red_args.max_m, "table length")->check(CLI::PositiveNumber);

  SpehArgs speh_args;
  auto* speh = app.add_subcommand("speh", "determinant expansion of u(delta(rho,l), m)");
  speh->add_option("--l", speh_args.l, "segment length")->required()->check(CLI::PositiveNumber);
  speh->add_option("--m", speh_args.m, "number of rows")->required()->check(CLI::Range(1, 20));
  speh->add_option("--rho", speh_args.rho, "cuspidal label (default: trivial character)");

  AntipodeArgs anti_args;
  auto* anti = app.add_subcommand("antipodes", "packets with a cuspidal and a minimal-parabolic member");
  anti->add_option("--family", anti_args.family, "Sp or SO")->required()->check(CLI::IsMember({"Sp", "SO"}));
  anti->add_option("--max-rank", anti_args.max_rank, "largest rank")->check(CLI::PositiveNumber);
  anti->add_option("--min-rank", anti_args.min_rank, "smallest rank")->check(CLI::PositiveNumber);
  anti->add_flag("--packet-search", anti_args.packet_search, "also search all ladder packets");
  anti->add_option("--quad-dim", anti_args.quad_dim, "F_2-dimension of quadratic characters")->check(CLI::Range(1, 6));

  VerifyArgs ver_args;
  auto* verify = app.add_subcommand("verify", "run registry fixtures and property suites");
  verify->add_option("--only", ver_args.only, "restrict to one module")->check(CLI::IsMember(verify_groups()));
  verify->add_option("--cases", ver_args.cases, "randomized cases per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", ver_args.seed, "random seed");
  verify->add_flag("--fixtures-only", ver_args.fixtures_only, "skip property suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (!registry_path.empty()) gl.registry = registry_path;

  try {
    if (count->parsed()) return cmd_count(gl, count_args, out);
    if (enumerate->parsed()) return cmd_enumerate(gl, enum_args, out);
    if (anti->parsed()) return cmd_antipodes(gl, anti_args, out);
    const Registry r = Registry::load(gl.registry);
    if (packet->parsed()) return cmd_packet(gl, r, packet_args, out);
    if (character->parsed()) return cmd_character(gl, r, char_args, out);
    if (red->parsed()) return cmd_reducibility(gl, r, red_args, out);
    if (speh->parsed()) return cmd_speh(gl, r, speh_args, out);
    if (verify->parsed()) return cmd_verify(gl, r, ver_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace jordkit::cli
