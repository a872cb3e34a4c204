#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jordkit/cli/commands.hpp"
#include "jordkit/cli/registry.hpp"
#include "jordkit/cli/verify.hpp"
#include "json.hpp"

using jordkit::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("jordkit-test-" + name + ".json");
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--family", "Sp", "--rank", "170", "--isolated"}).out, "11322187942\n");
  EXPECT_EQ(run({"count", "--family", "Sp", "--rank", "0"}).out, "1\n");
  auto j = json::parse(run({"--json", "count", "--family", "Sp", "--rank", "2"}).out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["value"], "2");
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run({"count", "--family", "GL", "--rank", "2"}).status, 0);
  EXPECT_NE(run({"count", "--rank", "2"}).status, 0);
  EXPECT_NE(run({"nosuch"}).status, 0);
  EXPECT_NE(run({}).status, 0);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run({"enumerate", "--family", "Sp", "--rank", "2"}).out, "p1=[5] p2=[]\np1=[1] p2=[1,3]\n");
  EXPECT_EQ(run({"enumerate", "--family", "Sp", "--rank", "2", "--isolated"}).out, "p1=[5] p2=[]\n");
}

TEST(Cli, PacketReports) {
  auto r = run({"packet", "Sp4: triv:1, triv:3, triv:5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4 elements, 1 cuspidal, 3 minimal-parabolic"), std::string::npos);
  auto bad = run({"packet", "Sp1: triv:1, psi_a:1, psi_b:1"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("(c)"), std::string::npos);
  auto dup = run({"packet", "Sp4: triv:1, triv:1"});
  EXPECT_EQ(dup.status, 1);
  EXPECT_NE(dup.err.find("duplicate"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  auto first = json::parse(run({"--json", "packet", "Sp6: triv:1, rho:2, rho:4"}).out);
  std::string jordan = first["jordan"];
  auto second = json::parse(run({"--json", "packet", jordan}).out);
  EXPECT_EQ(first, second);
  for (const auto& e : first["elements"]) {
    auto c = json::parse(run({"--json", "character", jordan, "--character", e["character"]}).out);
    EXPECT_EQ(c["element"], e);
  }
}

TEST(Cli, CharacterWithBasis) {
  auto r = run({"character", "Sp4: triv:1, triv:3, triv:5", "--character", "--", "--basis",
                "triv:1*triv:3; triv:1*triv:5"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("character --"), std::string::npos);
}

TEST(Cli, Reducibility) {
  auto r = run({"reducibility", "Sp1: triv:3", "--rho", "triv", "--max-m", "5"});
  EXPECT_EQ(r.out, "   1  reducible\n   2  irreducible\n   3  irreducible\n   4  irreducible\n   5  reducible\n");
  EXPECT_EQ(run({"reducibility", "--point", "5/2", "--rho", "rho"}).out, "{rho:2, rho:4}\n");
  auto d = json::parse(run({"--json", "reducibility", "--dataset", "so1-trivial", "--max-m", "4"}).out);
  EXPECT_EQ(d["table"][1]["reducible"], true);
  EXPECT_EQ(run({"reducibility", "--rho", "triv"}).status, 1);
}

TEST(Cli, Speh) {
  auto j = json::parse(run({"--json", "speh", "--l", "1", "--m", "2"}).out);
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["stats"]["identity_coefficient"], 1);
  EXPECT_NE(run({"speh", "--l", "1", "--m", "21"}).status, 0);
}

TEST(Cli, Antipodes) {
  auto r = run({"antipodes", "--family", "SO", "--max-rank", "6", "--packet-search"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("routes agree"), std::string::npos);
  auto j = json::parse(run({"--json", "antipodes", "--family", "Sp", "--max-rank", "4"}).out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][0]["exists"], "no");
  EXPECT_EQ(j["rows"][1]["exists"], "yes");
}

TEST(Cli, VerifyShippedRegistry) {
  auto r = run({"verify", "--cases", "100"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 failures"), std::string::npos);
}

TEST(Cli, VerifyNegativeControl) {
  auto j = json::parse(jordkit::cli::kBuiltinRegistry);
  for (auto& f : j["fixtures"])
    if (f["name"] == "sp-psi-un-ladder-plus-trivial") f["expect"]["cuspidal"] = 3;
  auto path = temp_file("corrupt");
  std::ofstream(path) << j.dump();
  auto r = run({"--registry", path.string(), "verify", "--fixtures-only"});
  EXPECT_EQ(r.status, 1);
  int failures = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("FAIL", 0) == 0) {
      ++failures;
      EXPECT_NE(line.find("sp-psi-un-ladder-plus-trivial"), std::string::npos) << line;
    }
  EXPECT_EQ(failures, 1);
  std::filesystem::remove(path);
}

TEST(Cli, RegistryFromEnvironment) {
  auto j = json::parse(jordkit::cli::kBuiltinRegistry);
  j["fixtures"] = json::array();
  auto path = temp_file("env");
  std::ofstream(path) << j.dump();
  ::setenv(jordkit::cli::kRegistryEnv, path.string().c_str(), 1);
  auto r = run({"verify", "--only", "core", "--fixtures-only"});
  ::unsetenv(jordkit::cli::kRegistryEnv);
  EXPECT_NE(r.out.find("0 fixtures"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Registry, RejectsMalformed) {
  using jordkit::cli::Registry;
  EXPECT_THROW(Registry::from_json(json::parse(R"({"schema_version": 2})")), std::invalid_argument);
  EXPECT_THROW(Registry::from_json(json::parse(R"({"schema_version": 1})")), std::invalid_argument);
  auto j = json::parse(jordkit::cli::kBuiltinRegistry);
  j["labels"].push_back(j["labels"][0]);
  EXPECT_THROW(Registry::from_json(j), std::invalid_argument);
  EXPECT_THROW(Registry::from_file("/nonexistent/registry.json"), std::invalid_argument);
}

TEST(Registry, FixturesHaveAnchors) {
  auto r = jordkit::cli::Registry::builtin();
  EXPECT_GE(r.fixtures.size(), 50u);
  for (const auto& f : r.fixtures) {
    EXPECT_FALSE(f.anchor.empty()) << f.name;
    EXPECT_NE(jordkit::cli::fixture_group(f.kind), "unknown") << f.name;
  }
}
