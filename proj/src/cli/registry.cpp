#include "jordkit/cli/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jordkit::cli {

namespace {

PhiType parse_phi_type(const std::string& s) {
  if (s == "orthogonal") return PhiType::orthogonal;
  if (s == "symplectic") return PhiType::symplectic;
  throw std::invalid_argument("phi_type must be orthogonal or symplectic, got '" + s + "'");
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw std::invalid_argument("base_parity must be even or odd, got '" + s + "'");
}

}  // namespace

Registry Registry::from_json(const nlohmann::json& j) {
  try {
    if (j.value("schema_version", 0) != kSchemaVersion)
      throw std::invalid_argument("unsupported registry schema_version");
    Registry r;
    r.labels = LabelTable(QuadCharSpace(j.value("quad_char_dim", 2)));
    for (const auto& l : j.at("labels")) {
      r.labels.add(CuspidalLabel::make(l.at("id").get<std::string>(), l.at("gl_rank").get<int>(),
                                       parse_phi_type(l.at("phi_type").get<std::string>()),
                                       r.labels.space().parse(l.at("central_char").get<std::string>()),
                                       parse_parity(l.at("base_parity").get<std::string>())));
    }
    std::set<std::string> names;
    for (const auto& d : j.value("reducibility", nlohmann::json::array())) {
      ReducibilityDataset ds;
      ds.name = d.at("name").get<std::string>();
      if (!names.insert(ds.name).second) throw std::invalid_argument("duplicate dataset '" + ds.name + "'");
      ds.data.rho = r.labels.at(d.at("rho").get<std::string>());
      ds.data.pi_tag = d.value("pi", std::string{});
      for (const auto& p : d.at("points")) {
        auto x = HalfInt::parse(p.get<std::string>());
        if (x < HalfInt(0)) throw std::invalid_argument("reducibility points must be non-negative");
        ds.data.points.push_back(x);
      }
      r.reducibility.push_back(std::move(ds));
    }
    names.clear();
    for (const auto& f : j.value("fixtures", nlohmann::json::array())) {
      Fixture fx{f.at("name").get<std::string>(), f.at("anchor").get<std::string>(), f.at("kind").get<std::string>(), f};
      if (!names.insert(fx.name).second) throw std::invalid_argument("duplicate fixture '" + fx.name + "'");
      r.fixtures.push_back(std::move(fx));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed registry: ") + e.what());
  }
}

Registry Registry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read registry file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("registry file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

Registry Registry::builtin() { return from_json(nlohmann::json::parse(kBuiltinRegistry)); }

Registry Registry::load(const std::optional<std::string>& path) {
  if (path) return from_file(*path);
  if (const char* env = std::getenv(kRegistryEnv); env && *env) return from_file(env);
  return builtin();
}

const ReducibilityDataset& Registry::dataset(std::string_view name) const {
  for (const auto& d : reducibility)
    if (d.name == name) return d;
  throw std::invalid_argument("unknown reducibility dataset '" + std::string(name) + "'");
}

const CuspidalLabel& Registry::trivial() const {
  if (const auto* t = labels.trivial()) return *t;
  throw std::invalid_argument("registry has no label for the trivial character of GL(1)");
}

}  // namespace jordkit::cli
