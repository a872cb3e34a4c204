#pragma once

// Registry: cuspidal labels, reducibility datasets and example fixtures,
// read from JSON. See data/registry.json for the shipped one.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jordkit/core.hpp"
#include "jordkit/reducibility.hpp"

namespace jordkit::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kRegistryEnv = "JORDKIT_REGISTRY";

struct Fixture {
  std::string name;
  std::string anchor;
  std::string kind;
  nlohmann::json body;  // the full record
};

struct ReducibilityDataset {
  std::string name;
  CuspidalReducibilityData data;
};

struct Registry {
  LabelTable labels;
  std::vector<ReducibilityDataset> reducibility;
  std::vector<Fixture> fixtures;

  /// Throws std::invalid_argument on malformed records or duplicate names.
  static Registry from_json(const nlohmann::json& j);
  static Registry from_file(const std::string& path);
  static Registry builtin();
  /// Explicit path, else $JORDKIT_REGISTRY, else the built-in registry.
  static Registry load(const std::optional<std::string>& path);

  const ReducibilityDataset& dataset(std::string_view name) const;
  /// The label used for the unramified quadratic character.
  const CuspidalLabel& psi_un() const { return labels.at("psi_un"); }
  const CuspidalLabel& trivial() const;
};

/// Text of the built-in registry (generated at build time).
extern const char* const kBuiltinRegistry;

}  // namespace jordkit::cli
