#pragma once

// Component groups attached to a Jordan set and their characters.
//
// Elements are subsets of the Jordan set encoded as bit masks (bit i is
// block i in canonical order). A character is stored as the function
// f: Jord -> {+1,-1} with prod f = +1, recorded as the mask of blocks where
// f = -1. For SO this is exactly a character of 2^Jord trivial on the full
// product; for Sp it is the unique representative of the character of the
// even-dimension subgroup that is trivial on the full product.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jordkit/core.hpp"
#include "jordkit/gf2.hpp"

namespace jordkit {

using Subset = gf2::Vec;

inline constexpr std::size_t kMaxBlocks = 63;

struct ComponentCharacter {
  Subset negatives = 0;
  friend bool operator==(const ComponentCharacter&, const ComponentCharacter&) = default;
};

class ComponentGroup {
 public:
  /// Validates j and builds the canonical basis. Sp: greedy independent
  /// choice from even-dimensional singletons, then links between the first
  /// odd-dimensional blocks of consecutive lines, then consecutive pairs on a
  /// line. SO: the singletons of 2^Jord.
  static ComponentGroup make(const GroupFamily& fam, const JordanSet& j);
  /// Sp only: a caller-chosen basis, checked for membership and spanning.
  static ComponentGroup with_basis(const GroupFamily& fam, const JordanSet& j, std::vector<Subset> basis);

  const GroupFamily& family() const { return fam_; }
  const JordanSet& jord() const { return jord_; }
  const std::vector<Subset>& basis() const { return basis_; }
  Subset full() const { return full_; }
  /// Blocks of odd dimension; for Sp, f and f*lambda are the same character.
  Subset dim_parity_functional() const { return lambda_; }

  /// Number of characters, 2^{|J|-1} (1 for the empty set).
  std::uint64_t order() const;
  bool contains(Subset e) const;

  /// All characters; the k-th has sign pattern given by the bits of k over
  /// the basis (bit i set means -1 on basis element i), skipping patterns
  /// that are not characters (SO: odd number of minus signs).
  std::vector<ComponentCharacter> characters() const;

  /// Character with the given values on the basis, '+' or '-' per element.
  ComponentCharacter parse_character(std::string_view signs) const;
  std::string format_character(const ComponentCharacter& c) const;
  std::vector<int> basis_values(const ComponentCharacter& c) const;

  /// Throws std::invalid_argument if e is not in the group.
  int evaluate(const ComponentCharacter& c, Subset e) const;
  /// Value on a single block under the stored representative (no membership check).
  int representative_value(const ComponentCharacter& c, std::size_t block) const {
    return (c.negatives >> block) & 1 ? -1 : 1;
  }

  /// Character attached to an arbitrary function f (mask of -1 values). For
  /// Sp, f is first multiplied by lambda if needed; for SO the product of f
  /// must already be +1.
  ComponentCharacter from_function(Subset f) const;

  std::string describe(Subset e) const;

 private:
  ComponentGroup(GroupFamily fam, JordanSet j);
  void set_basis(std::vector<Subset> basis);

  GroupFamily fam_;
  JordanSet jord_;
  Subset full_ = 0;
  Subset lambda_ = 0;
  std::vector<Subset> basis_;
  std::vector<Subset> dual_;  // Sp: f with value -1 exactly on basis element i
};

/// No gaps, -1 on every delta(rho,2), -1 on every consecutive same-line pair.
/// f is a raw function given as the mask of -1 values.
bool is_cuspidal_function(const JordanSet& j, Subset f);
bool is_cuspidal_character(const ComponentGroup& g, const ComponentCharacter& c);

/// Number of cuspidal characters, by solving the conditions over GF(2).
std::uint64_t count_cuspidal_characters(const GroupFamily& fam, const JordanSet& j);

}  // namespace jordkit
