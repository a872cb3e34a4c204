#pragma once

// Text forms:
//   Jordan set   "Sp4: triv:1, triv:3, triv:5"   ("SO0:" is the empty set)
//   element      "triv:1*triv:3"                  ("1" is the identity)
//   basis        "triv:1*triv:3; triv:3*triv:5"

#include <string>
#include <string_view>
#include <vector>

#include "jordkit/compgroup.hpp"
#include "jordkit/core.hpp"

namespace jordkit {

struct FamilyJordan {
  GroupFamily family;
  JordanSet jord;
};

GroupFamily parse_family(std::string_view text);
/// Block list without the family prefix, e.g. "triv:1, triv:3".
JordanSet parse_blocks(std::string_view text, const LabelTable& labels);
/// Throws std::invalid_argument on syntax errors and DuplicateBlockError on repeats.
/// Validity against the family is not checked here.
FamilyJordan parse_jordan(std::string_view text, const LabelTable& labels);
std::string format_jordan(const GroupFamily& fam, const JordanSet& j);

Subset parse_element(const JordanSet& j, std::string_view text);
std::vector<Subset> parse_basis(const JordanSet& j, std::string_view text);

}  // namespace jordkit
