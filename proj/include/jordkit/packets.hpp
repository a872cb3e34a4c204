#pragma once

// Recursive attachment of a square-integrable representation to a pair
// (Jordan set, character), kept as a symbolic descriptor: the chain of
// induction steps from the given pair down to a cuspidal pair.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "jordkit/compgroup.hpp"
#include "jordkit/core.hpp"
#include "jordkit/reducibility.hpp"

namespace jordkit {

enum class StepKind { PairRemoval, GapShift, HalfShift };
enum class SelectionRule { RuleA, RuleB, RuleC, RuleD };

std::string_view to_string(StepKind k);
std::string_view to_string(SelectionRule r);

/// Which of the two subrepresentations a PairRemoval picks: the one that
/// embeds into an induced representation with the given segment iff
/// `embeds`. For RuleD `embeds` is the tau_1 flag.
struct Selection {
  SelectionRule rule;
  Segment segment;
  bool embeds = false;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct PacketStep {
  StepKind kind;
  Segment segment;
  std::vector<Selection> selections;  // PairRemoval only; RuleA and RuleB may both occur
  JordanSet jord;                     // before the step
  std::vector<int> values;            // representative on jord, +1 / -1 per block
  JordanSet inner_jord;               // after the step
  std::vector<int> inner_values;
};

struct PacketElement {
  GroupFamily family;
  JordanSet jord;
  ComponentCharacter character;
  std::vector<PacketStep> steps;  // from the given pair towards the cuspidal pair
  GroupFamily base_family;
  JordanSet base_jord;
  ComponentCharacter base_character;
};

/// Optional source of randomness for choosing among lines where the same
/// kind of step applies. Without it the choice is canonical: largest a,
/// ties broken by label id; the first line for a HalfShift.
using TieBreak = std::mt19937_64;

PacketElement build_element(const ComponentGroup& g, const ComponentCharacter& c, TieBreak* rng = nullptr);
PacketElement build_element(const GroupFamily& fam, const JordanSet& j, const ComponentCharacter& c,
                            TieBreak* rng = nullptr);

struct Packet {
  ComponentGroup group;
  std::vector<PacketElement> elements;  // in the order of group.characters()
};

Packet build_packet(const GroupFamily& fam, const JordanSet& j);

bool is_cuspidal_element(const PacketElement& e);
/// Every step lives on a GL(1) line and the base is the rank-zero pair.
bool supported_on_minimal_parabolic(const PacketElement& e);
/// Step segments from the given pair towards the base.
std::vector<Segment> gl_factor_inventory(const PacketElement& e);
/// The same segments in the order the induction is built up from the base.
std::vector<Segment> construction_order(const PacketElement& e);

struct ElementSummary {
  bool cuspidal = false;
  bool minimal_parabolic = false;
  int steps = 0;
  int base_blocks = 0;
};

/// Attributes of the element for a raw function f (mask of -1 values,
/// product +1), computed without building the descriptor.
class ElementSummarizer {
 public:
  explicit ElementSummarizer(const ComponentGroup& g);
  ElementSummary summarize(Subset f, TieBreak* rng = nullptr) const;

 private:
  struct Entry {
    std::uint8_t line;
    std::int32_t m;
    std::uint8_t origin;
  };
  std::vector<Entry> start_;
  std::vector<std::uint8_t> line_gl1_;
  std::vector<std::uint8_t> line_trivial_;
  Series series_;
};

}  // namespace jordkit
