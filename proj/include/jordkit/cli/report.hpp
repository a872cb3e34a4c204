#pragma once

#include <string>

#include "json.hpp"
#include "jordkit/compgroup.hpp"
#include "jordkit/packets.hpp"
#include "jordkit/reducibility.hpp"
#include "jordkit/speh.hpp"

namespace jordkit::cli {

nlohmann::json segment_json(const Segment& s);
nlohmann::json group_json(const ComponentGroup& g);
nlohmann::json element_json(const ComponentGroup& g, const PacketElement& e);
nlohmann::json packet_json(const Packet& p);
nlohmann::json grothendieck_json(const GrothendieckElement& g);

/// "RuleB [1,1]triv embeds" style one-liners.
std::string step_text(const PacketStep& s);
std::string base_character_text(const PacketElement& e);
std::string element_text(const ComponentGroup& g, const PacketElement& e);
std::string packet_text(const Packet& p);

}  // namespace jordkit::cli
