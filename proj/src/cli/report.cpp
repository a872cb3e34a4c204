#include "jordkit/cli/report.hpp"

#include <sstream>

#include "jordkit/parse.hpp"

namespace jordkit::cli {

using nlohmann::json;

json segment_json(const Segment& s) {
  return {{"rho", s.rho.id}, {"b", s.b.to_string()}, {"e", s.e.to_string()}, {"text", to_string(s)}};
}

json group_json(const ComponentGroup& g) {
  json basis = json::array();
  for (Subset b : g.basis()) basis.push_back(g.describe(b));
  return {{"family", g.family().name()},
          {"jordan", format_jordan(g.family(), g.jord())},
          {"basis", basis},
          {"order", g.order()}};
}

std::string base_character_text(const PacketElement& e) {
  return ComponentGroup::make(e.base_family, e.base_jord).format_character(e.base_character);
}

json element_json(const ComponentGroup& g, const PacketElement& e) {
  json steps = json::array();
  for (const auto& s : e.steps) {
    json sel = json::array();
    for (const auto& x : s.selections)
      sel.push_back({{"rule", to_string(x.rule)}, {"segment", segment_json(x.segment)}, {"embeds", x.embeds}});
    steps.push_back({{"kind", to_string(s.kind)},
                     {"segment", segment_json(s.segment)},
                     {"selections", sel},
                     {"inner_jordan", to_string(s.inner_jord)}});
  }
  json factors = json::array();
  for (const auto& s : gl_factor_inventory(e)) factors.push_back(segment_json(s));
  return {{"character", g.format_character(e.character)},
          {"cuspidal", is_cuspidal_element(e)},
          {"minimal_parabolic", supported_on_minimal_parabolic(e)},
          {"steps", steps},
          {"gl_factors", factors},
          {"base", {{"jordan", format_jordan(e.base_family, e.base_jord)}, {"character", base_character_text(e)}}}};
}

json packet_json(const Packet& p) {
  json elements = json::array();
  int cusp = 0, minpar = 0;
  for (const auto& e : p.elements) {
    elements.push_back(element_json(p.group, e));
    cusp += is_cuspidal_element(e);
    minpar += supported_on_minimal_parabolic(e);
  }
  json out = group_json(p.group);
  out["elements"] = elements;
  out["summary"] = {{"characters", p.elements.size()}, {"cuspidal", cusp}, {"minimal_parabolic", minpar}};
  return out;
}

json grothendieck_json(const GrothendieckElement& g) {
  json terms = json::array();
  for (const auto& [ms, c] : g.terms()) {
    json segs = json::array();
    for (const auto& s : ms) segs.push_back("[" + s.b.to_string() + "," + s.e.to_string() + "]");
    terms.push_back({{"coeff", c}, {"segments", segs}});
  }
  return terms;
}

std::string step_text(const PacketStep& s) {
  std::string t = std::string(to_string(s.kind)) + " " + to_string(s.segment);
  for (const auto& x : s.selections)
    t += "  " + std::string(to_string(x.rule)) + " " + to_string(x.segment) + (x.embeds ? " embeds" : " does-not-embed");
  return t;
}

std::string element_text(const ComponentGroup& g, const PacketElement& e) {
  std::ostringstream os;
  os << "character " << g.format_character(e.character) << (is_cuspidal_element(e) ? "  cuspidal" : "")
     << (supported_on_minimal_parabolic(e) ? "  minimal-parabolic" : "") << "\n";
  for (const auto& s : e.steps) os << "  " << step_text(s) << "\n";
  os << "  base " << format_jordan(e.base_family, e.base_jord);
  auto bc = base_character_text(e);
  if (!bc.empty()) os << "  character " << bc;
  os << "\n";
  return os.str();
}

std::string packet_text(const Packet& p) {
  std::ostringstream os;
  os << format_jordan(p.group.family(), p.group.jord()) << "\n";
  os << "basis:";
  if (p.group.basis().empty()) os << " (none)";
  for (Subset b : p.group.basis()) os << " " << p.group.describe(b);
  os << "\n";
  int cusp = 0, minpar = 0;
  for (const auto& e : p.elements) {
    cusp += is_cuspidal_element(e);
    minpar += supported_on_minimal_parabolic(e);
    os << element_text(p.group, e);
  }
  os << p.elements.size() << " elements, " << cusp << " cuspidal, " << minpar << " minimal-parabolic\n";
  return os.str();
}

}  // namespace jordkit::cli
