#include "jordkit/reducibility.hpp"

#include <stdexcept>

namespace jordkit {

Segment Segment::make(CuspidalLabel rho, HalfInt b, HalfInt e) {
  auto d = e - b;
  if (!d.is_integer() || d < HalfInt(0))
    throw std::invalid_argument("segment [" + b.to_string() + ", " + e.to_string() + "] is not a segment");
  return Segment{std::move(rho), b, e};
}

Segment Segment::centered(CuspidalLabel rho, int m) {
  if (m < 1) throw std::invalid_argument("centered segment needs m >= 1");
  auto h = HalfInt::from_doubled(m - 1);
  return Segment{std::move(rho), -h, h};
}

std::string to_string(const Segment& s) { return "[" + s.b.to_string() + "," + s.e.to_string() + "]" + s.rho.id; }

bool segment_induction_reducible(const Segment& seg, const CuspidalReducibilityData& data) {
  if (seg.rho.id != data.rho.id)
    throw std::invalid_argument("reducibility data for '" + data.rho.id + "' used on a segment of '" + seg.rho.id + "'");
  auto on_segment = [&](HalfInt x) { return seg.contains(x) && (x - seg.b).is_integer(); };
  for (HalfInt x : data.points)
    if (on_segment(x) || on_segment(-x)) return true;
  return false;
}

bool is_reducible_tempered(Series series, const JordanSet& j, const JordanBlock& block) {
  auto line = j.line(block.rho.id);
  if (!line.empty()) return (block.m - line.front()) % 2 == 0 && !j.contains(block);
  return parity_of(block.m) == block.rho.base_parity_for(series);
}

std::vector<JordanBlock> jord_line_from_reducibility(const CuspidalLabel& rho, HalfInt x) {
  if (x < HalfInt(1)) throw std::invalid_argument("reducibility point must be at least 1, got " + x.to_string());
  std::vector<JordanBlock> out;
  for (auto m = x.doubled() - 1; m >= 1; m -= 2) out.push_back(JordanBlock{rho, static_cast<int>(m)});
  return out;
}

std::optional<HalfInt> reducibility_from_jord_line(const JordanSet& j, const CuspidalLabel& rho) {
  auto line = j.line(rho.id);
  if (line.empty()) return std::nullopt;
  return HalfInt::from_doubled(line.back() + 1);
}

FormulationCheck equivalent_formulation_check(Series series, const JordanSet& j, const JordanBlock& block,
                                              const JordanSet& base) {
  FormulationCheck r;
  r.via_base = is_reducible_tempered(series, base, block) && !j.contains(block);
  r.direct = is_reducible_tempered(series, j, block);
  r.exempt = series == Series::Sp && block.rho.is_trivial_character();
  r.agrees = r.exempt || r.via_base == r.direct;
  return r;
}

}  // namespace jordkit
