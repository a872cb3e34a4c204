#include "jordkit/packets.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace jordkit {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::PairRemoval: return "PairRemoval";
    case StepKind::GapShift: return "GapShift";
    case StepKind::HalfShift: return "HalfShift";
  }
  return "?";
}

std::string_view to_string(SelectionRule r) {
  switch (r) {
    case SelectionRule::RuleA: return "RuleA";
    case SelectionRule::RuleB: return "RuleB";
    case SelectionRule::RuleC: return "RuleC";
    case SelectionRule::RuleD: return "RuleD";
  }
  return "?";
}

namespace {

struct Entry {
  std::uint8_t line;
  std::int32_t m;
  std::uint8_t origin;
};

// Blocks still present, sorted by (line, m); line indices follow label-id order.
struct State {
  std::array<Entry, 64> e{};
  int n = 0;

  void erase(int i) {
    for (int k = i; k + 1 < n; ++k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k + 1)];
    --n;
  }
  const Entry& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  Entry& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
};

struct Plan {
  enum Kind { none, pair, gap, half } kind = none;
  int idx = -1;  // pair: the upper block a; gap: the block a; half: delta(rho,2)
  int new_m = 0;
};

inline bool neg(Subset f, const Entry& x) { return (f >> x.origin) & 1; }

// Among per-line candidates (index of the chosen block on each line), take a
// random line, or else the largest m with the smallest line on ties.
int choose(const std::array<int, 64>& cand, int count, const State& s, TieBreak* rng, bool by_largest) {
  if (count == 0) return -1;
  if (rng) {
    std::uniform_int_distribution<int> d(0, count - 1);
    return cand[static_cast<std::size_t>(d(*rng))];
  }
  if (!by_largest) return cand[0];
  int best = cand[0];
  for (int k = 1; k < count; ++k)
    if (s[cand[static_cast<std::size_t>(k)]].m > s[best].m) best = cand[static_cast<std::size_t>(k)];
  return best;
}

Plan plan_step(const State& s, Subset f, TieBreak* rng) {
  std::array<int, 64> cand{};
  int count = 0;
  auto push = [&](int i) {
    // One candidate per line; later indices on the same line have larger m.
    if (count > 0 && s[cand[static_cast<std::size_t>(count - 1)]].line == s[i].line)
      cand[static_cast<std::size_t>(count - 1)] = i;
    else
      cand[static_cast<std::size_t>(count++)] = i;
  };

  for (int i = 1; i < s.n; ++i)
    if (s[i].line == s[i - 1].line && neg(f, s[i]) == neg(f, s[i - 1])) push(i);
  if (int i = choose(cand, count, s, rng, true); i >= 0) return {Plan::pair, i, 0};

  count = 0;
  for (int i = 0; i < s.n; ++i) {
    if (s[i].m < 3) continue;
    bool below = i > 0 && s[i - 1].line == s[i].line && s[i - 1].m == s[i].m - 2;
    if (!below) push(i);
  }
  if (int i = choose(cand, count, s, rng, true); i >= 0) {
    bool has_lower = i > 0 && s[i - 1].line == s[i].line;
    int new_m = has_lower ? s[i - 1].m + 2 : (s[i].m % 2 == 0 ? 2 : 1);
    return {Plan::gap, i, new_m};
  }

  count = 0;
  for (int i = 0; i < s.n; ++i)
    if (s[i].m == 2 && !neg(f, s[i])) push(i);
  if (int i = choose(cand, count, s, rng, false); i >= 0) return {Plan::half, i, 0};
  return {};
}

void apply(State& s, const Plan& p) {
  switch (p.kind) {
    case Plan::pair:
      s.erase(p.idx);
      s.erase(p.idx - 1);
      break;
    case Plan::gap: s[p.idx].m = p.new_m; break;
    case Plan::half: s.erase(p.idx); break;
    case Plan::none: break;
  }
}

State initial_state(const JordanSet& j) {
  if (j.size() > kMaxBlocks) throw std::invalid_argument("Jordan set has too many blocks");
  State s;
  std::uint8_t line = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i > 0 && j[i].rho.id != j[i - 1].rho.id) ++line;
    s.e[i] = Entry{line, j[i].m, static_cast<std::uint8_t>(i)};
  }
  s.n = static_cast<int>(j.size());
  return s;
}

HalfInt half(std::int64_t twice) { return HalfInt::from_doubled(twice); }

}  // namespace

PacketElement build_element(const ComponentGroup& g, const ComponentCharacter& c, TieBreak* rng) {
  const JordanSet& j = g.jord();
  if ((c.negatives & ~g.full()) || gf2::parity(c.negatives) != 0)
    throw std::invalid_argument("not a character of this component group");
  const auto lines = j.lines();
  const Subset f = c.negatives;

  State s = initial_state(j);
  auto snapshot = [&](const State& st, JordanSet& out, std::vector<int>& values) {
    std::vector<JordanBlock> blocks;
    values.clear();
    for (int i = 0; i < st.n; ++i) {
      blocks.push_back(JordanBlock{lines[st[i].line], st[i].m});
      values.push_back(neg(f, st[i]) ? -1 : 1);
    }
    out = JordanSet(std::move(blocks));
  };
  auto local_mask = [&](const State& st) {
    Subset m = 0;
    for (int i = 0; i < st.n; ++i)
      if (neg(f, st[i])) m |= gf2::bit(i);
    return m;
  };

  PacketElement el{g.family(), j, c, {}, {}, {}, {}};
  for (;;) {
    JordanSet cur;
    std::vector<int> values;
    snapshot(s, cur, values);
    bool cuspidal = is_cuspidal_function(cur, local_mask(s));
    Plan p = plan_step(s, f, rng);
    if (cuspidal != (p.kind == Plan::none))
      throw std::logic_error("recursive construction stalled on " + to_string(cur));
    if (cuspidal) break;

    const Entry& x = s[p.idx];
    const CuspidalLabel& rho = lines[x.line];
    PacketStep step{StepKind::HalfShift, Segment::make(rho, half(1), half(1)), {}, cur, values, {}, {}};
    if (p.kind == Plan::pair) {
      const Entry& lo = s[p.idx - 1];
      const int a = x.m, am = lo.m;
      step.kind = StepKind::PairRemoval;
      step.segment = Segment::make(rho, half(-(am - 1)), half(a - 1));
      bool above = p.idx + 1 < s.n && s[p.idx + 1].line == x.line;
      bool below = p.idx >= 2 && s[p.idx - 2].line == x.line;
      if (above) {
        const Entry& b = s[p.idx + 1];
        step.selections.push_back(
            {SelectionRule::RuleA, Segment::make(rho, half(a + 1), half(b.m - 1)), neg(f, b) == neg(f, x)});
      }
      if (below) {
        const Entry& b = s[p.idx - 2];
        step.selections.push_back(
            {SelectionRule::RuleB, Segment::make(rho, half(b.m + 1), half(am - 1)), neg(f, b) == neg(f, lo)});
      }
      if (!above && !below) {
        if (a % 2 == 0)
          step.selections.push_back({SelectionRule::RuleC, Segment::make(rho, half(1), half(am - 1)), !neg(f, x)});
        else
          step.selections.push_back({SelectionRule::RuleD, Segment::make(rho, HalfInt(1), half(a - 1)), !neg(f, x)});
      }
    } else if (p.kind == Plan::gap) {
      step.kind = StepKind::GapShift;
      step.segment = Segment::make(rho, half(p.new_m + 1), half(x.m - 1));
    }
    apply(s, p);
    snapshot(s, step.inner_jord, step.inner_values);
    el.steps.push_back(std::move(step));
  }

  std::vector<int> base_values;
  snapshot(s, el.base_jord, base_values);
  int dim = el.base_jord.total_dimension();
  el.base_family = GroupFamily{g.family().series, g.family().series == Series::Sp ? (dim - 1) / 2 : dim / 2};
  auto base_group = ComponentGroup::make(el.base_family, el.base_jord);
  el.base_character = base_group.from_function(local_mask(s));
  return el;
}

PacketElement build_element(const GroupFamily& fam, const JordanSet& j, const ComponentCharacter& c,
                            TieBreak* rng) {
  return build_element(ComponentGroup::make(fam, j), c, rng);
}

Packet build_packet(const GroupFamily& fam, const JordanSet& j) {
  Packet p{ComponentGroup::make(fam, j), {}};
  for (const auto& c : p.group.characters()) p.elements.push_back(build_element(p.group, c));
  return p;
}

bool is_cuspidal_element(const PacketElement& e) { return e.steps.empty(); }

bool supported_on_minimal_parabolic(const PacketElement& e) {
  for (const auto& s : e.steps)
    if (!s.segment.rho.is_gl1()) return false;
  if (e.family.series == Series::SO_odd) return e.base_jord.empty();
  return e.base_jord.size() == 1 && e.base_jord[0].m == 1 && e.base_jord[0].rho.is_trivial_character();
}

std::vector<Segment> gl_factor_inventory(const PacketElement& e) {
  std::vector<Segment> out;
  for (const auto& s : e.steps) out.push_back(s.segment);
  return out;
}

std::vector<Segment> construction_order(const PacketElement& e) {
  auto out = gl_factor_inventory(e);
  std::reverse(out.begin(), out.end());
  return out;
}

ElementSummarizer::ElementSummarizer(const ComponentGroup& g) : series_(g.family().series) {
  State s = initial_state(g.jord());
  for (int i = 0; i < s.n; ++i) start_.push_back({s[i].line, s[i].m, s[i].origin});
  for (const auto& l : g.jord().lines()) {
    line_gl1_.push_back(l.is_gl1());
    line_trivial_.push_back(l.is_trivial_character());
  }
}

ElementSummary ElementSummarizer::summarize(Subset f, TieBreak* rng) const {
  State s;
  for (std::size_t i = 0; i < start_.size(); ++i) s.e[i] = {start_[i].line, start_[i].m, start_[i].origin};
  s.n = static_cast<int>(start_.size());
  ElementSummary r;
  bool gl1 = true;
  for (;;) {
    Plan p = plan_step(s, f, rng);
    if (p.kind == Plan::none) break;
    if (!line_gl1_[s[p.idx].line]) gl1 = false;
    apply(s, p);
    ++r.steps;
  }
  r.cuspidal = r.steps == 0;
  r.base_blocks = s.n;
  bool base_ok = series_ == Series::SO_odd ? s.n == 0 : (s.n == 1 && s[0].m == 1 && line_trivial_[s[0].line]);
  r.minimal_parabolic = gl1 && base_ok;
  return r;
}

}  // namespace jordkit
