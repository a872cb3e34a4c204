#include "jordkit/antipodes.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "jordkit/compgroup.hpp"
#include "jordkit/packets.hpp"

namespace jordkit {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t weight(Series s, std::int64_t k) { return s == Series::SO_odd ? k * (k + 1) : k * k; }
std::int64_t target(Series s, int n) { return s == Series::SO_odd ? 2 * n : 2 * n + 1; }

// All k-vectors indexed by character with sum of weights equal to the target.
std::vector<LadderSpec> all_ladders(Series s, int n, const QuadCharSpace& space) {
  std::vector<LadderSpec> out;
  std::vector<LadderLine> cur;
  const std::int64_t t = target(s, n);
  std::function<void(QuadChar, std::int64_t)> rec = [&](QuadChar c, std::int64_t rem) {
    if (c == space.size()) {
      if (rem == 0) out.push_back({cur});
      return;
    }
    for (int k = 0; weight(s, k) <= rem; ++k) {
      if (k > 0) cur.push_back({c, k});
      rec(c + 1, rem - weight(s, k));
      if (k > 0) cur.pop_back();
    }
  };
  if (t >= 0) rec(0, t);
  return out;
}

}  // namespace

std::string to_string(const LadderSpec& l, const QuadCharSpace& space) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.lines.size(); ++i) {
    if (i) s += ", ";
    s += quadratic_label(space, l.lines[i].character).id + ":k=" + std::to_string(l.lines[i].k);
  }
  return s + "}";
}

JordanSet ladder_jordan(Series s, const LadderSpec& l, const QuadCharSpace& space) {
  std::vector<JordanBlock> blocks;
  for (const auto& line : l.lines) {
    auto rho = quadratic_label(space, line.character);
    for (int i = 1; i <= line.k; ++i) blocks.push_back({rho, s == Series::SO_odd ? 2 * i : 2 * i - 1});
  }
  return JordanSet(std::move(blocks));
}

bool is_sum_of_two_squares(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t a = 0; 2 * a * a <= n; ++a) {
    auto b = isqrt(n - a * a);
    if (b * b == n - a * a) return true;
  }
  return false;
}

bool is_sum_of_three_squares(std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

std::array<std::int64_t, 4> gauss_decomposition_sp(std::int64_t l) {
  if (l < 0) throw std::invalid_argument("gauss_decomposition_sp needs l >= 0");
  std::int64_t m1 = is_sum_of_three_squares(l) ? 0 : 1;
  std::int64_t rest = l - m1 * (m1 + 1);
  for (std::int64_t a = isqrt(rest); a >= 0; --a)
    for (std::int64_t b = std::min(a, isqrt(rest - a * a)); b >= 0; --b) {
      std::int64_t r = rest - a * a - b * b;
      std::int64_t c = isqrt(r);
      if (c * c == r && c <= b) return {m1, a, b, c};
    }
  throw std::logic_error("no three-square decomposition of " + std::to_string(rest));
}

std::optional<std::array<std::int64_t, 3>> three_triangular(std::int64_t l) {
  if (l < 0) return std::nullopt;
  auto tri = [](std::int64_t t) { return t * (t + 1) / 2; };
  for (std::int64_t a = 0; tri(a) <= l; ++a)
    for (std::int64_t b = 0; b <= a && tri(a) + tri(b) <= l; ++b) {
      std::int64_t r = l - tri(a) - tri(b);
      // t(t+1)/2 = r  <=>  (2t+1)^2 = 8r + 1
      std::int64_t q = isqrt(8 * r + 1);
      if (q * q == 8 * r + 1) return std::array<std::int64_t, 3>{a, b, (q - 1) / 2};
    }
  return std::nullopt;
}

std::vector<LadderSpec> antipodal_candidates(Series s, int n, const QuadCharSpace& space) {
  std::vector<LadderSpec> out;
  for (auto& l : all_ladders(s, n, space)) {
    bool ok = true;
    if (s == Series::SO_odd) {
      int floor_sum = 0;
      for (const auto& line : l.lines) floor_sum += (line.k + 1) / 2;
      ok = floor_sum % 2 == 0;
    } else {
      bool trivial_odd = false;
      for (const auto& line : l.lines) {
        if (line.character == 0) trivial_odd = line.k % 2 == 1;
        else if (line.k % 2 != 0) ok = false;
      }
      ok = ok && trivial_odd;
    }
    if (ok) out.push_back(std::move(l));
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

Verdict exists_antipodal_packet(Series s, int n, const QuadCharSpace& space) {
  if (s == Series::Sp && space.dim() != 2) return Verdict::unknown;
  return antipodal_candidates(s, n, space).empty() ? Verdict::no : Verdict::yes;
}

PacketSearch packet_level_antipodes(Series s, int n, const QuadCharSpace& space) {
  PacketSearch r;
  const GroupFamily fam{s, n};
  for (const auto& l : all_ladders(s, n, space)) {
    ++r.ladder_sets;
    JordanSet j = ladder_jordan(s, l, space);
    if (!validate_jordan_set(fam, j).ok()) continue;
    if (count_cuspidal_characters(fam, j) == 0) continue;
    auto g = ComponentGroup::make(fam, j);
    ElementSummarizer summarizer(g);
    const int nb = static_cast<int>(j.size());
    // Characters are the functions with an even number of -1 values; the
    // last block's value is forced by the others.
    const Subset count = Subset{1} << (nb - 1);
    for (Subset low = 0; low < count; ++low) {
      Subset f = low | (static_cast<Subset>(gf2::parity(low)) << (nb - 1));
      ++r.characters_examined;
      if (summarizer.summarize(f).minimal_parabolic) {
        r.qualifying.push_back(l);
        break;
      }
    }
  }
  return r;
}

bool iwahori_antipodes_sp(int n) { return n >= 0 && is_sum_of_two_squares(2 * std::int64_t{n} + 1); }

bool iwahori_antipodes_so(int n) {
  if (n < 0) return false;
  for (std::int64_t k1 = 0; k1 * (k1 + 1) <= 2 * n; ++k1)
    for (std::int64_t k2 = 0; k2 <= k1; ++k2) {
      if (k1 * (k1 + 1) + k2 * (k2 + 1) != 2 * n) continue;
      if (((k1 + 1) / 2 + (k2 + 1) / 2) % 2 == 0) return true;
    }
  return false;
}

}  // namespace jordkit
