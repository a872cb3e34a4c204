#include "jordkit/speh.hpp"

#include <algorithm>
#include <stdexcept>

namespace jordkit {

Multisegment normalize(Multisegment ms) {
  std::sort(ms.begin(), ms.end());
  return ms;
}

std::string to_string(const Multisegment& ms) {
  if (ms.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + ("[" + ms[i].b.to_string() + "," + ms[i].e.to_string() + "]");
  return s + "}";
}

GrothendieckElement GrothendieckElement::monomial(Multisegment ms, std::int64_t coeff) {
  GrothendieckElement g;
  g.add(std::move(ms), coeff);
  return g;
}

void GrothendieckElement::add(Multisegment ms, std::int64_t coeff) {
  if (coeff == 0) return;
  auto key = normalize(std::move(ms));
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

std::int64_t GrothendieckElement::coefficient(const Multisegment& ms) const {
  auto it = terms_.find(normalize(ms));
  return it == terms_.end() ? 0 : it->second;
}

GrothendieckElement& GrothendieckElement::operator+=(const GrothendieckElement& o) {
  for (const auto& [ms, c] : o.terms_) add(ms, c);
  return *this;
}

GrothendieckElement operator-(const GrothendieckElement& a, const GrothendieckElement& b) {
  GrothendieckElement r = a;
  for (const auto& [ms, c] : b.terms_) r.add(ms, -c);
  return r;
}

GrothendieckElement operator*(const GrothendieckElement& a, const GrothendieckElement& b) {
  GrothendieckElement r;
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) {
      Multisegment z = x;
      z.insert(z.end(), y.begin(), y.end());
      r.add(std::move(z), cx * cy);
    }
  return r;
}

std::string to_string(const GrothendieckElement& g) {
  if (g.is_zero()) return "0";
  std::string s;
  for (const auto& [ms, c] : g.terms()) {
    s += c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    auto a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += to_string(ms);
  }
  return s;
}

std::vector<std::pair<HalfInt, HalfInt>> speh_segments(int l, int m) {
  if (l < 1 || m < 1) throw std::invalid_argument("speh_segments needs l, m >= 1");
  std::vector<std::pair<HalfInt, HalfInt>> out;
  const auto hw = HalfInt::from_doubled(l - 1);
  for (int k = 1; k <= m; ++k) {
    auto c = HalfInt::from_doubled(m - 1) - HalfInt(k - 1);
    out.emplace_back(c - hw, c + hw);
  }
  return out;
}

Multisegment standard_multisegment(const CuspidalLabel& rho, int l, int m) {
  Multisegment ms;
  for (auto [b, e] : speh_segments(l, m)) ms.push_back(Segment{rho, b, e});
  return normalize(std::move(ms));
}

GrothendieckElement speh_determinant(const CuspidalLabel& rho, int l, int m) {
  if (m > 20) throw std::invalid_argument("speh_determinant supports m <= 20");
  const auto segs = speh_segments(l, m);
  const auto n = static_cast<std::size_t>(m);
  GrothendieckElement result;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> placed;
  Multisegment current;

  // Row i takes column j; the running sign counts inversions as columns are placed.
  auto rec = [&](auto&& self, std::size_t i, bool odd) -> void {
    if (i == n) {
      result.add(current, odd ? -1 : 1);
      return;
    }
    const HalfInt b = segs[i].first;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const HalfInt e = segs[j].second;
      if (b > e + HalfInt(1)) continue;  // zero entry
      std::size_t inv = 0;
      for (std::size_t p : placed)
        if (p > j) ++inv;
      bool unit = b == e + HalfInt(1);
      used[j] = true;
      placed.push_back(j);
      if (!unit) current.push_back(Segment{rho, b, e});
      self(self, i + 1, odd ^ (inv % 2 == 1));
      if (!unit) current.pop_back();
      placed.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0, false);
  return result;
}

ExpansionStats expansion_stats(const GrothendieckElement& g, const Multisegment& identity) {
  ExpansionStats s;
  s.terms = g.terms().size();
  s.identity_coefficient = g.coefficient(identity);
  s.identity_present = s.identity_coefficient != 0;
  for (const auto& [_, c] : g.terms()) (c > 0 ? s.positive : s.negative) += 1;
  return s;
}

}  // namespace jordkit
