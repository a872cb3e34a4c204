#include "jordkit/compgroup.hpp"

#include <stdexcept>

namespace jordkit {

namespace {

Subset odd_dimension_blocks(const JordanSet& j) {
  Subset m = 0;
  for (std::size_t i = 0; i < j.size(); ++i)
    if (j[i].dimension() % 2 == 1) m |= gf2::bit(static_cast<int>(i));
  return m;
}

// Consecutive pairs (lower, upper) on each line, in canonical block order.
std::vector<std::pair<std::size_t, std::size_t>> line_pairs(const JordanSet& j) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i < j.size(); ++i)
    if (j[i].rho.id == j[i - 1].rho.id) out.emplace_back(i - 1, i);
  return out;
}

}  // namespace

ComponentGroup::ComponentGroup(GroupFamily fam, JordanSet j) : fam_(fam), jord_(std::move(j)) {
  require_valid(fam_, jord_);
  if (jord_.size() > kMaxBlocks) throw std::invalid_argument("Jordan set has too many blocks");
  full_ = jord_.size() == 64 ? ~Subset{0} : (gf2::bit(static_cast<int>(jord_.size())) - 1);
  lambda_ = odd_dimension_blocks(jord_);
}

ComponentGroup ComponentGroup::make(const GroupFamily& fam, const JordanSet& j) {
  ComponentGroup g(fam, j);
  std::vector<Subset> basis;
  if (fam.series == Series::SO_odd) {
    for (std::size_t i = 0; i < j.size(); ++i) basis.push_back(gf2::bit(static_cast<int>(i)));
    g.basis_ = std::move(basis);
    return g;
  }
  std::vector<Subset> candidates;
  for (std::size_t i = 0; i < j.size(); ++i)
    if (!(g.lambda_ & gf2::bit(static_cast<int>(i)))) candidates.push_back(gf2::bit(static_cast<int>(i)));
  std::optional<std::size_t> prev_first_odd;
  for (std::size_t i = 0; i < j.size(); ++i) {
    bool odd = g.lambda_ & gf2::bit(static_cast<int>(i));
    bool first_on_line = i == 0 || j[i - 1].rho.id != j[i].rho.id;
    if (!odd || !first_on_line) continue;
    if (prev_first_odd) candidates.push_back(gf2::bit(static_cast<int>(*prev_first_odd)) | gf2::bit(static_cast<int>(i)));
    prev_first_odd = i;
  }
  for (auto [lo, hi] : line_pairs(j))
    candidates.push_back(gf2::bit(static_cast<int>(lo)) | gf2::bit(static_cast<int>(hi)));
  gf2::Span span;
  for (Subset c : candidates)
    if (span.insert(c)) basis.push_back(c);
  g.set_basis(std::move(basis));
  return g;
}

ComponentGroup ComponentGroup::with_basis(const GroupFamily& fam, const JordanSet& j, std::vector<Subset> basis) {
  if (fam.series != Series::Sp)
    throw std::invalid_argument("custom bases are supported for Sp only; SO uses the singletons of 2^Jord");
  ComponentGroup g(fam, j);
  gf2::Span span;
  for (Subset b : basis) {
    if (!g.contains(b)) throw std::invalid_argument("basis element " + g.describe(b) + " is not in the component group");
    if (!span.insert(b)) throw std::invalid_argument("basis element " + g.describe(b) + " is dependent on the previous ones");
  }
  if (basis.size() + 1 != j.size())
    throw std::invalid_argument("basis has " + std::to_string(basis.size()) + " elements, the group needs " +
                                std::to_string(j.size() - 1));
  g.set_basis(std::move(basis));
  return g;
}

void ComponentGroup::set_basis(std::vector<Subset> basis) {
  basis_ = std::move(basis);
  dual_.clear();
  const int n = static_cast<int>(jord_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    gf2::AffineSystem sys(n);
    for (std::size_t k = 0; k < basis_.size(); ++k) sys.add(basis_[k], k == i);
    sys.add(full_, false);
    auto sol = sys.solve();
    if (!sol.consistent || !sol.kernel.empty()) throw std::logic_error("component group basis is not a basis");
    dual_.push_back(sol.particular);
  }
}

std::uint64_t ComponentGroup::order() const {
  return jord_.empty() ? 1 : std::uint64_t{1} << (jord_.size() - 1);
}

bool ComponentGroup::contains(Subset e) const {
  if (e & ~full_) return false;
  if (fam_.series == Series::Sp) return gf2::parity(e & lambda_) == 0;
  return true;
}

std::vector<ComponentCharacter> ComponentGroup::characters() const {
  std::vector<ComponentCharacter> out;
  if (jord_.size() > 30) throw std::invalid_argument("too many characters to list");
  out.reserve(order());
  if (fam_.series == Series::SO_odd) {
    for (Subset k = 0; k <= full_; ++k)
      if (gf2::parity(k) == 0) out.push_back({k});
    return out;
  }
  for (Subset k = 0; k < (Subset{1} << basis_.size()); ++k) {
    Subset f = 0;
    for (std::size_t i = 0; i < dual_.size(); ++i)
      if (k & gf2::bit(static_cast<int>(i))) f ^= dual_[i];
    out.push_back({f});
  }
  return out;
}

ComponentCharacter ComponentGroup::parse_character(std::string_view signs) const {
  if (signs.size() != basis_.size())
    throw std::invalid_argument("character '" + std::string(signs) + "' needs " + std::to_string(basis_.size()) +
                                " signs");
  Subset pattern = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '-') pattern |= gf2::bit(static_cast<int>(i));
    else if (signs[i] != '+') throw std::invalid_argument("character signs must be '+' or '-'");
  }
  if (fam_.series == Series::SO_odd) {
    if (gf2::parity(pattern))
      throw std::invalid_argument("character '" + std::string(signs) + "' is not trivial on the full product");
    return {pattern};
  }
  Subset f = 0;
  for (std::size_t i = 0; i < dual_.size(); ++i)
    if (pattern & gf2::bit(static_cast<int>(i))) f ^= dual_[i];
  return {f};
}

std::vector<int> ComponentGroup::basis_values(const ComponentCharacter& c) const {
  std::vector<int> v;
  for (Subset b : basis_) v.push_back(gf2::parity(c.negatives & b) ? -1 : 1);
  return v;
}

std::string ComponentGroup::format_character(const ComponentCharacter& c) const {
  std::string s;
  for (int v : basis_values(c)) s += v < 0 ? '-' : '+';
  return s;
}

int ComponentGroup::evaluate(const ComponentCharacter& c, Subset e) const {
  if (!contains(e)) throw std::invalid_argument(describe(e) + " is not an element of the component group");
  return gf2::parity(c.negatives & e) ? -1 : 1;
}

ComponentCharacter ComponentGroup::from_function(Subset f) const {
  if (f & ~full_) throw std::invalid_argument("function mask exceeds the Jordan set");
  if (gf2::parity(f) == 0) return {f};
  if (fam_.series == Series::SO_odd)
    throw std::invalid_argument("function is not trivial on the full product");
  return {f ^ lambda_};
}

std::string ComponentGroup::describe(Subset e) const {
  if (e == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!(e & gf2::bit(static_cast<int>(i)))) continue;
    if (!s.empty()) s += "*";
    s += i < jord_.size() ? to_string(jord_[i]) : "#" + std::to_string(i);
  }
  return s;
}

bool is_cuspidal_function(const JordanSet& j, Subset f) {
  if (has_gaps(j)) return false;
  for (std::size_t i = 0; i < j.size(); ++i)
    if (j[i].m == 2 && !(f & gf2::bit(static_cast<int>(i)))) return false;
  for (auto [lo, hi] : line_pairs(j))
    if (((f >> lo) & 1) == ((f >> hi) & 1)) return false;
  return true;
}

bool is_cuspidal_character(const ComponentGroup& g, const ComponentCharacter& c) {
  return is_cuspidal_function(g.jord(), c.negatives);
}

std::uint64_t count_cuspidal_characters(const GroupFamily& fam, const JordanSet& j) {
  require_valid(fam, j);
  if (j.size() > kMaxBlocks) throw std::invalid_argument("Jordan set has too many blocks");
  if (has_gaps(j)) return 0;
  const int n = static_cast<int>(j.size());
  gf2::AffineSystem sys(n);
  for (int i = 0; i < n; ++i)
    if (j[static_cast<std::size_t>(i)].m == 2) sys.add(gf2::bit(i), true);
  for (auto [lo, hi] : line_pairs(j))
    sys.add(gf2::bit(static_cast<int>(lo)) | gf2::bit(static_cast<int>(hi)), true);
  // Normalization: one representative per character.
  Subset full = n == 0 ? 0 : (gf2::bit(n) - 1);
  sys.add(full, false);
  auto sol = sys.solve();
  if (!sol.consistent) return 0;
  return std::uint64_t{1} << (n - sol.rank);
}

}  // namespace jordkit
