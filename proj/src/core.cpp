#include "jordkit/core.hpp"

#include <algorithm>
#include <sstream>

namespace jordkit {

std::string_view to_string(PhiType t) { return t == PhiType::orthogonal ? "orthogonal" : "symplectic"; }
std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
std::string_view to_string(Series s) { return s == Series::Sp ? "Sp" : "SO"; }

std::string GroupFamily::name() const { return std::string(to_string(series)) + std::to_string(rank); }

QuadCharSpace::QuadCharSpace(int dim) : dim_(dim) {
  if (dim < 1 || dim > 16) throw std::invalid_argument("quadratic character space dimension must be in 1..16");
}

std::string QuadCharSpace::format(QuadChar c) const {
  std::string s(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i)
    if (c & (1u << i)) s[static_cast<std::size_t>(dim_ - 1 - i)] = '1';
  return s;
}

QuadChar QuadCharSpace::parse(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("central character '" + std::string(bits) + "' must have " +
                                std::to_string(dim_) + " bits");
  QuadChar c = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("central character '" + std::string(bits) + "' is not a bit string");
    c = (c << 1) | static_cast<QuadChar>(ch - '0');
  }
  return c;
}

CuspidalLabel CuspidalLabel::make(std::string id, int gl_rank, PhiType phi_type, QuadChar central_char,
                                  Parity base_parity) {
  if (id.empty()) throw std::invalid_argument("label id must be non-empty");
  if (id.find_first_of(":,*; \t") != std::string::npos)
    throw std::invalid_argument("label id '" + id + "' contains a reserved character");
  if (gl_rank < 1) throw std::invalid_argument("label '" + id + "': gl_rank must be positive");
  if (gl_rank == 1 && phi_type != PhiType::orthogonal)
    throw std::invalid_argument("label '" + id + "': a character of GL(1) has orthogonal parameter");
  return CuspidalLabel{std::move(id), gl_rank, phi_type, central_char, base_parity};
}

CuspidalLabel quadratic_label(const QuadCharSpace& space, QuadChar c) {
  if (!space.contains(c)) throw std::invalid_argument("character outside the quadratic character space");
  std::string id = c == 0 ? std::string("triv") : "psi" + space.format(c);
  return CuspidalLabel::make(std::move(id), 1, PhiType::orthogonal, c, Parity::even);
}

std::string to_string(const JordanBlock& b) { return b.rho.id + ":" + std::to_string(b.m); }

PhiType block_phi_type(const JordanBlock& b) {
  PhiType em = (b.m % 2 == 1) ? PhiType::orthogonal : PhiType::symplectic;
  return b.rho.phi_type == em ? PhiType::orthogonal : PhiType::symplectic;
}

DuplicateBlockError::DuplicateBlockError(const JordanBlock& b)
    : std::invalid_argument("duplicate Jordan block " + to_string(b)) {}

JordanSet::JordanSet(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.m < 1) throw std::invalid_argument("Jordan block " + to_string(b) + " needs m >= 1");
  std::sort(blocks_.begin(), blocks_.end());
  auto dup = std::adjacent_find(blocks_.begin(), blocks_.end());
  if (dup != blocks_.end()) throw DuplicateBlockError(*dup);
}

std::optional<std::size_t> JordanSet::index_of(std::string_view rho_id, int m) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), std::pair{rho_id, m},
                             [](const JordanBlock& b, const std::pair<std::string_view, int>& key) {
                               if (b.rho.id != key.first) return std::string_view(b.rho.id) < key.first;
                               return b.m < key.second;
                             });
  if (it == blocks_.end() || it->rho.id != rho_id || it->m != m) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::vector<CuspidalLabel> JordanSet::lines() const {
  std::vector<CuspidalLabel> out;
  for (const auto& b : blocks_)
    if (out.empty() || out.back().id != b.rho.id) out.push_back(b.rho);
  return out;
}

std::vector<int> JordanSet::line(std::string_view rho_id) const {
  std::vector<int> out;
  for (const auto& b : blocks_)
    if (b.rho.id == rho_id) out.push_back(b.m);
  return out;
}

int JordanSet::total_dimension() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.dimension();
  return d;
}

JordanSet JordanSet::without(std::span<const JordanBlock> removed) const {
  std::vector<JordanBlock> kept;
  for (const auto& b : blocks_)
    if (std::find(removed.begin(), removed.end(), b) == removed.end()) kept.push_back(b);
  return JordanSet(std::move(kept));
}

JordanSet JordanSet::with(const JordanBlock& added) const {
  auto v = blocks_;
  v.push_back(added);
  return JordanSet(std::move(v));
}

std::string to_string(const JordanSet& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += to_string(j[i]);
  }
  return s + "}";
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::block_type: return "a";
    case Clause::dimension: return "b";
    case Clause::central_character: return "c";
  }
  return "?";
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << "(" << to_string(violations[i].clause) << ") " << violations[i].message;
  }
  return os.str();
}

ValidationReport validate_jordan_set(const GroupFamily& fam, const JordanSet& j) {
  ValidationReport r;
  if (fam.rank < 0)
    r.violations.push_back({Clause::dimension, {}, "negative rank " + std::to_string(fam.rank)});

  std::vector<JordanBlock> wrong;
  for (const auto& b : j)
    if (block_phi_type(b) != fam.required_type()) wrong.push_back(b);
  if (!wrong.empty()) {
    std::string msg = "blocks of " + std::string(to_string(opposite_type(fam.required_type()))) + " type:";
    for (const auto& b : wrong) msg += " " + to_string(b);
    r.violations.push_back({Clause::block_type, wrong, msg});
  }

  int dim = j.total_dimension();
  if (dim != fam.dual_dimension()) {
    r.violations.push_back({Clause::dimension,
                            {j.begin(), j.end()},
                            "total dimension " + std::to_string(dim) + " but " + fam.name() +
                                " needs " + std::to_string(fam.dual_dimension())});
  }

  if (fam.series == Series::Sp) {
    QuadChar prod = 0;
    std::vector<JordanBlock> x;
    for (const auto& b : j) {
      if (b.rho.phi_type != PhiType::orthogonal) continue;
      prod ^= b.rho.central_char;
      x.push_back(b);
    }
    if (prod != 0)
      r.violations.push_back({Clause::central_character, x,
                              "central characters of orthogonal lines multiply to a nontrivial character"});
  }
  return r;
}

PhiType opposite_type(PhiType t) {
  return t == PhiType::orthogonal ? PhiType::symplectic : PhiType::orthogonal;
}

InvalidJordanSet::InvalidJordanSet(ValidationReport report)
    : std::invalid_argument("invalid Jordan set: " + report.describe()), report_(std::move(report)) {}

void require_valid(const GroupFamily& fam, const JordanSet& j) {
  auto r = validate_jordan_set(fam, j);
  if (!r.ok()) throw InvalidJordanSet(std::move(r));
}

std::optional<int> a_minus(const JordanSet& j, const CuspidalLabel& rho, int a) {
  if (!j.contains(rho.id, a))
    throw std::invalid_argument("a_minus: " + rho.id + ":" + std::to_string(a) + " is not in the Jordan set");
  std::optional<int> best;
  for (const auto& b : j)
    if (b.rho.id == rho.id && b.m < a) best = b.m;  // blocks are sorted by m within a line
  return best;
}

bool has_gaps(const JordanSet& j) {
  for (const auto& b : j)
    if (b.m >= 3 && !j.contains(b.rho.id, b.m - 2)) return true;
  return false;
}

bool is_isolated_gl_speh(int l, int m) { return l != 2 && m != 2; }

JordanSet rank_zero_jordan_set(Series s, const CuspidalLabel& trivial) {
  if (s == Series::SO_odd) return JordanSet{};
  if (!trivial.is_trivial_character())
    throw std::invalid_argument("rank-zero Sp base needs the trivial character of GL(1)");
  return JordanSet({JordanBlock{trivial, 1}});
}

void LabelTable::add(CuspidalLabel label) {
  if (!space_.contains(label.central_char))
    throw std::invalid_argument("label '" + label.id + "': central character outside the character space");
  auto id = label.id;
  if (!labels_.emplace(id, std::move(label)).second)
    throw std::invalid_argument("duplicate label id '" + id + "'");
}

const CuspidalLabel* LabelTable::find(std::string_view id) const {
  auto it = labels_.find(id);
  return it == labels_.end() ? nullptr : &it->second;
}

const CuspidalLabel& LabelTable::at(std::string_view id) const {
  if (const auto* l = find(id)) return *l;
  throw std::invalid_argument("unknown cuspidal label '" + std::string(id) + "'");
}

std::vector<CuspidalLabel> LabelTable::all() const {
  std::vector<CuspidalLabel> out;
  for (const auto& [_, l] : labels_) out.push_back(l);
  return out;
}

const CuspidalLabel* LabelTable::trivial() const {
  for (const auto& [_, l] : labels_)
    if (l.is_trivial_character()) return &l;
  return nullptr;
}

}  // namespace jordkit
