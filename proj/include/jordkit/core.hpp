#pragma once

// Cuspidal-line labels, Jordan blocks, Jordan sets and their validity for
// Sp(2n) and SO(2n+1).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jordkit {

enum class PhiType { orthogonal, symplectic };
enum class Parity { even, odd };
enum class Series { Sp, SO_odd };

std::string_view to_string(PhiType t);
std::string_view to_string(Parity p);
std::string_view to_string(Series s);

inline Parity parity_of(std::int64_t m) { return (m % 2 == 0) ? Parity::even : Parity::odd; }
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
PhiType opposite_type(PhiType t);

/// Sp(2n,F) or SO(2n+1,F).
struct GroupFamily {
  Series series = Series::Sp;
  int rank = 0;

  /// Dimension of the complex dual group's standard representation.
  int dual_dimension() const { return series == Series::Sp ? 2 * rank + 1 : 2 * rank; }
  /// Type every Jordan block must have: orthogonal for Sp, symplectic for SO.
  PhiType required_type() const {
    return series == Series::Sp ? PhiType::orthogonal : PhiType::symplectic;
  }
  std::string name() const;

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

/// Quadratic characters of F^x as the F_2-vector space (Z/2)^dim.
using QuadChar = std::uint32_t;

class QuadCharSpace {
 public:
  explicit QuadCharSpace(int dim = 2);
  int dim() const { return dim_; }
  std::uint32_t size() const { return 1u << dim_; }
  bool contains(QuadChar c) const { return c < size(); }
  /// Most significant coordinate first, e.g. "01".
  std::string format(QuadChar c) const;
  QuadChar parse(std::string_view bits) const;

  friend bool operator==(const QuadCharSpace&, const QuadCharSpace&) = default;

 private:
  int dim_;
};

/// A self-dual cuspidal representation rho of GL(gl_rank, F), known only by
/// its declared data. Labels compare equal iff their ids are equal.
struct CuspidalLabel {
  std::string id;
  int gl_rank = 1;
  PhiType phi_type = PhiType::orthogonal;
  QuadChar central_char = 0;
  /// Parity of m for which delta(rho,m) x 1 reduces on a rank-zero group of
  /// the odd-orthogonal series. The symplectic series uses the opposite one.
  Parity base_parity = Parity::even;

  /// Checks the label invariants; throws std::invalid_argument.
  static CuspidalLabel make(std::string id, int gl_rank, PhiType phi_type, QuadChar central_char,
                            Parity base_parity);

  Parity base_parity_for(Series s) const {
    return s == Series::SO_odd ? base_parity : opposite(base_parity);
  }
  bool is_gl1() const { return gl_rank == 1; }
  /// The trivial character of GL(1,F).
  bool is_trivial_character() const { return gl_rank == 1 && central_char == 0; }

  friend bool operator==(const CuspidalLabel& a, const CuspidalLabel& b) { return a.id == b.id; }
};

/// Label of the quadratic character c; the trivial character gets id "triv".
CuspidalLabel quadratic_label(const QuadCharSpace& space, QuadChar c);

/// delta(rho, m).
struct JordanBlock {
  CuspidalLabel rho;
  int m = 1;

  int dimension() const { return rho.gl_rank * m; }

  friend bool operator==(const JordanBlock& a, const JordanBlock& b) {
    return a.m == b.m && a.rho.id == b.rho.id;
  }
  friend std::strong_ordering operator<=>(const JordanBlock& a, const JordanBlock& b) {
    if (auto c = a.rho.id <=> b.rho.id; c != 0) return c;
    return a.m <=> b.m;
  }
};

std::string to_string(const JordanBlock& b);

PhiType block_phi_type(const JordanBlock& b);

class DuplicateBlockError : public std::invalid_argument {
 public:
  explicit DuplicateBlockError(const JordanBlock& b);
};

/// Finite set of Jordan blocks kept in canonical order (rho id, then m).
class JordanSet {
 public:
  JordanSet() = default;
  /// Throws DuplicateBlockError if a block repeats, std::invalid_argument on m < 1.
  explicit JordanSet(std::vector<JordanBlock> blocks);

  std::span<const JordanBlock> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const JordanBlock& operator[](std::size_t i) const { return blocks_[i]; }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  std::optional<std::size_t> index_of(std::string_view rho_id, int m) const;
  bool contains(std::string_view rho_id, int m) const { return index_of(rho_id, m).has_value(); }
  bool contains(const JordanBlock& b) const { return contains(b.rho.id, b.m); }

  /// Distinct cuspidal labels in canonical order.
  std::vector<CuspidalLabel> lines() const;
  /// Increasing m values on one line (empty if the line is absent).
  std::vector<int> line(std::string_view rho_id) const;

  int total_dimension() const;

  JordanSet without(std::span<const JordanBlock> removed) const;
  JordanSet with(const JordanBlock& added) const;

  friend bool operator==(const JordanSet&, const JordanSet&) = default;

 private:
  std::vector<JordanBlock> blocks_;
};

std::string to_string(const JordanSet& j);

enum class Clause { block_type, dimension, central_character };
std::string_view to_string(Clause c);

struct Violation {
  Clause clause;
  std::vector<JordanBlock> blocks;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks (a) block types, (b) total dimension against the dual group, and
/// (c) for Sp, that the central characters of orthogonal lines multiply to 1.
ValidationReport validate_jordan_set(const GroupFamily& fam, const JordanSet& j);

class InvalidJordanSet : public std::invalid_argument {
 public:
  explicit InvalidJordanSet(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

void require_valid(const GroupFamily& fam, const JordanSet& j);

/// Largest b < a with delta(rho,b) in j. Throws if delta(rho,a) is not in j.
std::optional<int> a_minus(const JordanSet& j, const CuspidalLabel& rho, int a);

/// True iff some delta(rho,m), m >= 3, lacks delta(rho,m-2).
bool has_gaps(const JordanSet& j);

/// u(delta(rho,l), m) is isolated modulo center iff l != 2 and m != 2.
bool is_isolated_gl_speh(int l, int m);

/// Jordan set of the trivial representation of the rank-zero group:
/// empty for SO(1), {delta(1,1)} for Sp(0).
JordanSet rank_zero_jordan_set(Series s, const CuspidalLabel& trivial);

/// Label lookup by id.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(QuadCharSpace space) : space_(space) {}

  /// Throws std::invalid_argument on a duplicate id or a central character
  /// outside the space.
  void add(CuspidalLabel label);
  const CuspidalLabel* find(std::string_view id) const;
  const CuspidalLabel& at(std::string_view id) const;
  const QuadCharSpace& space() const { return space_; }
  std::vector<CuspidalLabel> all() const;
  /// First label that is the trivial character of GL(1), if any.
  const CuspidalLabel* trivial() const;

 private:
  QuadCharSpace space_{2};
  std::map<std::string, CuspidalLabel, std::less<>> labels_;
};

}  // namespace jordkit
