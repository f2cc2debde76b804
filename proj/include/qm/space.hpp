#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qm/extreal.hpp"
#include "qm/posets.hpp"

namespace qm {

enum class SpaceKind {
  FiniteTable,
  DRealGrid,           // extended non-negative reals with d(x, y) = max(x - y, 0)
  SorgenfreyGrid,      // d(x, y) = y - x if x <= y, else inf
  Poset,               // d(x, y) = 0 if x <= y, else inf
  RemarkNonStandard,   // [0, 1], d(0, x) = a for x != 0, d(x, 0) = 0, else |x - y|
  NgNonStandardWB,     // Sorgenfrey (0, 1] plus two points -2 and -1
};

std::string_view kind_name(SpaceKind kind);

using PointId = std::size_t;

/// Position of a point in the ambient space a generator samples from.
/// Only meaningful for generator kinds.
struct Coord {
  Rational value;
  bool infinite = false;
  friend bool operator==(const Coord&, const Coord&) = default;
};

std::string to_string(const Coord& c);

class UnknownPoint : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quasi-metric space on a finite carrier. Distances are tabulated at
/// construction; generator kinds also evaluate their formula on points
/// outside the carrier (used for closed-form families).
class Space {
 public:
  static Space finite_table(std::vector<std::string> names, std::vector<std::vector<ExtReal>> dist);
  /// Grid of extended non-negative reals; infinity is allowed as a point.
  static Space dreal_grid(const std::vector<ExtReal>& values);
  static Space sorgenfrey_grid(const std::vector<Rational>& values);
  static Space poset(const FinitePoset& p);
  /// Grid inside [0, 1]; `a` > 0.
  static Space remark_nonstandard(const Rational& a, const std::vector<Rational>& values);
  /// Grid inside (0, 1] that must contain 1; points -2 and -1 come first.
  /// Requires a, b > 0 and 0 <= c <= a + b.
  static Space ng_nonstandard(const Rational& a, const Rational& b, const Rational& c,
                              const std::vector<Rational>& values);

  SpaceKind kind() const { return kind_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(PointId x) const { return names_.at(x); }
  PointId point(std::string_view name) const;
  std::optional<PointId> find(std::string_view name) const;

  const ExtReal& dist(PointId x, PointId y) const { return table_[x * size() + y]; }
  /// Distance between two named points; generator kinds accept any point
  /// of their ambient space, other kinds only carrier points.
  ExtReal dist(std::string_view x, std::string_view y) const;

  bool is_generator() const { return kind_ != SpaceKind::FiniteTable && kind_ != SpaceKind::Poset; }
  /// Parses a point name as a coordinate of the ambient space.
  std::optional<Coord> coord_of(std::string_view name) const;
  std::optional<Coord> coord(PointId x) const;
  /// The generator formula; nullopt for tabulated kinds.
  std::optional<ExtReal> formula(const Coord& x, const Coord& y) const;

  bool is_symmetric() const;

  const std::vector<Rational>& parameters() const { return params_; }
  /// The generator grid in the order given (excludes the fixed points of
  /// the ng-nonstd space).
  const std::vector<Coord>& grid() const { return grid_; }
  /// Underlying poset for Poset spaces.
  const std::optional<FinitePoset>& as_poset() const { return poset_; }

 private:
  Space() = default;
  void tabulate();

  SpaceKind kind_ = SpaceKind::FiniteTable;
  std::vector<std::string> names_;
  std::vector<ExtReal> table_;
  std::vector<Rational> params_;
  std::vector<Coord> grid_;
  std::optional<FinitePoset> poset_;
};

enum class Axiom { Reflexivity, Triangle, Separation };
std::string_view axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<PointId> witness;  // (x) / (x, y, z) / (x, y)
  ExtReal lhs;                   // the side that should be smaller
  ExtReal rhs;
};

struct AxiomReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t triples_checked = 0;
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

inline constexpr std::uint64_t kDefaultAxiomBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Checks d(x, x) = 0, the triangle inequality and separation. Triangles
/// are checked exhaustively when |X|^3 <= sample_budget, otherwise on
/// `sample_budget` seeded random triples.
AxiomReport check_axioms(const Space& space, std::uint64_t sample_budget = kDefaultAxiomBudget,
                         std::uint64_t seed = kDefaultSeed);

/// x <=^d y iff d(x, y) = 0.
bool specialization_leq(const Space& space, PointId x, PointId y);
/// The specialization order of the carrier as a relation.
Relation specialization_order(const Space& space);

/// Finite table of max(d(x, y), d(y, x)).
Space symmetrize(const Space& space);

/// Every distinct finite distance value, ascending.
std::vector<Rational> distance_spectrum(const Space& space);

}  // namespace qm
