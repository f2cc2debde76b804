#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qm {

/// Subsets of a poset with at most 64 elements, as bitmasks.
using Subset = std::uint64_t;

/// An n x n boolean relation, row-major.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  Relation(std::size_t n, const std::vector<std::vector<bool>>& rows);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * n_ + j] = value ? 1 : 0; }

  /// Row i as a bitmask (only for n <= 64).
  Subset row(std::size_t i) const;
  /// Column j as a bitmask (only for n <= 64).
  Subset column(std::size_t j) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> bits_;
};

class UnknownElement : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotAPoset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NotAnAbstractBasis : public std::invalid_argument {
 public:
  NotAnAbstractBasis(const std::string& what, std::vector<std::size_t> lower, std::size_t upper)
      : std::invalid_argument(what), lower_(std::move(lower)), upper_(upper) {}
  /// The finite set F and the element y of the violated instance.
  const std::vector<std::size_t>& lower() const { return lower_; }
  std::size_t upper() const { return upper_; }

 private:
  std::vector<std::size_t> lower_;
  std::size_t upper_;
};

/// A finite partial order. The relation is validated on construction.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> names, Relation leq);
  FinitePoset(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  /// Subsets of an n-set ordered by inclusion.
  static FinitePoset powerset(std::size_t n);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index(std::string_view name) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_(a, b); }
  const Relation& relation() const { return leq_; }

  Subset up(std::size_t a) const { return leq_.row(a); }
  Subset down(std::size_t a) const { return leq_.column(a); }
  bool is_up_set(Subset s) const;
  bool is_down_set(Subset s) const;
  bool is_directed(Subset s) const;
  /// Least upper bound of s inside the poset, if any.
  std::optional<std::size_t> supremum(Subset s) const;

 private:
  std::vector<std::string> names_;
  Relation leq_;
};

/// Returns a description of the first violated partial-order law, or nullopt.
std::optional<std::string> partial_order_violation(const Relation& r);

/// A finite abstract basis: a transitive, interpolative relation.
///
/// Interpolation is read for nonempty finite sets: whenever F < y with F
/// nonempty there is z with F < z < y.
class AbstractBasis {
 public:
  AbstractBasis(std::vector<std::string> names, Relation prec);
  AbstractBasis(std::vector<std::string> names, const std::vector<std::vector<bool>>& prec);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool prec(std::size_t a, std::size_t b) const { return prec_(a, b); }
  const Relation& relation() const { return prec_; }
  /// {b' | b' < b}.
  Subset predecessors(std::size_t b) const { return prec_.column(b); }

 private:
  std::vector<std::string> names_;
  Relation prec_;
};

/// Throws NotAnAbstractBasis naming the first violated instance.
void validate_abstract_basis(const std::vector<std::string>& names, const Relation& prec);

/// A completion: the poset of (rounded) ideals ordered by inclusion.
struct Completion {
  FinitePoset poset;
  /// Member set of each completion element, aligned with poset indices.
  std::vector<Subset> ideals;
  /// For each basis element b, the index of the principal (rounded) ideal
  /// generated by b, when that set is an element of the completion.
  std::vector<std::optional<std::size_t>> embedding;
};

inline constexpr std::size_t kDefaultIdealBound = 12;
inline constexpr std::size_t kDefaultRoundedIdealBound = 10;

bool way_below_finite(const FinitePoset& p, std::size_t a, std::size_t b);
/// The definition of way-below evaluated by enumerating every directed
/// subset; only for posets with at most 16 elements.
bool way_below_by_definition(const FinitePoset& p, std::size_t a, std::size_t b);

Completion ideal_completion(const FinitePoset& p, std::size_t bound = kDefaultIdealBound);
/// Rounded ideals found by filtering every subset of the basis.
Completion rounded_ideal_completion(const AbstractBasis& b, std::size_t bound = kDefaultRoundedIdealBound);
/// Rounded ideals computed from generators: the predecessor sets of
/// elements z with z < z, deduplicated and sorted.
std::vector<Subset> rounded_ideals_from_generators(const AbstractBasis& b);

struct QuasiIdealViolation {
  std::size_t below;   // a non-finite element ...
  std::size_t finite;  // ... below this finite one
};

struct QuasiIdealReport {
  std::vector<QuasiIdealViolation> violations;
  bool pass() const { return violations.empty(); }
};

QuasiIdealReport quasi_ideal_check(const FinitePoset& p, const std::vector<bool>& finite_elems);
/// The same check on a raw relation that need not be a partial order.
QuasiIdealReport quasi_ideal_check(const Relation& leq, const std::vector<bool>& finite_elems);

// Strong Choquet game on a finite poset with its Scott (= up-set) topology.

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BetaMove {
  std::size_t point;
  Subset open;
  friend bool operator==(const BetaMove&, const BetaMove&) = default;
};

struct ChoquetRound {
  BetaMove beta;
  std::size_t alpha_point;  // y_n, way-below x_n and inside V_n
  Subset alpha_open;        // U_n = the up-set of y_n
};

struct PlayTranscript {
  std::vector<ChoquetRound> rounds;
  /// Rounds appended by continuing the play with beta's stationary moves
  /// (x, V) = (x_n, U_n) until the position repeats.
  std::size_t stationary_rounds = 0;
  Subset intersection_u = 0;
  Subset intersection_v = 0;
  bool alpha_wins = false;
  /// The V_n stabilize to a principal filter (the up-set of one point).
  std::optional<std::size_t> limit_point;
};

/// alpha's response to (x, V): the least element of V below x in the
/// poset order, ties broken by element order.
std::size_t alpha_response(const FinitePoset& p, const BetaMove& move);

/// Plays beta's scripted moves against alpha's strategy.
PlayTranscript choquet_play(const FinitePoset& p, std::span<const BetaMove> beta_moves);

/// All legal beta moves after the given history (lexicographic order:
/// open sets by bitmask, then points).
std::vector<BetaMove> legal_beta_moves(const FinitePoset& p, const std::vector<ChoquetRound>& history);

struct ChoquetSummary {
  std::size_t plays = 0;
  std::size_t alpha_wins = 0;
  std::size_t intersections_equal = 0;
  std::size_t converged = 0;
  std::optional<PlayTranscript> first_failure;
  bool all_good() const { return plays == alpha_wins && plays == intersections_equal && plays == converged; }
};

/// Every beta strategy of the given depth, enumerated canonically.
ChoquetSummary choquet_exhaustive(const FinitePoset& p, std::size_t depth);
/// `plays` seeded random beta strategies of the given depth.
ChoquetSummary choquet_random(const FinitePoset& p, std::size_t depth, std::size_t plays, std::uint64_t seed);

struct DotStyle {
  /// Extra attributes per node, e.g. "shape=box"; empty for none.
  std::vector<std::string> node_attributes;
};

/// DOT digraph of the Hasse diagram, edges pointing upwards.
std::string export_dot(const FinitePoset& p, const DotStyle& style = {});

/// Pairs (a, b) with a < b and nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const FinitePoset& p);

std::string subset_name(const std::vector<std::string>& names, Subset s);

}  // namespace qm
