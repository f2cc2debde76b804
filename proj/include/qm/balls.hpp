#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qm/extreal.hpp"
#include "qm/space.hpp"

namespace qm {

/// A formal ball over a carrier point.
struct FormalBall {
  PointId center = 0;
  Rational radius;
  friend bool operator==(const FormalBall&, const FormalBall&) = default;
};

/// A formal ball whose centre is named, so it may lie outside the carrier
/// of a generator space. Serialized as "(point, p/q)".
struct BallLiteral {
  std::string center;
  Rational radius;
  friend bool operator==(const BallLiteral&, const BallLiteral&) = default;
};

FormalBall make_ball(PointId center, const Rational& radius);
BallLiteral literal(const Space& space, const FormalBall& b);
FormalBall resolve(const Space& space, const BallLiteral& b);
std::string to_string(const BallLiteral& b);
/// Parses "(point, p/q)".
BallLiteral parse_ball(std::string_view text);

bool leq_dplus(const Space& space, const FormalBall& a, const FormalBall& b);
bool leq_dplus(const Space& space, const BallLiteral& a, const BallLiteral& b);
ExtReal dplus(const Space& space, const FormalBall& a, const FormalBall& b);
/// (x, r) < (y, s) iff d(x, y) < r - s.
bool prec(const Space& space, const FormalBall& a, const FormalBall& b);

class NoOracle : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A closed-form infinite directed family with an exact description of its
/// upper bounds.
class ScriptedFamily {
 public:
  enum class Kind {
    Descending,  // (2^-m, 2^-m + s) in the remark space; bounds: x + r <= s
    Unbounded,   // (m, s) in the extended reals; bounds: (inf, r) with r <= s
    FromLeft,    // (y - 2^-(m+1), s + 2^-(m+1)) on the Sorgenfrey line
  };

  static ScriptedFamily descending(const Rational& s);
  static ScriptedFamily unbounded(const Rational& s);
  static ScriptedFamily from_left(const Rational& y, const Rational& s);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& parameters() const { return params_; }
  std::string description() const;
  /// The space kind whose formula the family is written against.
  SpaceKind space_kind() const;

  BallLiteral member(unsigned m) const;
  std::vector<BallLiteral> truncation(unsigned depth) const;
  /// Whether (center, radius) is an upper bound of the whole family.
  bool is_upper_bound(const Coord& center, const Rational& radius) const;
  /// The least upper bound.
  BallLiteral supremum() const;
  /// The family with every radius increased by `shift`.
  ScriptedFamily shifted(const Rational& shift) const;

  friend bool operator==(const ScriptedFamily&, const ScriptedFamily&) = default;

 private:
  ScriptedFamily(Kind kind, std::vector<Rational> params) : kind_(kind), params_(std::move(params)) {}
  Kind kind_;
  std::vector<Rational> params_;
};

inline constexpr unsigned kScriptedHorizon = 64;

/// Checks the upper-bound predicate for every carrier centre and each
/// radius in `radii`: the predicate must imply being above the first
/// depth+1 members, and its failure must be witnessed by some member of
/// index at most max(depth, kScriptedHorizon). Returns a description of
/// the first disagreement.
std::optional<std::string> truncation_disagreement(const Space& space, const ScriptedFamily& family,
                                                   std::span<const Rational> radii, unsigned depth);

enum class FamilyShape {
  Singleton,      // b1 is not even below b2
  EpsilonChain,   // (y, t + 2^-(n+1)) with supremum (y, t)
  GridChain,      // carrier chain converging to an in-grid supremum
  Scripted,       // a closed-form family
  Finite,         // a finite family (standardness probes)
};

std::string_view shape_name(FamilyShape s);

struct RefutationWitness {
  FamilyShape shape = FamilyShape::Singleton;
  std::optional<ScriptedFamily> scripted;
  std::vector<BallLiteral> members;
  BallLiteral sup;
  /// For standardness refutations: an upper bound of the shifted family
  /// that is not above the shifted supremum.
  std::optional<BallLiteral> failing;
};

struct Verdict {
  enum class Status { Holds, Refuted, Unknown };
  Status status = Status::Unknown;
  std::string justification;
  std::optional<RefutationWitness> witness;
  unsigned depth = 0;

  bool holds() const { return status == Status::Holds; }
  bool refuted() const { return status == Status::Refuted; }
  bool unknown() const { return status == Status::Unknown; }
};

std::string_view status_name(Verdict::Status s);

inline constexpr unsigned kDefaultRefuterDepth = 8;

bool has_way_below_oracle(const Space& space);
/// The closed-form way-below relation registered for the space kind.
std::optional<bool> way_below_oracle(const Space& space, const FormalBall& a, const FormalBall& b);

/// The bounded refuter alone. Chains use radii t + 2^-(n+1), n <= depth.
Verdict refute_way_below(const Space& space, const FormalBall& a, const FormalBall& b,
                         unsigned depth = kDefaultRefuterDepth);

/// Oracle when one is registered, otherwise the bounded refuter.
Verdict way_below(const Space& space, const FormalBall& a, const FormalBall& b,
                  unsigned depth = kDefaultRefuterDepth);

/// Re-checks a refutation of a << b; returns the reason it fails, if any.
std::optional<std::string> replay_way_below(const Space& space, const BallLiteral& a, const BallLiteral& b,
                                            const RefutationWitness& w);

class InvalidSup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using DirectedFamily = std::variant<ScriptedFamily, std::vector<FormalBall>>;

/// Radii tried for candidate upper bounds: the distance spectrum of the
/// space plus the known supremum's radius, shifted or not.
std::vector<Rational> default_candidate_radii(const Space& space, const Rational& sup_radius,
                                              const Rational& shift);

/// Probes whether shifting every radius of `family` by `shift` shifts its
/// supremum. Candidates are tried point by point in carrier order, larger
/// radii first.
Verdict standardness_probe(const Space& space, const DirectedFamily& family, const BallLiteral& known_sup,
                           const Rational& shift, std::span<const Rational> candidate_radii = {},
                           unsigned depth = kDefaultRefuterDepth);

std::optional<std::string> replay_standardness(const Space& space, const DirectedFamily& family,
                                               const BallLiteral& known_sup, const Rational& shift,
                                               const RefutationWitness& w);

/// The least upper bound among carrier balls of arbitrary radius, if any.
std::optional<FormalBall> grid_supremum(const Space& space, std::span<const FormalBall> family);
bool is_directed(const Space& space, std::span<const FormalBall> family);

/// v(x, y) = inf { r - s | (x, r) << (y, s) } from the closed forms.
ExtReal v_relation(const Space& space, PointId x, PointId y);
bool center_point_check(const Space& space, PointId x);
std::vector<PointId> center_points(const Space& space);

struct SmythReport {
  std::vector<PointId> non_centers;
  /// Ball pairs related by < but not by <<.
  std::vector<std::pair<FormalBall, FormalBall>> gaps;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  bool consistent() const { return non_centers.empty() && gaps.empty(); }
};

std::vector<Rational> default_probe_radii();

SmythReport smyth_probe(const Space& space, std::uint64_t sample_budget = kDefaultAxiomBudget,
                        std::uint64_t seed = kDefaultSeed, std::span<const Rational> radii = {});

/// Dyadic radii {0} u {2^-k | k <= depth} u {1, 2, ..., top}.
std::vector<Rational> dyadic_radii(unsigned depth, unsigned top = 1);

struct OrderLawViolation {
  std::string law;
  std::vector<FormalBall> balls;
  std::optional<Rational> shift;
};

struct OrderLawReport {
  std::uint64_t balls = 0;
  std::vector<OrderLawViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Reflexivity, transitivity, antisymmetry of <=^{d+} and its invariance
/// under adding the same shift to both radii, over carrier x radii.
OrderLawReport check_order_laws(const Space& space, std::span<const Rational> radii,
                                std::span<const Rational> shifts);

}  // namespace qm
