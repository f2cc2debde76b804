#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qm/balls.hpp"
#include "qm/extreal.hpp"
#include "qm/space.hpp"

namespace qm {

class NotOpen : public std::invalid_argument {
 public:
  NotOpen(const std::string& what, PointId inside, PointId outside)
      : std::invalid_argument(what), inside_(inside), outside_(outside) {}
  /// inside is in the set, outside is above it but missing.
  PointId inside() const { return inside_; }
  PointId outside() const { return outside_; }

 private:
  PointId inside_;
  PointId outside_;
};

/// An upward-closed subset of a finite carrier.
class OpenSet {
 public:
  /// Throws NotOpen if the set is not upward-closed under <=^d.
  OpenSet(const Space& space, std::span<const PointId> points);
  static OpenSet whole(const Space& space);
  static OpenSet empty(const Space& space);

  bool contains(PointId x) const { return member_.at(x) != 0; }
  std::size_t carrier_size() const { return member_.size(); }
  std::vector<PointId> points() const;
  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  OpenSet() = default;
  std::vector<char> member_;
};

/// A function from the carrier into the extended non-negative reals.
using LscFunction = std::vector<ExtReal>;

/// (x, r) lies in the largest Scott-open set of balls whose radius-0
/// slice is inside U, i.e. every y with d(x, y) <= r is in U.
bool hat_membership(const Space& space, const FormalBall& ball, const OpenSet& u);
OpenSet thinning(const Space& space, const OpenSet& u, const Rational& r);
/// min over y outside U of d(x, y); infinity when U is everything.
ExtReal dist_to_complement(const Space& space, PointId x, const OpenSet& u);

/// The quasi-metric of the extended non-negative reals: a - b if a > b, else 0.
ExtReal dreal(const ExtReal& a, const ExtReal& b);

struct LipschitzViolation {
  PointId x;
  PointId y;
  ExtReal lhs;  // distance of the images
  ExtReal rhs;  // alpha * d(x, y)
};

struct LipschitzReport {
  std::vector<LipschitzViolation> violations;
  /// Whether (x, r) |-> (f(x), alpha r) is monotone on carrier balls.
  bool lift_monotone = true;
  std::uint64_t lift_pairs_checked = 0;
  bool pass() const { return violations.empty(); }
};

/// f maps carrier points of x_space to carrier points of y_space.
LipschitzReport lipschitz_check(const Space& x_space, const Space& y_space, std::span<const PointId> f,
                                const Rational& alpha);
/// f maps into the extended non-negative reals with dreal.
LipschitzReport lipschitz_check(const Space& space, const LscFunction& f, const Rational& alpha);

/// Pairs (x, y) with x <=^d y but f(x) > f(y).
std::vector<std::pair<PointId, PointId>> monotonicity_violations(const Space& space, const LscFunction& f);
bool is_monotone(const Space& space, const LscFunction& f);

/// g(x) = min_y f(y) + alpha d(x, y).
LscFunction envelope(const Space& space, const LscFunction& f, const Rational& alpha);

/// r on U and 0 elsewhere.
LscFunction scaled_indicator(const Space& space, const OpenSet& u, const ExtReal& r);
LscFunction dist_function(const Space& space, const OpenSet& u);

/// The least alpha making a finite-valued f alpha-Lipschitz: the largest
/// (f(x) - f(y)) / d(x, y) over pairs at finite non-zero distance, and 0
/// if there is none. nullopt when f takes the value infinity or some pair
/// at distance 0 decreases, since then no finite alpha works.
std::optional<Rational> lipschitz_threshold(const Space& space, const LscFunction& f);

}  // namespace qm
