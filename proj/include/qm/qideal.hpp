#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qm/balls.hpp"
#include "qm/posets.hpp"
#include "qm/space.hpp"

namespace qm {

inline constexpr unsigned kDefaultModelDepth = 5;

/// Balls {(x, 0)} followed by {(x, 2^-k) | 0 <= k <= depth}, ordered by
/// (x, r) [= (y, s) iff equal, or (x, r) << (y, s) with r >= factor * s,
/// or r = s = 0 and x <=^d y.
struct ModelPoset {
  std::vector<std::string> point_names;
  std::vector<FormalBall> nodes;
  std::vector<std::string> labels;
  Relation order;
  /// The specialization order of the carrier the model was built from.
  Relation specialization;
  unsigned depth = 0;
  Rational factor{2};

  std::size_t size() const { return nodes.size(); }
  bool is_limit(std::size_t i) const { return sgn(nodes[i].radius) == 0; }
  std::vector<bool> finite_elements() const;
};

/// Requires a closed-form way-below oracle for the space (NoOracle
/// otherwise), depth >= 1 and factor > 1.
ModelPoset build_model(const Space& space, unsigned depth = kDefaultModelDepth, const Rational& factor = Rational(2));

struct ModelCheckReport {
  std::optional<std::string> order_violation;
  /// Edges from a radius-0 element up to a positive-radius one.
  std::vector<std::pair<std::size_t, std::size_t>> layering_violations;
  /// Number of elements in the longest strictly ascending chain of
  /// positive-radius elements; nullopt if the strict part has a cycle.
  std::optional<std::size_t> longest_chain;
  std::size_t chain_bound = 0;
  bool limit_isomorphic = false;
  QuasiIdealReport quasi_ideal;
  /// Strict edges between positive radii r, s with r < factor * s.
  std::vector<std::pair<std::size_t, std::size_t>> halving_violations;

  bool layering() const { return layering_violations.empty(); }
  bool chains_bounded() const { return longest_chain && *longest_chain <= chain_bound; }
  bool pass() const {
    return !order_violation && layering() && chains_bounded() && limit_isomorphic && quasi_ideal.pass() &&
           halving_violations.empty();
  }
};

ModelCheckReport quasi_ideal_model_check(const ModelPoset& m);

/// The induced order on radius-0 elements, named by carrier point.
FinitePoset limit_layer(const ModelPoset& m);
/// Throws NotAPoset if the relation is not a partial order.
FinitePoset as_poset(const ModelPoset& m);
/// Hasse diagram with limit elements drawn as boxes.
std::string model_dot(const ModelPoset& m);

}  // namespace qm
