#include "qm/lipschitz.hpp"

#include <algorithm>

namespace qm {

OpenSet::OpenSet(const Space& space, std::span<const PointId> points) : member_(space.size(), 0) {
  for (PointId x : points) {
    if (x >= space.size()) throw UnknownPoint("point index out of range");
    member_[x] = 1;
  }
  for (PointId x = 0; x < space.size(); ++x) {
    if (!member_[x]) continue;
    for (PointId y = 0; y < space.size(); ++y) {
      if (!member_[y] && space.dist(x, y).is_zero()) {
        throw NotOpen("set is not upward-closed: contains " + space.name(x) + " but not " + space.name(y), x, y);
      }
    }
  }
}

OpenSet OpenSet::whole(const Space& space) {
  OpenSet u;
  u.member_.assign(space.size(), 1);
  return u;
}

OpenSet OpenSet::empty(const Space& space) {
  OpenSet u;
  u.member_.assign(space.size(), 0);
  return u;
}

std::vector<PointId> OpenSet::points() const {
  std::vector<PointId> out;
  for (PointId x = 0; x < member_.size(); ++x) {
    if (member_[x]) out.push_back(x);
  }
  return out;
}

bool hat_membership(const Space& space, const FormalBall& ball, const OpenSet& u) {
  const ExtReal r(ball.radius);
  for (PointId y = 0; y < space.size(); ++y) {
    if (space.dist(ball.center, y) <= r && !u.contains(y)) return false;
  }
  return true;
}

OpenSet thinning(const Space& space, const OpenSet& u, const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("thinning radius must be non-negative");
  std::vector<PointId> pts;
  for (PointId x = 0; x < space.size(); ++x) {
    if (hat_membership(space, FormalBall{x, r}, u)) pts.push_back(x);
  }
  return OpenSet(space, pts);
}

ExtReal dist_to_complement(const Space& space, PointId x, const OpenSet& u) {
  ExtReal best = ExtReal::infinity();
  for (PointId y = 0; y < space.size(); ++y) {
    if (!u.contains(y)) best = min(best, space.dist(x, y));
  }
  return best;
}

ExtReal dreal(const ExtReal& a, const ExtReal& b) {
  if (a <= b) return ExtReal{};
  return monus(a, b);
}

namespace {

template <typename Image>
LipschitzReport check(const Space& space, const Rational& alpha, Image image_dist) {
  if (sgn(alpha) < 0) throw std::domain_error("Lipschitz constant must be non-negative");
  LipschitzReport report;
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtReal lhs = image_dist(x, y);
      const ExtReal rhs = space.dist(x, y).scaled(alpha);
      if (lhs > rhs) report.violations.push_back({x, y, lhs, rhs});
    }
  }
  // (x, r) <= (y, s) must give (f x, alpha r) <= (f y, alpha s), i.e.
  // image distance <= alpha (r - s); radii range over {0} and the spectrum.
  std::vector<Rational> radii = distance_spectrum(space);
  radii.insert(radii.begin(), Rational(0));
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtReal lhs = image_dist(x, y);
      for (const auto& r : radii) {
        for (const auto& s : radii) {
          if (!leq_dplus(space, FormalBall{x, r}, FormalBall{y, s})) continue;
          ++report.lift_pairs_checked;
          if (lhs > ExtReal(Rational(alpha * (r - s)))) report.lift_monotone = false;
        }
      }
    }
  }
  return report;
}

}  // namespace

LipschitzReport lipschitz_check(const Space& x_space, const Space& y_space, std::span<const PointId> f,
                                const Rational& alpha) {
  if (f.size() != x_space.size()) throw std::invalid_argument("map must be total on the domain carrier");
  for (PointId v : f) {
    if (v >= y_space.size()) throw UnknownPoint("map value outside the target carrier");
  }
  return check(x_space, alpha, [&](PointId x, PointId y) { return y_space.dist(f[x], f[y]); });
}

LipschitzReport lipschitz_check(const Space& space, const LscFunction& f, const Rational& alpha) {
  if (f.size() != space.size()) throw std::invalid_argument("function must be total on the carrier");
  return check(space, alpha, [&](PointId x, PointId y) { return dreal(f[x], f[y]); });
}

std::vector<std::pair<PointId, PointId>> monotonicity_violations(const Space& space, const LscFunction& f) {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) {
      if (space.dist(x, y).is_zero() && f.at(x) > f.at(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_monotone(const Space& space, const LscFunction& f) { return monotonicity_violations(space, f).empty(); }

LscFunction envelope(const Space& space, const LscFunction& f, const Rational& alpha) {
  if (sgn(alpha) < 0) throw std::domain_error("Lipschitz constant must be non-negative");
  if (f.size() != space.size()) throw std::invalid_argument("function must be total on the carrier");
  LscFunction g(space.size(), ExtReal::infinity());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) g[x] = min(g[x], f[y] + space.dist(x, y).scaled(alpha));
  }
  return g;
}

LscFunction scaled_indicator(const Space& space, const OpenSet& u, const ExtReal& r) {
  LscFunction f(space.size());
  for (PointId x = 0; x < space.size(); ++x) f[x] = u.contains(x) ? r : ExtReal{};
  return f;
}

LscFunction dist_function(const Space& space, const OpenSet& u) {
  LscFunction f(space.size());
  for (PointId x = 0; x < space.size(); ++x) f[x] = dist_to_complement(space, x, u);
  return f;
}

std::optional<Rational> lipschitz_threshold(const Space& space, const LscFunction& f) {
  if (f.size() != space.size()) throw std::invalid_argument("function must be total on the carrier");
  Rational best(0);
  for (PointId x = 0; x < space.size(); ++x) {
    if (f[x].is_infinite()) return std::nullopt;
  }
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtReal& d = space.dist(x, y);
      if (d.is_infinite() || f[x] <= f[y]) continue;
      if (d.is_zero()) return std::nullopt;
      best = std::max(best, Rational((f[x].value() - f[y].value()) / d.value()));
    }
  }
  return best;
}

}  // namespace qm
