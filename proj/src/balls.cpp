#include "qm/balls.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace qm {

namespace {

// d <= q for a distance d and a possibly negative rational q.
bool dist_le(const ExtReal& d, const Rational& q) { return d.is_finite() && d.value() <= q; }
bool dist_lt(const ExtReal& d, const Rational& q) { return d.is_finite() && d.value() < q; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Largest radius u such that (z, u) is above every member, if any.
std::optional<Rational> upper_radius(const Space& space, std::span<const FormalBall> family, PointId z) {
  std::optional<Rational> best;
  for (const auto& m : family) {
    const ExtReal& d = space.dist(m.center, z);
    if (d.is_infinite()) return std::nullopt;
    Rational slack = m.radius - d.value();
    if (!best || slack < *best) best = slack;
  }
  if (!best || sgn(*best) < 0) return std::nullopt;
  return best;
}

Verdict refuted(std::string justification, RefutationWitness w, unsigned depth) {
  Verdict v;
  v.status = Verdict::Status::Refuted;
  v.justification = std::move(justification);
  v.witness = std::move(w);
  v.depth = depth;
  return v;
}

Verdict holds(std::string justification, unsigned depth = 0) {
  Verdict v;
  v.status = Verdict::Status::Holds;
  v.justification = std::move(justification);
  v.depth = depth;
  return v;
}

Verdict unknown(std::string justification, unsigned depth) {
  Verdict v;
  v.status = Verdict::Status::Unknown;
  v.justification = std::move(justification);
  v.depth = depth;
  return v;
}

}  // namespace

FormalBall make_ball(PointId center, const Rational& radius) {
  if (sgn(radius) < 0) throw std::domain_error("formal ball radius must be non-negative");
  return {center, radius};
}

BallLiteral literal(const Space& space, const FormalBall& b) { return {space.name(b.center), b.radius}; }

FormalBall resolve(const Space& space, const BallLiteral& b) { return make_ball(space.point(b.center), b.radius); }

std::string to_string(const BallLiteral& b) { return "(" + b.center + ", " + to_string(b.radius) + ")"; }

BallLiteral parse_ball(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("ball literal must look like (point, p/q): '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  const auto comma = s.rfind(',');
  if (comma == std::string_view::npos) throw ParseError("ball literal is missing a radius: '" + std::string(text) + "'");
  const std::string_view center = trim(s.substr(0, comma));
  const std::string_view radius = trim(s.substr(comma + 1));
  if (center.empty()) throw ParseError("ball literal is missing a centre: '" + std::string(text) + "'");
  Rational r = parse_rational(radius);
  if (sgn(r) < 0) throw ParseError("ball radius must be non-negative: '" + std::string(text) + "'");
  return {std::string(center), r};
}

bool leq_dplus(const Space& space, const FormalBall& a, const FormalBall& b) {
  if (a.radius < b.radius) return false;
  return dist_le(space.dist(a.center, b.center), Rational(a.radius - b.radius));
}

bool leq_dplus(const Space& space, const BallLiteral& a, const BallLiteral& b) {
  if (a.radius < b.radius) return false;
  return dist_le(space.dist(a.center, b.center), Rational(a.radius - b.radius));
}

ExtReal dplus(const Space& space, const FormalBall& a, const FormalBall& b) {
  return monus(space.dist(a.center, b.center) + ExtReal(b.radius), ExtReal(a.radius));
}

bool prec(const Space& space, const FormalBall& a, const FormalBall& b) {
  return dist_lt(space.dist(a.center, b.center), Rational(a.radius - b.radius));
}

// ---------------------------------------------------------------------------
// Scripted families

ScriptedFamily ScriptedFamily::descending(const Rational& s) { return {Kind::Descending, {s}}; }
ScriptedFamily ScriptedFamily::unbounded(const Rational& s) { return {Kind::Unbounded, {s}}; }
ScriptedFamily ScriptedFamily::from_left(const Rational& y, const Rational& s) { return {Kind::FromLeft, {y, s}}; }

std::string ScriptedFamily::description() const {
  switch (kind_) {
    case Kind::Descending: return "(2^-m, 2^-m + " + to_string(params_[0]) + ")";
    case Kind::Unbounded: return "(m, " + to_string(params_[0]) + ")";
    case Kind::FromLeft:
      return "(" + to_string(params_[0]) + " - 2^-(m+1), " + to_string(params_[1]) + " + 2^-(m+1))";
  }
  return "?";
}

SpaceKind ScriptedFamily::space_kind() const {
  switch (kind_) {
    case Kind::Descending: return SpaceKind::RemarkNonStandard;
    case Kind::Unbounded: return SpaceKind::DRealGrid;
    case Kind::FromLeft: return SpaceKind::SorgenfreyGrid;
  }
  return SpaceKind::FiniteTable;
}

BallLiteral ScriptedFamily::member(unsigned m) const {
  switch (kind_) {
    case Kind::Descending: return {to_string(dyadic(m)), Rational(dyadic(m) + params_[0])};
    case Kind::Unbounded: return {std::to_string(m), params_[0]};
    case Kind::FromLeft:
      return {to_string(Rational(params_[0] - dyadic(m + 1))), Rational(params_[1] + dyadic(m + 1))};
  }
  return {};
}

std::vector<BallLiteral> ScriptedFamily::truncation(unsigned depth) const {
  std::vector<BallLiteral> out;
  for (unsigned m = 0; m <= depth; ++m) out.push_back(member(m));
  return out;
}

bool ScriptedFamily::is_upper_bound(const Coord& center, const Rational& radius) const {
  switch (kind_) {
    case Kind::Descending: return !center.infinite && center.value + radius <= params_[0];
    case Kind::Unbounded: return center.infinite && radius <= params_[0];
    case Kind::FromLeft:
      return !center.infinite && center.value >= params_[0] && center.value + radius <= params_[0] + params_[1];
  }
  return false;
}

BallLiteral ScriptedFamily::supremum() const {
  switch (kind_) {
    case Kind::Descending: return {"0", params_[0]};
    case Kind::Unbounded: return {"inf", params_[0]};
    case Kind::FromLeft: return {to_string(params_[0]), params_[1]};
  }
  return {};
}

ScriptedFamily ScriptedFamily::shifted(const Rational& shift) const {
  std::vector<Rational> p = params_;
  p.back() += shift;
  return {kind_, std::move(p)};
}

std::optional<std::string> truncation_disagreement(const Space& space, const ScriptedFamily& family,
                                                   std::span<const Rational> radii, unsigned depth) {
  if (space.kind() != family.space_kind()) {
    return "family " + family.description() + " is not written for a " + std::string(kind_name(space.kind())) +
           " space";
  }
  const auto members = family.truncation(std::max(depth, kScriptedHorizon));
  for (const auto& m : members) {
    if (!space.coord_of(m.center)) return "member centre " + m.center + " is outside the ambient space";
  }
  const auto head = members.begin() + depth + 1;
  for (PointId z = 0; z < space.size(); ++z) {
    const Coord cz = *space.coord(z);
    for (const auto& u : radii) {
      const BallLiteral candidate{space.name(z), u};
      const auto below = [&](const BallLiteral& m) { return leq_dplus(space, m, candidate); };
      if (family.is_upper_bound(cz, u)) {
        if (!std::all_of(members.begin(), head, below)) {
          return "predicate accepts " + to_string(candidate) + " but a member is not below it";
        }
      } else if (std::all_of(members.begin(), members.end(), below)) {
        return "predicate rejects " + to_string(candidate) + " but no member up to index " +
               std::to_string(members.size() - 1) + " shows it";
      }
    }
  }
  return std::nullopt;
}

std::string_view shape_name(FamilyShape s) {
  switch (s) {
    case FamilyShape::Singleton: return "singleton";
    case FamilyShape::EpsilonChain: return "epsilon-chain";
    case FamilyShape::GridChain: return "grid-chain";
    case FamilyShape::Scripted: return "scripted";
    case FamilyShape::Finite: return "finite";
  }
  return "?";
}

std::string_view status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return "holds";
    case Verdict::Status::Refuted: return "refuted";
    case Verdict::Status::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Way-below

bool has_way_below_oracle(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::DRealGrid:
    case SpaceKind::SorgenfreyGrid:
    case SpaceKind::Poset:
      return true;
    case SpaceKind::FiniteTable:
      return space.is_symmetric();
    default:
      return false;
  }
}

std::optional<bool> way_below_oracle(const Space& space, const FormalBall& a, const FormalBall& b) {
  switch (space.kind()) {
    case SpaceKind::DRealGrid:
      return !space.coord(a.center)->infinite && prec(space, a, b);
    case SpaceKind::SorgenfreyGrid: {
      const Rational x = space.coord(a.center)->value;
      const Rational y = space.coord(b.center)->value;
      return x + a.radius > y + b.radius && x < y;
    }
    case SpaceKind::Poset:
      // On a finite poset every element is way-below itself.
      return space.dist(a.center, b.center).is_zero() && a.radius > b.radius;
    case SpaceKind::FiniteTable:
      if (space.is_symmetric()) return prec(space, a, b);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

namespace {

RefutationWitness singleton_witness(const Space& space, const FormalBall& b) {
  RefutationWitness w;
  w.shape = FamilyShape::Singleton;
  w.members = {literal(space, b)};
  w.sup = literal(space, b);
  return w;
}

RefutationWitness epsilon_witness(const BallLiteral& sup, unsigned depth) {
  RefutationWitness w;
  w.shape = FamilyShape::EpsilonChain;
  for (unsigned n = 0; n <= depth; ++n) w.members.push_back({sup.center, Rational(sup.radius + dyadic(n + 1))});
  w.sup = sup;
  return w;
}

/// The closed-form family behind a gap between < and << in the kinds that
/// have one, when it refutes a << b.
std::optional<ScriptedFamily> gap_family(const Space& space, const FormalBall& a, const FormalBall& b) {
  if (space.kind() == SpaceKind::DRealGrid && space.coord(a.center)->infinite) {
    return ScriptedFamily::unbounded(b.radius);
  }
  if (space.kind() == SpaceKind::SorgenfreyGrid && a.center == b.center) {
    return ScriptedFamily::from_left(space.coord(b.center)->value, b.radius);
  }
  return std::nullopt;
}

std::vector<Rational> replay_radii(const BallLiteral& sup) {
  std::vector<Rational> r = default_probe_radii();
  r.push_back(sup.radius);
  sort_unique(r);
  return r;
}

// No member of a chain converging to a radius-t limit can ever be above
// (x, r) when d(x, member) > r - t.
bool never_dominates(const ExtReal& d, const Rational& r, const Rational& t) { return !dist_le(d, Rational(r - t)); }

struct ChainSearch {
  ChainSearch(const Space& s, const FormalBall& b, unsigned d) : space(s), a(b), depth(d) {}

  const Space& space;
  const FormalBall& a;
  unsigned depth;
  std::size_t budget = 2'000'000;
  std::size_t visited = 0;
  PointId limit = 0;
  Rational t;
  std::vector<PointId> chain;

  bool least_among_grid_bounds() const {
    for (PointId z = 0; z < space.size(); ++z) {
      if (std::find(chain.begin(), chain.end(), z) != chain.end()) continue;
      std::optional<Rational> u;
      bool bounded = true;
      for (std::size_t n = 0; n < chain.size() && bounded; ++n) {
        const ExtReal& d = space.dist(chain[n], z);
        if (d.is_infinite()) {
          bounded = false;
          break;
        }
        Rational slack = t + dyadic(static_cast<unsigned>(n + 1)) - d.value();
        if (!u || slack < *u) u = slack;
      }
      if (!bounded || !u || sgn(*u) < 0) continue;
      if (!dist_le(space.dist(limit, z), Rational(t - *u))) return false;
    }
    return true;
  }

  bool extend() {
    if (++visited > budget) return false;
    const std::size_t n = chain.size();
    if (n == depth + 1) return least_among_grid_bounds();
    const Rational step = dyadic(static_cast<unsigned>(n + 1));
    for (PointId x = 0; x < space.size(); ++x) {
      if (x == limit || std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
      if (!dist_le(space.dist(x, limit), step)) continue;
      if (!never_dominates(space.dist(a.center, x), a.radius, t)) continue;
      if (n > 0 && !dist_le(space.dist(chain.back(), x), step)) continue;
      chain.push_back(x);
      if (extend()) return true;
      chain.pop_back();
      if (visited > budget) return false;
    }
    return false;
  }
};

std::optional<RefutationWitness> search_grid_chains(const Space& space, const FormalBall& a, const FormalBall& b,
                                                    unsigned depth) {
  for (PointId y = 0; y < space.size(); ++y) {
    const ExtReal& to_limit = space.dist(b.center, y);
    if (!dist_le(to_limit, b.radius)) continue;
    const Rational t_max = b.radius - to_limit.value();
    std::vector<Rational> ts{Rational(0), t_max};
    for (unsigned k = 1; k <= depth + 1; ++k) {
      if (dyadic(k) <= t_max) ts.push_back(dyadic(k));
    }
    sort_unique(ts);
    for (const auto& t : ts) {
      ChainSearch search(space, a, depth);
      search.limit = y;
      search.t = t;
      if (search.extend()) {
        RefutationWitness w;
        w.shape = FamilyShape::GridChain;
        for (std::size_t n = 0; n < search.chain.size(); ++n) {
          w.members.push_back({space.name(search.chain[n]), Rational(t + dyadic(static_cast<unsigned>(n + 1)))});
        }
        w.sup = {space.name(y), t};
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict refute_way_below(const Space& space, const FormalBall& a, const FormalBall& b, unsigned depth) {
  if (!leq_dplus(space, a, b)) return refuted("not below", singleton_witness(space, b), depth);
  if (!prec(space, a, b)) return refuted("epsilon chain", epsilon_witness(literal(space, b), depth), depth);
  if (auto w = search_grid_chains(space, a, b, depth)) return refuted("grid chain", std::move(*w), depth);
  return unknown("no refuting family up to depth " + std::to_string(depth), depth);
}

Verdict way_below(const Space& space, const FormalBall& a, const FormalBall& b, unsigned depth) {
  const auto oracle = way_below_oracle(space, a, b);
  if (oracle && *oracle) return holds("closed form for " + std::string(kind_name(space.kind())) + " spaces");
  if (!leq_dplus(space, a, b)) return refuted("not below", singleton_witness(space, b), depth);
  if (!prec(space, a, b)) return refuted("epsilon chain", epsilon_witness(literal(space, b), depth), depth);
  if (oracle) {
    if (auto family = gap_family(space, a, b)) {
      if (!truncation_disagreement(space, *family, replay_radii(family->supremum()), depth)) {
        RefutationWitness w;
        w.shape = FamilyShape::Scripted;
        w.scripted = family;
        w.members = family->truncation(depth);
        w.sup = family->supremum();
        return refuted("closed-form family " + family->description(), std::move(w), depth);
      }
    }
  }
  return refute_way_below(space, a, b, depth);
}

std::optional<std::string> replay_way_below(const Space& space, const BallLiteral& a, const BallLiteral& b,
                                            const RefutationWitness& w) {
  try {
    if (w.members.empty()) return "witness has no members";
    if (w.shape == FamilyShape::Singleton) {
      if (w.members.size() != 1 || !(w.members[0] == b) || !(w.sup == b)) return "singleton witness must be {b}";
      if (leq_dplus(space, a, b)) return "a is below b";
      return std::nullopt;
    }
    if (!leq_dplus(space, b, w.sup)) return "supremum is not above b";
    if (w.shape == FamilyShape::EpsilonChain) {
      for (std::size_t n = 0; n < w.members.size(); ++n) {
        const BallLiteral expected{w.sup.center, Rational(w.sup.radius + dyadic(static_cast<unsigned>(n + 1)))};
        if (!(w.members[n] == expected)) return "member " + std::to_string(n) + " is not on the epsilon chain";
      }
      // (y, t + eps) is above (x, r) iff d(x, y) <= r - t - eps.
      if (dist_lt(space.dist(a.center, w.sup.center), Rational(a.radius - w.sup.radius))) {
        return "some member of the epsilon chain is above a";
      }
      return std::nullopt;
    }
    if (w.shape == FamilyShape::Scripted) {
      if (!w.scripted) return "scripted witness without a family";
      const auto depth = static_cast<unsigned>(w.members.size() - 1);
      if (w.members != w.scripted->truncation(depth)) return "members do not match the scripted family";
      if (!(w.sup == w.scripted->supremum())) return "supremum does not match the scripted family";
      if (auto why = truncation_disagreement(space, *w.scripted, replay_radii(w.sup), depth)) return why;
      for (const auto& m : w.members) {
        if (!never_dominates(space.dist(a.center, m.center), a.radius, w.sup.radius)) return "a member is above a";
      }
      return std::nullopt;
    }
    if (w.shape == FamilyShape::GridChain) {
      const FormalBall sup = resolve(space, w.sup);
      std::vector<PointId> chain;
      for (std::size_t n = 0; n < w.members.size(); ++n) {
        const FormalBall m = resolve(space, w.members[n]);
        if (m.radius != sup.radius + dyadic(static_cast<unsigned>(n + 1))) return "radii are not dyadic offsets";
        if (m.center == sup.center || std::find(chain.begin(), chain.end(), m.center) != chain.end()) {
          return "chain centres must be distinct and differ from the limit";
        }
        if (!leq_dplus(space, m, sup)) return "a member is not below the supremum";
        if (n > 0 && !leq_dplus(space, resolve(space, w.members[n - 1]), m)) return "members are not a chain";
        if (!never_dominates(space.dist(space.point(a.center), m.center), a.radius, sup.radius)) {
          return "a member is above a";
        }
        chain.push_back(m.center);
      }
      const FormalBall resolved_a = resolve(space, a);
      ChainSearch check(space, resolved_a, static_cast<unsigned>(chain.size() - 1));
      check.limit = sup.center;
      check.t = sup.radius;
      check.chain = chain;
      if (!check.least_among_grid_bounds()) return "an in-grid upper bound is not above the supremum";
      return std::nullopt;
    }
    return "shape not valid for way-below";
  } catch (const std::exception& e) {
    return std::string("witness does not evaluate: ") + e.what();
  }
}

// ---------------------------------------------------------------------------
// Standardness

std::vector<Rational> default_candidate_radii(const Space& space, const Rational& sup_radius, const Rational& shift) {
  std::vector<Rational> r = distance_spectrum(space);
  r.push_back(Rational(0));
  r.push_back(sup_radius);
  r.push_back(Rational(sup_radius + shift));
  sort_unique(r);
  return r;
}

bool is_directed(const Space& space, std::span<const FormalBall> family) {
  if (family.empty()) return false;
  for (const auto& p : family) {
    for (const auto& q : family) {
      const bool bounded = std::any_of(family.begin(), family.end(), [&](const FormalBall& m) {
        return leq_dplus(space, p, m) && leq_dplus(space, q, m);
      });
      if (!bounded) return false;
    }
  }
  return true;
}

std::optional<FormalBall> grid_supremum(const Space& space, std::span<const FormalBall> family) {
  std::vector<std::optional<Rational>> bound(space.size());
  for (PointId z = 0; z < space.size(); ++z) bound[z] = upper_radius(space, family, z);
  for (PointId y = 0; y < space.size(); ++y) {
    if (!bound[y]) continue;
    bool least = true;
    for (PointId z = 0; z < space.size() && least; ++z) {
      if (bound[z]) least = dist_le(space.dist(y, z), Rational(*bound[y] - *bound[z]));
    }
    if (least) return FormalBall{y, *bound[y]};
  }
  return std::nullopt;
}

namespace {

Verdict probe_scripted(const Space& space, const ScriptedFamily& family, const BallLiteral& known_sup,
                       const Rational& shift, std::vector<Rational> radii, unsigned depth) {
  const auto sup_coord = space.coord_of(known_sup.center);
  if (!sup_coord || !family.is_upper_bound(*sup_coord, known_sup.radius)) {
    throw InvalidSup(to_string(known_sup) + " is not an upper bound of " + family.description());
  }
  if (auto why = truncation_disagreement(space, family, radii, depth)) {
    return unknown("upper-bound predicate not confirmed: " + *why, depth);
  }
  for (PointId z = 0; z < space.size(); ++z) {
    for (const auto& u : radii) {
      const BallLiteral c{space.name(z), u};
      if (family.is_upper_bound(*space.coord(z), u) && !leq_dplus(space, known_sup, c)) {
        throw InvalidSup(to_string(known_sup) + " is not least: " + to_string(c) + " is a smaller upper bound");
      }
    }
  }
  if (sgn(shift) == 0) return holds("zero shift");
  const ScriptedFamily moved = family.shifted(shift);
  if (auto why = truncation_disagreement(space, moved, radii, depth)) {
    return unknown("shifted upper-bound predicate not confirmed: " + *why, depth);
  }
  const BallLiteral target{known_sup.center, Rational(known_sup.radius + shift)};
  std::sort(radii.begin(), radii.end(), [](const Rational& x, const Rational& y) { return x > y; });
  for (PointId z = 0; z < space.size(); ++z) {
    for (const auto& u : radii) {
      const BallLiteral c{space.name(z), u};
      if (moved.is_upper_bound(*space.coord(z), u) && !leq_dplus(space, target, c)) {
        RefutationWitness w;
        w.shape = FamilyShape::Scripted;
        w.scripted = moved;
        w.members = moved.truncation(depth);
        w.sup = target;
        w.failing = c;
        return refuted("upper bound of the shifted family not above the shifted supremum", std::move(w), depth);
      }
    }
  }
  return unknown("no failing upper bound among the candidates", depth);
}

Verdict probe_finite(const Space& space, const std::vector<FormalBall>& family, const BallLiteral& known_sup,
                     const Rational& shift) {
  if (!is_directed(space, family)) throw std::invalid_argument("family is not directed");
  const FormalBall sup = resolve(space, known_sup);
  for (const auto& m : family) {
    if (!leq_dplus(space, m, sup)) throw InvalidSup(to_string(known_sup) + " is not an upper bound of the family");
  }
  const auto lub = grid_supremum(space, family);
  if (!lub || !(*lub == sup)) throw InvalidSup(to_string(known_sup) + " is not the least upper bound");
  if (sgn(shift) == 0) return holds("zero shift");
  std::vector<FormalBall> moved = family;
  for (auto& m : moved) m.radius += shift;
  const FormalBall target{sup.center, Rational(sup.radius + shift)};
  // Every upper bound centred at z has radius at most upper_radius(z).
  for (PointId z = 0; z < space.size(); ++z) {
    const auto u = upper_radius(space, moved, z);
    if (!u) continue;
    if (!leq_dplus(space, target, FormalBall{z, *u})) {
      RefutationWitness w;
      w.shape = FamilyShape::Finite;
      for (const auto& m : moved) w.members.push_back(literal(space, m));
      w.sup = literal(space, target);
      w.failing = BallLiteral{space.name(z), *u};
      return refuted("upper bound of the shifted family not above the shifted supremum", std::move(w), 0);
    }
  }
  return holds("every carrier upper bound of the shifted family is above the shifted supremum");
}

}  // namespace

Verdict standardness_probe(const Space& space, const DirectedFamily& family, const BallLiteral& known_sup,
                           const Rational& shift, std::span<const Rational> candidate_radii, unsigned depth) {
  if (sgn(shift) < 0) throw std::domain_error("shift must be non-negative");
  if (const auto* scripted = std::get_if<ScriptedFamily>(&family)) {
    std::vector<Rational> radii(candidate_radii.begin(), candidate_radii.end());
    if (radii.empty()) radii = default_candidate_radii(space, known_sup.radius, shift);
    sort_unique(radii);
    return probe_scripted(space, *scripted, known_sup, shift, std::move(radii), depth);
  }
  return probe_finite(space, std::get<std::vector<FormalBall>>(family), known_sup, shift);
}

std::optional<std::string> replay_standardness(const Space& space, const DirectedFamily& family,
                                               const BallLiteral& known_sup, const Rational& shift,
                                               const RefutationWitness& w) {
  try {
    if (!w.failing) return "witness has no failing upper bound";
    const BallLiteral target{known_sup.center, Rational(known_sup.radius + shift)};
    if (!(w.sup == target)) return "witness supremum is not the shifted known supremum";
    if (leq_dplus(space, target, *w.failing)) return "the failing ball is above the shifted supremum";
    if (const auto* scripted = std::get_if<ScriptedFamily>(&family)) {
      const ScriptedFamily moved = scripted->shifted(shift);
      if (!w.scripted || !(*w.scripted == moved)) return "witness family is not the shifted family";
      const auto coord = space.coord_of(w.failing->center);
      if (!coord || !moved.is_upper_bound(*coord, w.failing->radius)) return "failing ball is not an upper bound";
      std::vector<Rational> radii = default_candidate_radii(space, known_sup.radius, shift);
      radii.push_back(w.failing->radius);
      sort_unique(radii);
      if (auto why = truncation_disagreement(space, moved, radii, static_cast<unsigned>(w.members.size() - 1))) {
        return why;
      }
      return std::nullopt;
    }
    const FormalBall failing = resolve(space, *w.failing);
    for (const auto& m : std::get<std::vector<FormalBall>>(family)) {
      if (!leq_dplus(space, FormalBall{m.center, Rational(m.radius + shift)}, failing)) {
        return "failing ball is not an upper bound of the shifted family";
      }
    }
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("witness does not evaluate: ") + e.what();
  }
}

// ---------------------------------------------------------------------------
// v-relation, centre points and the Smyth probe

ExtReal v_relation(const Space& space, PointId x, PointId y) {
  switch (space.kind()) {
    case SpaceKind::DRealGrid:
      if (space.coord(x)->infinite) return ExtReal::infinity();
      return space.dist(x, y);
    case SpaceKind::SorgenfreyGrid: {
      const Rational cx = space.coord(x)->value;
      const Rational cy = space.coord(y)->value;
      return cx < cy ? ExtReal(Rational(cy - cx)) : ExtReal::infinity();
    }
    case SpaceKind::Poset:
      return space.dist(x, y);
    case SpaceKind::FiniteTable:
      if (space.is_symmetric()) return space.dist(x, y);
      break;
    default:
      break;
  }
  throw NoOracle("no closed-form way-below relation for " + std::string(kind_name(space.kind())) + " spaces");
}

bool center_point_check(const Space& space, PointId x) {
  for (PointId y = 0; y < space.size(); ++y) {
    if (v_relation(space, x, y) != space.dist(x, y)) return false;
  }
  return true;
}

std::vector<PointId> center_points(const Space& space) {
  std::vector<PointId> out;
  for (PointId x = 0; x < space.size(); ++x) {
    if (center_point_check(space, x)) out.push_back(x);
  }
  return out;
}

std::vector<Rational> default_probe_radii() {
  return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(4)};
}

SmythReport smyth_probe(const Space& space, std::uint64_t sample_budget, std::uint64_t seed,
                        std::span<const Rational> radii) {
  if (!has_way_below_oracle(space)) {
    throw NoOracle("no closed-form way-below relation for " + std::string(kind_name(space.kind())) + " spaces");
  }
  std::vector<Rational> rs(radii.begin(), radii.end());
  if (rs.empty()) rs = default_probe_radii();
  SmythReport report;
  report.seed = seed;
  for (PointId x = 0; x < space.size(); ++x) {
    if (!center_point_check(space, x)) report.non_centers.push_back(x);
  }
  std::vector<FormalBall> balls;
  for (PointId x = 0; x < space.size(); ++x) {
    for (const auto& r : rs) balls.push_back({x, r});
  }
  auto check = [&](const FormalBall& a, const FormalBall& b) {
    ++report.pairs_checked;
    if (prec(space, a, b) && !*way_below_oracle(space, a, b)) report.gaps.emplace_back(a, b);
  };
  const auto total = static_cast<std::uint64_t>(balls.size()) * balls.size();
  if (total <= sample_budget) {
    for (const auto& a : balls) {
      for (const auto& b : balls) check(a, b);
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, balls.size() - 1);
    for (std::uint64_t k = 0; k < sample_budget; ++k) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      check(balls[i], balls[j]);
    }
  }
  return report;
}

std::vector<Rational> dyadic_radii(unsigned depth, unsigned top) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned k = 1; k <= depth; ++k) out.push_back(dyadic(k));
  for (unsigned k = 1; k <= top; ++k) out.emplace_back(k);
  sort_unique(out);
  return out;
}

OrderLawReport check_order_laws(const Space& space, std::span<const Rational> radii,
                                std::span<const Rational> shifts) {
  OrderLawReport report;
  std::vector<FormalBall> balls;
  for (PointId x = 0; x < space.size(); ++x) {
    for (const auto& r : radii) balls.push_back(make_ball(x, r));
  }
  const std::size_t m = balls.size();
  report.balls = m;
  std::vector<char> le(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) le[i * m + j] = leq_dplus(space, balls[i], balls[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!le[i * m + i]) report.violations.push_back({"reflexivity", {balls[i]}, {}});
    for (std::size_t j = i + 1; j < m; ++j) {
      if (le[i * m + j] && le[j * m + i]) report.violations.push_back({"antisymmetry", {balls[i], balls[j]}, {}});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!le[i * m + j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (le[j * m + k] && !le[i * m + k]) {
          report.violations.push_back({"transitivity", {balls[i], balls[j], balls[k]}, {}});
        }
      }
    }
  }
  for (const auto& a : shifts) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const FormalBall p{balls[i].center, Rational(balls[i].radius + a)};
        const FormalBall q{balls[j].center, Rational(balls[j].radius + a)};
        if (leq_dplus(space, p, q) != (le[i * m + j] != 0)) {
          report.violations.push_back({"standard", {balls[i], balls[j]}, a});
        }
      }
    }
  }
  return report;
}

}  // namespace qm
