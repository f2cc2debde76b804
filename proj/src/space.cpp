#include "qm/space.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qm {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void check_unique(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw InvalidSpace("duplicate point '" + n + "'");
  }
}

ExtReal abs_diff(const Rational& a, const Rational& b) { return ExtReal(Rational(abs(a - b))); }

}  // namespace

std::string_view kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::FiniteTable: return "table";
    case SpaceKind::DRealGrid: return "dreal";
    case SpaceKind::SorgenfreyGrid: return "sorgenfrey";
    case SpaceKind::Poset: return "poset";
    case SpaceKind::RemarkNonStandard: return "remark";
    case SpaceKind::NgNonStandardWB: return "ng-nonstd";
  }
  return "?";
}

std::string to_string(const Coord& c) { return c.infinite ? "inf" : to_string(c.value); }

Space Space::finite_table(std::vector<std::string> names, std::vector<std::vector<ExtReal>> dist) {
  Space s;
  s.kind_ = SpaceKind::FiniteTable;
  if (dist.size() != names.size()) throw InvalidSpace("distance table must have one row per point");
  check_unique(names);
  s.names_ = std::move(names);
  for (auto& row : dist) {
    if (row.size() != s.names_.size()) throw InvalidSpace("distance table row has wrong length");
    for (auto& v : row) s.table_.push_back(std::move(v));
  }
  return s;
}

Space Space::dreal_grid(const std::vector<ExtReal>& values) {
  Space s;
  s.kind_ = SpaceKind::DRealGrid;
  for (const auto& v : values) {
    s.grid_.push_back(v.is_infinite() ? Coord{Rational(0), true} : Coord{v.value(), false});
    s.names_.push_back(v.to_string());
  }
  check_unique(s.names_);
  s.tabulate();
  return s;
}

Space Space::sorgenfrey_grid(const std::vector<Rational>& values) {
  Space s;
  s.kind_ = SpaceKind::SorgenfreyGrid;
  for (const auto& v : values) {
    s.grid_.push_back({v, false});
    s.names_.push_back(to_string(v));
  }
  check_unique(s.names_);
  s.tabulate();
  return s;
}

Space Space::poset(const FinitePoset& p) {
  Space s;
  s.kind_ = SpaceKind::Poset;
  s.names_ = p.names();
  s.poset_ = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      s.table_.push_back(p.leq(i, j) ? ExtReal{} : ExtReal::infinity());
    }
  }
  return s;
}

Space Space::remark_nonstandard(const Rational& a, const std::vector<Rational>& values) {
  if (sgn(a) <= 0) throw InvalidSpace("remark space needs a > 0");
  Space s;
  s.kind_ = SpaceKind::RemarkNonStandard;
  s.params_ = {a};
  for (const auto& v : values) {
    if (v < kZero || v > kOne) throw InvalidSpace("remark space points must lie in [0, 1]");
    s.grid_.push_back({v, false});
    s.names_.push_back(to_string(v));
  }
  check_unique(s.names_);
  s.tabulate();
  return s;
}

Space Space::ng_nonstandard(const Rational& a, const Rational& b, const Rational& c,
                            const std::vector<Rational>& values) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InvalidSpace("ng-nonstd space needs a, b > 0");
  if (sgn(c) < 0 || c > a + b) throw InvalidSpace("ng-nonstd space needs 0 <= c <= a + b");
  Space s;
  s.kind_ = SpaceKind::NgNonStandardWB;
  s.params_ = {a, b, c};
  s.names_ = {"-2", "-1"};
  bool has_one = false;
  for (const auto& v : values) {
    if (v <= kZero || v > kOne) throw InvalidSpace("ng-nonstd grid points must lie in (0, 1]");
    has_one = has_one || v == kOne;
    s.grid_.push_back({v, false});
    s.names_.push_back(to_string(v));
  }
  if (!has_one) throw InvalidSpace("ng-nonstd grid must contain 1");
  check_unique(s.names_);
  s.tabulate();
  return s;
}

void Space::tabulate() {
  const std::size_t n = size();
  table_.clear();
  table_.reserve(n * n);
  std::vector<Coord> coords;
  for (PointId i = 0; i < n; ++i) coords.push_back(*coord(i));
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = 0; j < n; ++j) table_.push_back(*formula(coords[i], coords[j]));
  }
}

std::optional<Coord> Space::coord(PointId x) const {
  if (!is_generator()) return std::nullopt;
  return coord_of(names_.at(x));
}

std::optional<Coord> Space::coord_of(std::string_view name) const {
  if (!is_generator()) return std::nullopt;
  if (name == "inf") {
    if (kind_ == SpaceKind::DRealGrid) return Coord{Rational(0), true};
    return std::nullopt;
  }
  Rational v;
  try {
    v = parse_rational(name);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  switch (kind_) {
    case SpaceKind::DRealGrid:
      if (sgn(v) < 0) return std::nullopt;
      break;
    case SpaceKind::SorgenfreyGrid:
      break;
    case SpaceKind::RemarkNonStandard:
      if (v < kZero || v > kOne) return std::nullopt;
      break;
    case SpaceKind::NgNonStandardWB:
      if (v != Rational(-2) && v != Rational(-1) && (v <= kZero || v > kOne)) return std::nullopt;
      break;
    default:
      return std::nullopt;
  }
  return Coord{v, false};
}

std::optional<ExtReal> Space::formula(const Coord& x, const Coord& y) const {
  switch (kind_) {
    case SpaceKind::DRealGrid:
      if (x.infinite) return y.infinite ? ExtReal{} : ExtReal::infinity();
      if (y.infinite) return ExtReal{};
      return x.value > y.value ? ExtReal(Rational(x.value - y.value)) : ExtReal{};
    case SpaceKind::SorgenfreyGrid:
      return x.value > y.value ? ExtReal::infinity() : ExtReal(Rational(y.value - x.value));
    case SpaceKind::RemarkNonStandard:
      if (x.value == y.value) return ExtReal{};
      if (sgn(y.value) == 0) return ExtReal{};
      if (sgn(x.value) == 0) return ExtReal(params_[0]);
      return abs_diff(x.value, y.value);
    case SpaceKind::NgNonStandardWB: {
      const Rational& a = params_[0];
      const Rational& b = params_[1];
      const Rational& c = params_[2];
      if (x.value == y.value) return ExtReal{};
      if (x.value > y.value) return ExtReal::infinity();
      const bool x_special = sgn(x.value) < 0;
      if (!x_special) return ExtReal(Rational(y.value - x.value));
      if (y.value == Rational(-1)) return ExtReal(b);  // only x = -2 reaches here
      if (y.value == kOne) return ExtReal(x.value == Rational(-1) ? a : c);
      return ExtReal::infinity();
    }
    default:
      return std::nullopt;
  }
}

std::optional<PointId> Space::find(std::string_view name) const {
  for (PointId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  // Generator points may be written non-canonically, e.g. "2/4".
  if (auto c = coord_of(name)) {
    const std::string canonical = to_string(*c);
    for (PointId i = 0; i < names_.size(); ++i) {
      if (names_[i] == canonical) return i;
    }
  }
  return std::nullopt;
}

PointId Space::point(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw UnknownPoint("unknown point '" + std::string(name) + "'");
}

ExtReal Space::dist(std::string_view x, std::string_view y) const {
  const auto px = find(x);
  const auto py = find(y);
  if (px && py) return dist(*px, *py);
  if (is_generator()) {
    const auto cx = coord_of(x);
    const auto cy = coord_of(y);
    if (cx && cy) return *formula(*cx, *cy);
  }
  throw UnknownPoint("unknown point '" + std::string(px ? y : x) + "'");
}

bool Space::is_symmetric() const {
  for (PointId i = 0; i < size(); ++i) {
    for (PointId j = i + 1; j < size(); ++j) {
      if (dist(i, j) != dist(j, i)) return false;
    }
  }
  return true;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Reflexivity: return "reflexivity";
    case Axiom::Triangle: return "triangle";
    case Axiom::Separation: return "separation";
  }
  return "?";
}

AxiomReport check_axioms(const Space& space, std::uint64_t sample_budget, std::uint64_t seed) {
  AxiomReport report;
  report.seed = seed;
  const std::size_t n = space.size();
  for (PointId x = 0; x < n; ++x) {
    if (!space.dist(x, x).is_zero()) {
      report.violations.push_back({Axiom::Reflexivity, {x}, space.dist(x, x), ExtReal{}});
    }
  }
  auto triangle = [&](PointId x, PointId y, PointId z) {
    ++report.triples_checked;
    const ExtReal via = space.dist(x, y) + space.dist(y, z);
    if (space.dist(x, z) > via) report.violations.push_back({Axiom::Triangle, {x, y, z}, space.dist(x, z), via});
  };
  const auto cube = static_cast<std::uint64_t>(n) * n * n;
  if (cube <= sample_budget) {
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) triangle(x, y, z);
      }
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<PointId> pick(0, n - 1);
    for (std::uint64_t k = 0; k < sample_budget; ++k) {
      const PointId x = pick(rng);
      const PointId y = pick(rng);
      const PointId z = pick(rng);
      triangle(x, y, z);
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = x + 1; y < n; ++y) {
      if (space.dist(x, y).is_zero() && space.dist(y, x).is_zero()) {
        report.violations.push_back({Axiom::Separation, {x, y}, ExtReal{}, ExtReal{}});
      }
    }
  }
  return report;
}

bool specialization_leq(const Space& space, PointId x, PointId y) {
  if (x >= space.size() || y >= space.size()) throw UnknownPoint("point index out of range");
  return space.dist(x, y).is_zero();
}

Relation specialization_order(const Space& space) {
  Relation r(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) r.set(x, y, space.dist(x, y).is_zero());
  }
  return r;
}

Space symmetrize(const Space& space) {
  std::vector<std::vector<ExtReal>> table(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) table[x].push_back(max(space.dist(x, y), space.dist(y, x)));
  }
  return Space::finite_table(space.names(), std::move(table));
}

std::vector<Rational> distance_spectrum(const Space& space) {
  std::vector<Rational> out;
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = 0; y < space.size(); ++y) {
      if (space.dist(x, y).is_finite()) out.push_back(space.dist(x, y).value());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qm
