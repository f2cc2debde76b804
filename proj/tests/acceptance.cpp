// Acceptance checks: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "oracles.hpp"
#include "qm/balls.hpp"
#include "qm/lipschitz.hpp"
#include "qm/posets.hpp"
#include "qm/qideal.hpp"
#include "qm/space.hpp"

using oracle::q;
using qm::BallLiteral;
using qm::ExtReal;
using qm::FinitePoset;
using qm::FormalBall;
using qm::LscFunction;
using qm::OpenSet;
using qm::PointId;
using qm::Rational;
using qm::Space;

namespace {

const ExtReal inf = ExtReal::infinity();

/// Collects the first few failure notes of a criterion.
class Check {
 public:
  void require(bool ok, const std::string& note) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << note;
  }
  bool pass() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed: " << notes_.str();
    return out.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::ostringstream notes_;
};

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v) out.push_back(q(a, b));
  return out;
}

std::vector<Rational> steps(long count, long den, long start = 0) {
  std::vector<Rational> out;
  for (long j = 0; j < count; ++j) out.push_back(q(start + j, den));
  return out;
}

std::vector<ExtReal> ext(const std::vector<Rational>& v, bool with_inf) {
  std::vector<ExtReal> out(v.begin(), v.end());
  if (with_inf) out.push_back(inf);
  return out;
}

std::vector<Rational> ng_grid(unsigned k) {
  std::vector<Rational> out;
  for (unsigned n = 1; n <= k; ++n) out.push_back(Rational(1 - qm::dyadic(n)));
  out.push_back(q(1));
  return out;
}

std::string names(const Space& s, const std::vector<PointId>& pts) {
  std::string out;
  for (auto p : pts) out += (out.empty() ? "" : ", ") + s.name(p);
  return out;
}

Space dreal_points(std::initializer_list<long> v, bool with_inf) {
  std::vector<Rational> r;
  for (long x : v) r.push_back(q(x));
  return Space::dreal_grid(ext(r, with_inf));
}

bool leq(const LscFunction& f, const LscFunction& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

// 1
Check axioms() {
  Check c;
  std::mt19937_64 rng(101);
  std::vector<Space> spaces;
  spaces.push_back(Space::dreal_grid(ext(steps(11, 4), true)));
  spaces.push_back(Space::dreal_grid(ext(steps(12, 3), false)));
  spaces.push_back(Space::sorgenfrey_grid(steps(12, 2, -5)));
  spaces.push_back(Space::poset(FinitePoset::chain(12)));
  spaces.push_back(Space::poset(FinitePoset::antichain(12)));
  spaces.push_back(Space::poset(FinitePoset::powerset(3)));
  for (std::size_t n = 1; n <= 12; ++n) spaces.push_back(Space::poset(oracle::random_poset(rng, n)));
  spaces.push_back(Space::remark_nonstandard(q(1), steps(12, 11)));
  spaces.push_back(Space::remark_nonstandard(q(3), steps(12, 11)));
  spaces.push_back(Space::ng_nonstandard(q(1), q(1), q(1), ng_grid(9)));
  spaces.push_back(Space::ng_nonstandard(q(1), q(2), q(3), ng_grid(9)));
  spaces.push_back(Space::ng_nonstandard(q(2), q(1, 2), q(0), ng_grid(5)));
  for (const auto& s : spaces) {
    const auto r = qm::check_axioms(s);
    c.require(s.size() <= 12 && r.exhaustive && r.pass(),
              std::string(qm::kind_name(s.kind())) + " space of " + std::to_string(s.size()) + " points");
  }
  const Space remark = Space::remark_nonstandard(q(1, 2), {q(0), q(1, 10), q(1)});
  const auto r = qm::check_axioms(remark);
  const bool witness = !r.violations.empty() && r.violations[0].axiom == qm::Axiom::Triangle &&
                       names(remark, r.violations[0].witness) == "1/10, 0, 1";
  c.require(witness, "remark a=1/2 witness");
  c.require(!r.violations.empty() && r.violations[0].lhs == ExtReal(q(9, 10)) &&
                r.violations[0].rhs == ExtReal(q(1, 2)),
            "remark a=1/2 values");
  return c;
}

// 2
Check order_laws() {
  Check c;
  std::mt19937_64 rng(102);
  std::vector<Space> spaces;
  spaces.push_back(Space::dreal_grid(ext(steps(9, 2), true)));
  spaces.push_back(Space::dreal_grid(ext(steps(10, 4), false)));
  spaces.push_back(Space::sorgenfrey_grid(steps(10, 4)));
  spaces.push_back(Space::poset(FinitePoset::powerset(3)));
  spaces.push_back(Space::poset(oracle::random_poset(rng, 10)));
  spaces.push_back(Space::remark_nonstandard(q(1), steps(10, 9)));
  spaces.push_back(Space::remark_nonstandard(q(2), steps(10, 9)));
  spaces.push_back(Space::ng_nonstandard(q(1), q(1), q(1), ng_grid(7)));
  spaces.push_back(oracle::metric_line(10));
  spaces.push_back(oracle::random_quasi_metric(rng, 10, oracle::dyadic_pool(2, 2, true)));
  const std::vector<Rational> shifts{q(1, 4), q(1), q(3)};
  for (unsigned depth = 0; depth <= 5; ++depth) {
    const auto radii = qm::dyadic_radii(depth, 3);
    for (const auto& s : spaces) {
      const auto r = qm::check_order_laws(s, radii, shifts);
      std::string note = std::string(qm::kind_name(s.kind())) + " depth " + std::to_string(depth);
      if (!r.pass()) note += ": " + r.violations[0].law;
      c.require(s.size() <= 10 && r.pass() && r.balls == s.size() * radii.size(), note);
    }
  }
  return c;
}

// 3
Check remark_nonstandard() {
  Check c;
  const Space remark = Space::remark_nonstandard(q(1), {q(0), q(1, 3), q(2, 3), q(1)});
  const auto family = qm::ScriptedFamily::descending(q(0));
  const BallLiteral sup{"0", q(0)};
  const auto v = qm::standardness_probe(remark, family, sup, q(1));
  c.require(v.refuted() && v.witness && v.witness->failing, "probe refutes");
  if (!v.refuted() || !v.witness || !v.witness->failing) return c;
  const BallLiteral w = *v.witness->failing;
  c.require(w == BallLiteral{"1/3", q(2, 3)}, "witness is (1/3, 2/3), got " + qm::to_string(w));
  const Rational x = remark.coord_of(w.center)->value;
  c.require(x + w.radius <= q(1), "x + r <= 1");
  c.require(!qm::leq_dplus(remark, BallLiteral{"0", q(1)}, w), "(0, 1) not below the witness");
  c.require(family.shifted(q(1)).is_upper_bound({x, false}, w.radius), "witness bounds the shifted family");
  c.require(!qm::replay_standardness(remark, family, sup, q(1), *v.witness), "witness replays");
  return c;
}

// 4
Check gaps() {
  Check c;
  const Space sorg = Space::sorgenfrey_grid(steps(4, 1));
  const FormalBall a{sorg.point("0"), q(3)};
  const FormalBall b{sorg.point("0"), q(1)};
  const auto v = qm::way_below(sorg, a, b);
  c.require(qm::prec(sorg, a, b) && v.refuted(), "Sorgenfrey ((0,3),(0,1))");
  c.require(v.refuted() && !qm::replay_way_below(sorg, qm::literal(sorg, a), qm::literal(sorg, b), *v.witness),
            "Sorgenfrey witness replays");

  for (const auto& d : {Space::dreal_grid({ExtReal(0), ExtReal(q(1, 2)), ExtReal(1), inf}),
                        dreal_points({0, 1, 2, 3}, true)}) {
    const auto report = qm::smyth_probe(d);
    c.require(!report.gaps.empty(), "DReal with inf has gaps");
    const PointId top = d.point("inf");
    for (const auto& [x, y] : report.gaps) c.require(x.center == top && y.center == top, "gap away from inf");
    for (PointId x = 0; x < d.size(); ++x) {
      for (PointId y = 0; y < d.size(); ++y) {
        for (const auto& r : qm::default_probe_radii()) {
          for (const auto& s : qm::default_probe_radii()) {
            const FormalBall p{x, r};
            const FormalBall t{y, s};
            if (!qm::prec(d, p, t)) continue;
            const auto w = qm::way_below(d, p, t);
            c.require(w.refuted() == (x == top), "gap iff centre inf");
            if (w.refuted()) {
              c.require(!qm::replay_way_below(d, qm::literal(d, p), qm::literal(d, t), *w.witness), "gap replays");
            }
          }
        }
      }
    }
  }

  std::mt19937_64 rng(104);
  std::vector<Space> smyth;
  smyth.push_back(dreal_points({0, 1, 2, 3}, false));
  smyth.push_back(Space::dreal_grid(ext(steps(6, 4), false)));
  smyth.push_back(oracle::metric_line(6));
  for (int i = 0; i < 6; ++i) {
    smyth.push_back(oracle::random_quasi_metric(rng, 3 + i % 4, oracle::dyadic_pool(2, 2, i % 2 == 0), true));
  }
  for (const auto& s : smyth) {
    const auto report = qm::smyth_probe(s);
    c.require(report.gaps.empty() && report.consistent() && report.pairs_checked > 0, "no sampled gap");
  }
  // The refuter, without the closed forms, finds no gap on small metric tables.
  for (int i = 0; i < 3; ++i) {
    const Space s = i == 0 ? oracle::metric_line(3)
                           : oracle::random_quasi_metric(rng, 3, oracle::dyadic_pool(1, 2, false), true);
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y = 0; y < s.size(); ++y) {
        for (const auto& r : {q(0), q(1, 2), q(1), q(2)}) {
          for (const auto& t : {q(0), q(1, 2), q(1)}) {
            const FormalBall p{x, r};
            const FormalBall u{y, t};
            if (qm::prec(s, p, u)) c.require(!qm::refute_way_below(s, p, u).refuted(), "refuter found a gap");
          }
        }
      }
    }
  }
  return c;
}

// 5
Check ng_example() {
  Check c;
  const Space ng = Space::ng_nonstandard(q(1), q(1), q(1), ng_grid(9));
  const FormalBall a{ng.point("-2"), q(3)};
  const FormalBall b{ng.point("-1"), q(1)};
  const auto v = qm::way_below(ng, a, b);
  c.require(!qm::has_way_below_oracle(ng), "no closed form is used");
  c.require(v.refuted() && v.witness && v.witness->members.size() == 9, "(-2,3) << (-1,1) refuted with 9 members");
  if (v.refuted() && v.witness) {
    for (unsigned n = 0; n < v.witness->members.size(); ++n) {
      const Rational e = qm::dyadic(n + 1);
      c.require(v.witness->members[n] == BallLiteral{qm::to_string(Rational(1 - e)), e},
                "member " + std::to_string(n));
    }
    c.require(!qm::replay_way_below(ng, qm::literal(ng, a), qm::literal(ng, b), *v.witness), "witness replays");
  }
  const auto u = qm::way_below(ng, {ng.point("-2"), q(2)}, {ng.point("-1"), q(0)}, 8);
  c.require(u.unknown() && u.depth == 8, "(-2,2) << (-1,0) not refuted at depth 8");
  return c;
}

// 6
Check centers() {
  Check c;
  auto v_equals_d = [](const Space& s, PointId x) {
    for (PointId y = 0; y < s.size(); ++y) {
      if (qm::v_relation(s, x, y) != s.dist(x, y)) return false;
    }
    return true;
  };
  auto check_space = [&](const Space& s, const std::vector<PointId>& expected, const std::string& what) {
    const auto found = qm::center_points(s);
    c.require(found == expected, what + ": got {" + names(s, found) + "}");
    for (PointId x = 0; x < s.size(); ++x) {
      const bool centre = std::find(expected.begin(), expected.end(), x) != expected.end();
      c.require(v_equals_d(s, x) == centre, what + ": v(x,.) = d(x,.) at " + s.name(x));
    }
  };
  const Space d = Space::dreal_grid({ExtReal(0), ExtReal(q(1, 2)), ExtReal(1), inf});
  check_space(d, {0, 1, 2}, "DReal");
  check_space(Space::sorgenfrey_grid(steps(4, 1)), {}, "Sorgenfrey");
  check_space(Space::sorgenfrey_grid(steps(5, 4)), {}, "Sorgenfrey");
  std::mt19937_64 rng(106);
  for (int i = 0; i < 5; ++i) {
    const Space m = i == 0 ? oracle::metric_line(5)
                           : oracle::random_quasi_metric(rng, 2 + i, oracle::dyadic_pool(2, 2, true), true);
    std::vector<PointId> all;
    for (PointId x = 0; x < m.size(); ++x) all.push_back(x);
    check_space(m, all, "metric table");
  }
  return c;
}

// 7
Check envelope_closed_form() {
  Check c;
  const Space line = oracle::metric_line(8);
  const OpenSet u(line, std::vector<PointId>{0, 1});
  const auto chi = qm::scaled_indicator(line, u, ExtReal(4));
  for (const auto& alpha : {q(1, 2), q(1), q(2), q(10)}) {
    const auto g = qm::envelope(line, chi, alpha);
    for (PointId x = 0; x < line.size(); ++x) {
      c.require(g[x] == qm::min(ExtReal(4), qm::dist_to_complement(line, x, u).scaled(alpha)),
                "closed form at alpha " + qm::to_string(alpha));
    }
  }
  std::mt19937_64 rng(107);
  const std::vector<Rational> alphas{q(0), q(1, 2), q(1), q(2), q(4)};
  for (int trial = 0; trial < 100; ++trial) {
    LscFunction f;
    for (PointId x = 0; x < line.size(); ++x) f.emplace_back(oracle::random_rational(rng, 20, 4));
    std::vector<LscFunction> env;
    for (const auto& a : alphas) env.push_back(qm::envelope(line, f, a));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      c.require(leq(env[i], f), "envelope below f");
      for (std::size_t j = i; j < alphas.size(); ++j) c.require(leq(env[i], env[j]), "chain property");
    }
    const auto t = qm::lipschitz_threshold(line, f);
    c.require(t.has_value() && qm::envelope(line, f, *t) == f, "recovery at the threshold");
  }
  return c;
}

// 8
Check complement_distance() {
  Check c;
  std::mt19937_64 rng(108);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const Space s = oracle::random_quasi_metric(rng, n, oracle::dyadic_pool(1, 3, trial % 2 == 0), trial == 3);
      for (const auto& u : oracle::all_open_sets(s)) {
        const auto d = qm::dist_function(s, u);
        for (PointId x = 0; x < n; ++x) {
          c.require(d[x].is_zero() == !u.contains(x), "zero iff outside U");
          ExtReal least = inf;
          for (PointId y = 0; y < n; ++y) {
            c.require(d[x] <= s.dist(x, y) + d[y], "triangle property");
            if (!u.contains(y)) least = qm::min(least, s.dist(x, y));
          }
          c.require(d[x] == least, "equals the minimum over the complement");
        }
      }
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned depth = 1; depth <= 4; ++depth) {
      const Space s = oracle::random_quasi_metric(rng, n, oracle::dyadic_pool(1, 2, true));
      for (const auto& u : oracle::all_open_sets(s)) {
        const oracle::HatFixpoint fix(s, u, depth, 3);
        for (PointId x = 0; x < n; ++x) {
          for (long j = 0; j <= (3L << depth); ++j) {
            const Rational r = q(j, 1L << depth);
            c.require(qm::hat_membership(s, {x, r}, u) == fix.contains(x, r), "hat membership vs fixpoint");
          }
        }
      }
    }
  }
  return c;
}

// 9
Check completions() {
  Check c;
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const auto b = oracle::random_basis(rng, 1 + trial % 6);
    const auto comp = qm::rounded_ideal_completion(b);
    auto enumerated = comp.ideals;
    std::sort(enumerated.begin(), enumerated.end());
    c.require(enumerated == qm::rounded_ideals_from_generators(b), "enumeration equals generator closure");
    c.require(enumerated == oracle::rounded_ideals(b), "enumeration equals the definition");
    // Way-below between image elements against the strict relation carried to the image.
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (!comp.embedding[x] || !comp.embedding[y]) continue;
        const std::size_t i = *comp.embedding[x];
        const std::size_t j = *comp.embedding[y];
        bool carried = false;
        for (std::size_t a = 0; a < b.size(); ++a) {
          for (std::size_t e = 0; e < b.size(); ++e) {
            carried = carried || (comp.embedding[a] == i && comp.embedding[e] == j && b.prec(a, e));
          }
        }
        c.require(oracle::way_below(comp.poset, i, j) == carried, "way-below on the image");
      }
    }
  }
  const auto chain = qm::ideal_completion(FinitePoset::chain(3));
  bool total = chain.poset.size() == 3;
  for (std::size_t i = 0; i < chain.poset.size(); ++i) {
    for (std::size_t j = 0; j < chain.poset.size(); ++j) total = total && (chain.poset.leq(i, j) || chain.poset.leq(j, i));
  }
  c.require(total, "3-chain completion");
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = qm::ideal_completion(FinitePoset::antichain(n));
    bool anti = a.poset.size() == n;
    for (std::size_t i = 0; i < a.poset.size(); ++i) {
      for (std::size_t j = 0; j < a.poset.size(); ++j) anti = anti && (i == j || !a.poset.leq(i, j));
    }
    c.require(anti, std::to_string(n) + "-antichain completion");
  }
  return c;
}

// 10
Check models() {
  Check c;
  std::mt19937_64 rng(110);
  std::vector<Space> spaces;
  spaces.push_back(Space::poset(FinitePoset::chain(2)));
  for (int i = 0; i < 10; ++i) spaces.push_back(Space::poset(oracle::random_poset(rng, 1 + i % 5)));
  spaces.push_back(dreal_points({0, 1, 2}, false));
  for (const auto& s : spaces) {
    const auto m = qm::build_model(s, 5);
    const auto r = qm::quasi_ideal_model_check(m);
    const std::string what = std::string(qm::kind_name(s.kind())) + " of " + std::to_string(s.size());
    c.require(!r.order_violation && r.layering() && r.quasi_ideal.pass() && r.halving_violations.empty(),
              what + ": model clauses");
    c.require(r.longest_chain && *r.longest_chain <= 6, what + ": chain length");
    c.require(r.limit_isomorphic, what + ": limit layer");
    const auto l = qm::limit_layer(m);
    for (PointId x = 0; x < s.size(); ++x) {
      for (PointId y = 0; y < s.size(); ++y) c.require(l.leq(x, y) == s.dist(x, y).is_zero(), what + ": limit order");
    }
  }
  return c;
}

// 11
Check choquet() {
  Check c;
  std::mt19937_64 rng(111);
  std::vector<FinitePoset> posets;
  for (int i = 0; i < 10; ++i) posets.push_back(oracle::random_poset(rng, 1 + i % 5));
  for (const auto& p : posets) {
    const auto s = qm::choquet_exhaustive(p, 4);
    c.require(s.plays > 0 && s.alpha_wins == s.plays, "alpha wins every play");
    c.require(s.intersections_equal == s.plays, "intersections agree");
  }
  return c;
}

// 12
Check radius_law() {
  Check c;
  std::mt19937_64 rng(112);
  std::vector<Space> spaces;
  spaces.push_back(dreal_points({0, 1, 2}, true));
  spaces.push_back(Space::sorgenfrey_grid(steps(4, 2)));
  spaces.push_back(Space::remark_nonstandard(q(1), steps(4, 3)));
  spaces.push_back(Space::ng_nonstandard(q(1), q(1), q(1), ng_grid(2)));
  spaces.push_back(Space::poset(oracle::random_poset(rng, 4)));
  spaces.push_back(oracle::random_quasi_metric(rng, 4, oracle::dyadic_pool(1, 2, true)));
  const std::vector<Rational> radii{q(0), q(1, 4), q(1, 2), q(1), q(2)};
  std::uint64_t sampled = 0;
  for (const auto& s : spaces) {
    std::uniform_int_distribution<PointId> point(0, s.size() - 1);
    std::uniform_int_distribution<std::size_t> radius(0, radii.size() - 1);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<FormalBall> family(size(rng));
      for (auto& b : family) b = {point(rng), radii[radius(rng)]};
      if (!qm::is_directed(s, family)) continue;
      const auto sup = qm::grid_supremum(s, family);
      if (!sup) continue;
      ++sampled;
      Rational least = family[0].radius;
      for (const auto& b : family) least = std::min(least, b.radius);
      c.require(sup->radius == least, "lub radius is the least member radius");
    }
  }
  for (const auto& sh : {q(0), q(1, 2), q(2)}) {
    for (const auto& f : {qm::ScriptedFamily::descending(sh), qm::ScriptedFamily::unbounded(sh),
                          qm::ScriptedFamily::from_left(q(1), sh)}) {
      ++sampled;
      bool decreasing = true;
      for (unsigned m = 0; m + 1 <= qm::kScriptedHorizon; ++m) {
        decreasing = decreasing && f.member(m).radius >= f.member(m + 1).radius && f.member(m).radius >= sh;
      }
      const Rational gap = f.member(qm::kScriptedHorizon).radius - sh;
      c.require(decreasing && gap <= qm::dyadic(qm::kScriptedHorizon) && f.supremum().radius == sh,
                f.description() + ": supremum radius is the infimum");
    }
  }
  c.require(sampled > 100, "too few directed families sampled");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"quasi-metric axioms of the built-in spaces", axioms},
      {"order laws of formal balls", order_laws},
      {"non-standard remark space", remark_nonstandard},
      {"way-below versus strict order", gaps},
      {"non-standard way-below example", ng_example},
      {"center points", centers},
      {"envelope closed form and chain property", envelope_closed_form},
      {"distance to the complement of an open set", complement_distance},
      {"ideal and rounded-ideal completions", completions},
      {"quasi-ideal models", models},
      {"Choquet game strategy", choquet},
      {"radius law for directed suprema", radius_law},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += c.pass() ? 0 : 1;
    std::printf("criterion %zu: %s %s (%s, %.2fs)\n", i + 1, c.pass() ? "PASS" : "FAIL", criteria[i].first,
                c.summary().c_str(), secs);
  }
  return failed == 0 ? 0 : 1;
}
