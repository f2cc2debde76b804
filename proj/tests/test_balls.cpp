#include <doctest.h>

#include "oracles.hpp"
#include "qm/balls.hpp"

using oracle::q;
using qm::BallLiteral;
using qm::ExtReal;
using qm::FormalBall;
using qm::Space;
using qm::Verdict;

namespace {

const ExtReal inf = ExtReal::infinity();

Space dreal(std::initializer_list<long> v, bool with_inf = false) {
  std::vector<ExtReal> values;
  for (long x : v) values.emplace_back(x);
  if (with_inf) values.push_back(inf);
  return Space::dreal_grid(values);
}

Space sorgenfrey(std::initializer_list<long> v) {
  std::vector<qm::Rational> values;
  for (long x : v) values.push_back(q(x));
  return Space::sorgenfrey_grid(values);
}

FormalBall ball(const Space& s, const char* x, const qm::Rational& r) { return qm::make_ball(s.point(x), r); }

Space ng_space() {
  std::vector<qm::Rational> g;
  for (unsigned n = 0; n <= 8; ++n) g.push_back(1 - qm::dyadic(n + 1));
  g.push_back(q(1));
  return Space::ng_nonstandard(q(1), q(1), q(1), g);
}

std::vector<Space> oracle_spaces() {
  std::mt19937_64 rng(5);
  std::vector<Space> out;
  out.push_back(dreal({0, 1, 2, 3}, true));
  out.push_back(dreal({0, 1, 2, 3}));
  out.push_back(Space::dreal_grid({ExtReal{}, ExtReal(q(1, 2)), ExtReal(1), inf}));
  out.push_back(sorgenfrey({0, 1, 2, 3}));
  out.push_back(Space::sorgenfrey_grid({q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}));
  out.push_back(Space::poset(qm::FinitePoset::powerset(2)));
  out.push_back(Space::poset(oracle::random_poset(rng, 4)));
  out.push_back(oracle::metric_line(4));
  out.push_back(oracle::random_quasi_metric(rng, 4, oracle::dyadic_pool(1, 2, false), true));
  return out;
}

}  // namespace

TEST_CASE("formal-ball order") {
  const Space d = dreal({1, 3, 5});
  CHECK(qm::leq_dplus(d, ball(d, "5", q(3)), ball(d, "3", q(1))));
  CHECK_FALSE(qm::leq_dplus(d, ball(d, "3", q(1)), ball(d, "5", q(3))));
  CHECK_FALSE(qm::leq_dplus(d, ball(d, "3", q(1)), ball(d, "3", q(2))));
  const Space s = sorgenfrey({0, 1});
  CHECK(qm::leq_dplus(s, ball(s, "0", q(3)), ball(s, "1", q(1))));
  CHECK_FALSE(qm::leq_dplus(s, ball(s, "1", q(3)), ball(s, "0", q(1))));
  for (qm::PointId x = 0; x < d.size(); ++x) CHECK(qm::leq_dplus(d, FormalBall{x, q(1, 3)}, FormalBall{x, q(1, 3)}));
}

TEST_CASE("ball literals") {
  CHECK(qm::parse_ball("(5, 3)") == BallLiteral{"5", q(3)});
  CHECK(qm::parse_ball(" ( -1/2 ,  2/4 ) ") == BallLiteral{"-1/2", q(1, 2)});
  CHECK(qm::parse_ball("(a,b, 1)") == BallLiteral{"a,b", q(1)});
  CHECK(qm::to_string(BallLiteral{"inf", q(3, 2)}) == "(inf, 3/2)");
  for (const char* bad : {"5, 3", "(5)", "(, 1)", "(x, -1)", "(x, inf)", "(x, 1"}) {
    CHECK_THROWS_AS(qm::parse_ball(bad), qm::ParseError);
  }
  CHECK_THROWS_AS(qm::make_ball(0, q(-1)), std::domain_error);
  const Space d = dreal({1});
  CHECK_THROWS_AS(qm::resolve(d, BallLiteral{"7", q(1)}), qm::UnknownPoint);
}

TEST_CASE("d-plus") {
  const Space d = dreal({3, 5});
  CHECK(qm::dplus(d, ball(d, "5", q(3)), ball(d, "3", q(1))) == ExtReal(0));
  CHECK(qm::dplus(d, ball(d, "5", q(1)), ball(d, "3", q(1))) == ExtReal(2));
  CHECK(qm::dplus(d, ball(d, "3", q(1)), ball(d, "3", q(1))) == ExtReal(0));
}

TEST_CASE("d-plus is a quasi-metric agreeing with the order") {
  for (const auto& s : oracle_spaces()) {
    std::vector<FormalBall> balls;
    for (qm::PointId x = 0; x < s.size(); ++x) {
      for (const auto& r : {q(0), q(1, 2), q(1), q(2)}) balls.push_back({x, r});
    }
    for (const auto& a : balls) {
      CHECK(qm::dplus(s, a, a) == ExtReal(0));
      for (const auto& b : balls) {
        CHECK((qm::dplus(s, a, b).is_zero() == qm::leq_dplus(s, a, b)));
        for (const auto& c : balls) CHECK(qm::dplus(s, a, c) <= qm::dplus(s, a, b) + qm::dplus(s, b, c));
      }
    }
  }
}

TEST_CASE("strict relation") {
  const Space d = dreal({3, 5});
  CHECK(qm::prec(d, ball(d, "5", q(4)), ball(d, "3", q(1))));
  CHECK_FALSE(qm::prec(d, ball(d, "5", q(3)), ball(d, "3", q(1))));
  for (const auto& s : oracle_spaces()) {
    for (qm::PointId x = 0; x < s.size(); ++x) CHECK_FALSE(qm::prec(s, FormalBall{x, q(1)}, FormalBall{x, q(1)}));
  }
}

TEST_CASE("order laws on grids") {
  std::vector<Space> spaces = oracle_spaces();
  spaces.push_back(Space::remark_nonstandard(q(1), {q(0), q(1, 3), q(2, 3), q(1)}));
  spaces.push_back(ng_space());
  const auto radii = qm::dyadic_radii(5);
  const std::vector<qm::Rational> shifts{q(1, 4), q(1), q(3)};
  for (const auto& s : spaces) {
    CAPTURE(qm::kind_name(s.kind()));
    const auto r = qm::check_order_laws(s, radii, shifts);
    CHECK(r.pass());
    CHECK(r.balls == s.size() * radii.size());
  }
}

TEST_CASE("order-law checker sees a broken triangle") {
  const Space s = Space::finite_table({"a", "b", "c"}, {{ExtReal(0), ExtReal(0), ExtReal(1)},
                                                        {ExtReal(1), ExtReal(0), ExtReal(0)},
                                                        {ExtReal(1), ExtReal(1), ExtReal(0)}});
  const auto r = qm::check_order_laws(s, qm::dyadic_radii(1), {});
  REQUIRE_FALSE(r.pass());
  CHECK(r.violations.front().law == "transitivity");
}

TEST_CASE("way-below examples") {
  const Space d = dreal({0, 1, 2, 3}, true);
  const Verdict v = qm::way_below(d, ball(d, "inf", q(2)), ball(d, "inf", q(1)));
  REQUIRE(v.refuted());
  CHECK(v.witness->shape == qm::FamilyShape::Scripted);
  CHECK(v.witness->sup == BallLiteral{"inf", q(1)});
  CHECK(qm::replay_way_below(d, {"inf", q(2)}, {"inf", q(1)}, *v.witness) == std::nullopt);

  const Space s = sorgenfrey({0, 1, 2, 3});
  CHECK(qm::way_below(s, ball(s, "0", q(3)), ball(s, "1", q(1))).holds());

  const Space ng = ng_space();
  const Verdict w = qm::way_below(ng, ball(ng, "-2", q(3)), ball(ng, "-1", q(1)));
  REQUIRE(w.refuted());
  REQUIRE(w.witness->members.size() == 9);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(w.witness->members[n] == BallLiteral{qm::to_string(qm::Rational(1 - qm::dyadic(n + 1))), qm::dyadic(n + 1)});
  }
  CHECK(w.witness->sup == BallLiteral{"1", q(0)});
  CHECK(qm::replay_way_below(ng, {"-2", q(3)}, {"-1", q(1)}, *w.witness) == std::nullopt);

  const Verdict u = qm::way_below(ng, ball(ng, "-2", q(2)), ball(ng, "-1", q(0)));
  CHECK(u.unknown());
  CHECK(u.depth == 8);
}

TEST_CASE("way-below gaps on the Sorgenfrey grid") {
  const Space s = sorgenfrey({0, 1, 2, 3});
  const FormalBall a = ball(s, "0", q(3));
  const FormalBall b = ball(s, "0", q(1));
  CHECK(qm::prec(s, a, b));
  const Verdict v = qm::way_below(s, a, b);
  REQUIRE(v.refuted());
  CHECK(*v.witness->scripted == qm::ScriptedFamily::from_left(q(0), q(1)));
  CHECK(qm::replay_way_below(s, qm::literal(s, a), qm::literal(s, b), *v.witness) == std::nullopt);
}

TEST_CASE("trivial refutations") {
  const Space d = dreal({0, 1, 2});
  const Verdict v = qm::way_below(d, ball(d, "2", q(1)), ball(d, "0", q(0)));
  REQUIRE(v.refuted());
  CHECK(v.witness->shape == qm::FamilyShape::Singleton);
  const Verdict e = qm::way_below(d, ball(d, "2", q(2)), ball(d, "0", q(0)));
  REQUIRE(e.refuted());
  CHECK(e.witness->shape == qm::FamilyShape::EpsilonChain);
  CHECK(e.witness->members.size() == 9);
  CHECK(qm::replay_way_below(d, {"2", q(2)}, {"0", q(0)}, *e.witness) == std::nullopt);
}

TEST_CASE("oracle answers are sound and never refuted") {
  for (const auto& s : oracle_spaces()) {
    CAPTURE(qm::kind_name(s.kind()));
    std::vector<FormalBall> balls;
    for (qm::PointId x = 0; x < s.size(); ++x) {
      for (const auto& r : {q(0), q(1, 4), q(1, 2), q(1), q(2), q(4)}) balls.push_back({x, r});
    }
    for (const auto& a : balls) {
      for (const auto& b : balls) {
        const Verdict v = qm::way_below(s, a, b, 4);
        if (v.holds()) {
          CHECK(qm::prec(s, a, b));
          CHECK(qm::leq_dplus(s, a, b));
          CHECK_FALSE(qm::refute_way_below(s, a, b, 4).refuted());
        } else {
          REQUIRE(v.refuted());
          const auto why = qm::replay_way_below(s, qm::literal(s, a), qm::literal(s, b), *v.witness);
          CAPTURE(why.value_or(""));
          CAPTURE(qm::to_string(qm::literal(s, a)));
          CAPTURE(qm::to_string(qm::literal(s, b)));
          CHECK_FALSE(why.has_value());
        }
      }
    }
  }
}

TEST_CASE("tampered witnesses do not replay") {
  const Space ng = ng_space();
  const Verdict w = qm::way_below(ng, ball(ng, "-2", q(3)), ball(ng, "-1", q(1)));
  REQUIRE(w.refuted());
  auto bad = *w.witness;
  bad.sup = {"-1", q(0)};
  CHECK(qm::replay_way_below(ng, {"-2", q(3)}, {"-1", q(1)}, bad).has_value());
  bad = *w.witness;
  bad.members[3].radius = q(1);
  CHECK(qm::replay_way_below(ng, {"-2", q(3)}, {"-1", q(1)}, bad).has_value());
  CHECK(qm::replay_way_below(ng, {"-2", q(1, 2)}, {"-1", q(0)}, *w.witness).has_value());
  bad = *w.witness;
  bad.members[0].center = "nowhere";
  CHECK(qm::replay_way_below(ng, {"-2", q(3)}, {"-1", q(1)}, bad).has_value());
  const Space d = dreal({0, 1});
  const Verdict e = qm::way_below(d, ball(d, "1", q(1)), ball(d, "0", q(0)));
  REQUIRE(e.refuted());
  CHECK(qm::replay_way_below(d, {"1", q(2)}, {"0", q(0)}, *e.witness).has_value());
}

TEST_CASE("scripted families match brute force on truncations") {
  const Space remark = Space::remark_nonstandard(q(1), {q(0), q(1, 3), q(2, 3), q(1)});
  const Space d = dreal({0, 1, 2, 3}, true);
  const Space s = sorgenfrey({0, 1, 2, 3});
  const auto radii = qm::default_probe_radii();
  for (const auto& sh : {q(0), q(1, 2), q(1)}) {
    CHECK(qm::truncation_disagreement(remark, qm::ScriptedFamily::descending(sh), radii, 8) == std::nullopt);
    CHECK(qm::truncation_disagreement(d, qm::ScriptedFamily::unbounded(sh), radii, 8) == std::nullopt);
    CHECK(qm::truncation_disagreement(s, qm::ScriptedFamily::from_left(q(1), sh), radii, 8) == std::nullopt);
  }
  CHECK(qm::truncation_disagreement(s, qm::ScriptedFamily::descending(q(0)), radii, 8).has_value());
  const auto f = qm::ScriptedFamily::descending(q(1, 2));
  CHECK(f.shifted(q(1)) == qm::ScriptedFamily::descending(q(3, 2)));
  CHECK(f.member(1) == BallLiteral{"1/2", q(1)});
  CHECK(f.supremum() == BallLiteral{"0", q(1, 2)});
}

TEST_CASE("standardness probe") {
  const Space remark = Space::remark_nonstandard(q(1), {q(0), q(1, 3), q(2, 3), q(1)});
  const auto family = qm::ScriptedFamily::descending(q(0));
  const Verdict v = qm::standardness_probe(remark, family, {"0", q(0)}, q(1));
  REQUIRE(v.refuted());
  REQUIRE(v.witness->failing.has_value());
  const BallLiteral w = *v.witness->failing;
  CHECK(w == BallLiteral{"1/3", q(2, 3)});
  CHECK(remark.coord_of(w.center)->value + w.radius <= 1);
  CHECK_FALSE(qm::leq_dplus(remark, BallLiteral{"0", q(1)}, w));
  CHECK(remark.dist("0", "1/3") == ExtReal(1));
  CHECK(qm::replay_standardness(remark, family, {"0", q(0)}, q(1), *v.witness) == std::nullopt);
  CHECK(qm::replay_standardness(remark, family, {"0", q(0)}, q(1, 2), *v.witness).has_value());

  CHECK(qm::standardness_probe(remark, family, {"0", q(0)}, q(0)).holds());
  CHECK_THROWS_AS(qm::standardness_probe(remark, family, {"1/3", q(0)}, q(1)), qm::InvalidSup);
  CHECK_THROWS_AS(qm::standardness_probe(remark, family, {"0", q(1)}, q(1)), qm::InvalidSup);
}

TEST_CASE("standardness of finite families on posets") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Space p = Space::poset(oracle::random_poset(rng, 4));
    std::vector<FormalBall> family;
    std::uniform_int_distribution<qm::PointId> pick(0, p.size() - 1);
    const qm::PointId top = pick(rng);
    family.push_back({top, q(1, 2)});
    for (qm::PointId x = 0; x < p.size(); ++x) {
      if (p.dist(x, top).is_zero()) family.push_back({x, q(1)});
    }
    const qm::DirectedFamily f = family;
    const BallLiteral sup{p.name(top), q(1, 2)};
    CHECK(qm::standardness_probe(p, f, sup, q(1)).holds());
    CHECK(qm::standardness_probe(p, f, sup, q(0)).holds());
  }
}

TEST_CASE("finite families on the remark space") {
  const Space remark = Space::remark_nonstandard(q(1), {q(0), q(1, 2), q(1)});
  const qm::DirectedFamily f = std::vector<FormalBall>{{remark.point("1/2"), q(1, 2)}, {remark.point("0"), q(0)}};
  CHECK(qm::standardness_probe(remark, f, {"0", q(0)}, q(1)).holds());
  const qm::DirectedFamily g = std::vector<FormalBall>{{remark.point("1"), q(1)}, {remark.point("1/2"), q(1, 2)}};
  CHECK(qm::standardness_probe(remark, g, {"1/2", q(1, 2)}, q(1, 4)).holds());
  const qm::DirectedFamily h = std::vector<FormalBall>{{remark.point("1"), q(0)}, {remark.point("1/2"), q(0)}};
  CHECK_THROWS_AS(qm::standardness_probe(remark, h, {"1", q(0)}, q(1)), std::invalid_argument);
}

TEST_CASE("v-relation") {
  const Space d = dreal({3, 5}, true);
  CHECK(qm::v_relation(d, d.point("5"), d.point("3")) == ExtReal(2));
  CHECK(qm::v_relation(d, d.point("inf"), d.point("3")) == inf);
  const Space s = sorgenfrey({3, 5});
  CHECK(qm::v_relation(s, s.point("3"), s.point("3")) == inf);
  CHECK(qm::v_relation(s, s.point("3"), s.point("5")) == ExtReal(2));
  const Space remark = Space::remark_nonstandard(q(1), {q(0), q(1)});
  CHECK_THROWS_AS(qm::v_relation(remark, 0, 1), qm::NoOracle);
  CHECK_THROWS_AS(qm::center_points(remark), qm::NoOracle);
  CHECK_THROWS_AS(qm::smyth_probe(remark), qm::NoOracle);
}

TEST_CASE("v-relation is the infimum of sampled oracle gaps") {
  std::vector<qm::Rational> radii;
  for (long j = 0; j <= 48; ++j) radii.push_back(q(j, 8));
  for (const auto& s : oracle_spaces()) {
    CAPTURE(qm::kind_name(s.kind()));
    for (qm::PointId x = 0; x < s.size(); ++x) {
      for (qm::PointId y = 0; y < s.size(); ++y) {
        const ExtReal v = qm::v_relation(s, x, y);
        std::optional<qm::Rational> best;
        for (const auto& r : radii) {
          for (const auto& t : radii) {
            if (!*qm::way_below_oracle(s, {x, r}, {y, t})) continue;
            const qm::Rational gap = r - t;
            CHECK(ExtReal(gap) >= v);
            if (!best || gap < *best) best = gap;
          }
        }
        if (v.is_infinite()) {
          CHECK_FALSE(best.has_value());
        } else {
          REQUIRE(best.has_value());
          CHECK(*best - v.value() <= q(1, 8));
        }
      }
    }
  }
}

TEST_CASE("center points") {
  const Space d = Space::dreal_grid({ExtReal{}, ExtReal(q(1, 2)), ExtReal(1), inf});
  CHECK(qm::center_points(d) == std::vector<qm::PointId>{0, 1, 2});
  CHECK(qm::center_points(sorgenfrey({0, 1, 2, 3})).empty());
  const Space line = oracle::metric_line(5);
  CHECK(qm::center_points(line).size() == 5);
}

TEST_CASE("Smyth probe") {
  const Space line = oracle::metric_line(5);
  CHECK(qm::smyth_probe(line).consistent());
  CHECK(qm::smyth_probe(dreal({0, 1, 2, 3})).consistent());

  const Space s = sorgenfrey({0, 1, 2, 3});
  const auto rs = qm::smyth_probe(s);
  CHECK_FALSE(rs.consistent());
  CHECK(rs.exhaustive);
  const std::pair<FormalBall, FormalBall> pair{ball(s, "0", q(3)), ball(s, "0", q(1))};
  CHECK(std::find(rs.gaps.begin(), rs.gaps.end(), pair) != rs.gaps.end());

  const Space d = dreal({0, 1, 2, 3}, true);
  const auto rd = qm::smyth_probe(d);
  CHECK(rd.non_centers == std::vector<qm::PointId>{d.point("inf")});
  REQUIRE_FALSE(rd.gaps.empty());
  for (const auto& [a, b] : rd.gaps) CHECK(a.center == d.point("inf"));
  const qm::PointId i = d.point("inf");
  std::size_t expected = 0;
  const auto radii = qm::default_probe_radii();
  for (const auto& r : radii) {
    for (const auto& t : radii) expected += r > t ? 1 : 0;
  }
  CHECK(rd.gaps.size() == expected);
  CHECK(std::all_of(rd.gaps.begin(), rd.gaps.end(), [&](const auto& g) { return g.second.center == i; }));

  const auto sampled = qm::smyth_probe(s, 50, 4);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.pairs_checked == 50);
  CHECK(sampled.seed == 4);
}

TEST_CASE("least upper bounds have the least member radius") {
  std::mt19937_64 rng(13);
  std::vector<Space> spaces = oracle_spaces();
  spaces.push_back(Space::remark_nonstandard(q(1), {q(0), q(1, 2), q(1)}));
  std::size_t found = 0;
  for (const auto& s : spaces) {
    std::vector<FormalBall> pool;
    for (qm::PointId x = 0; x < s.size(); ++x) {
      for (const auto& r : {q(0), q(1, 2), q(1), q(3, 2), q(2)}) pool.push_back({x, r});
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<FormalBall> family;
      const std::size_t k = 1 + trial % 4;
      for (std::size_t i = 0; i < k; ++i) family.push_back(pool[pick(rng)]);
      if (!qm::is_directed(s, family)) continue;
      const auto sup = qm::grid_supremum(s, family);
      if (!sup) continue;
      ++found;
      qm::Rational least = family.front().radius;
      for (const auto& m : family) least = std::min(least, m.radius);
      CHECK(sup->radius == least);
      for (const auto& m : family) CHECK(qm::leq_dplus(s, m, *sup));
    }
  }
  CHECK(found > 100);
  for (const auto& sh : {q(0), q(1, 3), q(2)}) {
    for (const auto& f : {qm::ScriptedFamily::descending(sh), qm::ScriptedFamily::unbounded(sh),
                          qm::ScriptedFamily::from_left(q(1), sh)}) {
      qm::Rational least = f.member(0).radius;
      for (unsigned m = 0; m <= 20; ++m) least = std::min(least, f.member(m).radius);
      CHECK(f.supremum().radius <= least);
      CHECK(least - f.supremum().radius <= qm::dyadic(20));
    }
  }
}
