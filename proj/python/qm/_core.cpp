// Python bindings. Structured arguments and results cross the boundary as
// JSON text in the file formats read by the command line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qm/balls.hpp"
#include "qm/io.hpp"
#include "qm/lipschitz.hpp"
#include "qm/posets.hpp"
#include "qm/qideal.hpp"
#include "qm/space.hpp"

namespace py = pybind11;
using qm::Json;

namespace {

qm::Space space_arg(const std::string& text) { return qm::space_from_json(Json::parse(text)); }

qm::FormalBall ball_arg(const qm::Space& s, const std::string& text) {
  return qm::resolve(s, qm::parse_ball(text));
}

qm::OpenSet open_arg(const qm::Space& s, const std::vector<std::string>& pts) {
  std::vector<qm::PointId> ids;
  for (const auto& p : pts) ids.push_back(s.point(p));
  return qm::OpenSet(s, ids);
}

std::vector<std::string> names_of(const qm::Space& s, const std::vector<qm::PointId>& pts) {
  std::vector<std::string> out;
  for (auto x : pts) out.push_back(s.name(x));
  return out;
}

std::string check_axioms(const std::string& space, std::uint64_t budget, std::uint64_t seed) {
  const qm::Space s = space_arg(space);
  return qm::axiom_report_to_json(s, qm::check_axioms(s, budget, seed)).dump();
}

std::string way_below(const std::string& space, const std::string& a, const std::string& b, unsigned depth) {
  const qm::Space s = space_arg(space);
  return qm::verdict_to_json(qm::way_below(s, ball_arg(s, a), ball_arg(s, b), depth)).dump();
}

std::optional<std::string> replay_way_below(const std::string& space, const std::string& a, const std::string& b,
                                            const std::string& witness) {
  const qm::Space s = space_arg(space);
  return qm::replay_way_below(s, qm::parse_ball(a), qm::parse_ball(b), qm::witness_from_json(Json::parse(witness)));
}

std::string standardness_probe(const std::string& space, const std::string& family, const std::string& sup,
                               const std::string& shift, unsigned depth) {
  const qm::Space s = space_arg(space);
  const auto f = qm::family_from_json(s, Json::parse(family));
  return qm::verdict_to_json(qm::standardness_probe(s, f, qm::parse_ball(sup), qm::parse_rational(shift), {}, depth))
      .dump();
}

std::string smyth_probe(const std::string& space, std::uint64_t budget, std::uint64_t seed) {
  const qm::Space s = space_arg(space);
  const auto r = qm::smyth_probe(s, budget, seed);
  Json gaps = Json::array();
  for (const auto& [a, b] : r.gaps) {
    gaps.push_back(Json::array({qm::to_string(qm::literal(s, a)), qm::to_string(qm::literal(s, b))}));
  }
  return Json{{"consistent", r.consistent()},
              {"non_centers", names_of(s, r.non_centers)},
              {"gaps", gaps},
              {"exhaustive", r.exhaustive},
              {"seed", r.seed},
              {"pairs_checked", r.pairs_checked}}
      .dump();
}

std::map<std::string, std::string> values_map(const qm::Space& s, const qm::LscFunction& f) {
  std::map<std::string, std::string> out;
  for (qm::PointId x = 0; x < s.size(); ++x) out[s.name(x)] = f[x].to_string();
  return out;
}

std::string completion_json(const std::vector<std::string>& names, const qm::Completion& c) {
  Json ideals = Json::array();
  for (auto m : c.ideals) {
    Json members = Json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if ((m >> i) & 1U) members.push_back(names[i]);
    }
    ideals.push_back(members);
  }
  Json embedding = Json::object();
  for (std::size_t e = 0; e < names.size(); ++e) {
    embedding[names[e]] = c.embedding[e] ? Json(*c.embedding[e]) : Json(nullptr);
  }
  return Json{{"ideals", ideals}, {"embedding", embedding}, {"order", qm::poset_to_json(c.poset)}}.dump();
}

std::string quasi_ideal_model(const std::string& space, unsigned depth, const std::string& factor) {
  const qm::ModelPoset m = qm::build_model(space_arg(space), depth, qm::parse_rational(factor));
  const auto r = qm::quasi_ideal_model_check(m);
  Json report{{"pass", r.pass()},
              {"partial_order", !r.order_violation},
              {"layering", r.layering()},
              {"chain_bound", r.chain_bound},
              {"limit_isomorphic", r.limit_isomorphic},
              {"quasi_ideal", r.quasi_ideal.pass()},
              {"halving", r.halving_violations.empty()},
              {"longest_chain", r.longest_chain ? Json(*r.longest_chain) : Json(nullptr)}};
  return Json{{"model", qm::model_to_json(m)}, {"report", report}}.dump();
}

std::string choquet(const std::string& poset, std::size_t depth, std::optional<std::size_t> plays,
                    std::uint64_t seed) {
  const qm::FinitePoset p = qm::poset_from_json(Json::parse(poset));
  const auto s = plays ? qm::choquet_random(p, depth, *plays, seed) : qm::choquet_exhaustive(p, depth);
  return Json{{"plays", s.plays},
              {"alpha_wins", s.alpha_wins},
              {"intersections_equal", s.intersections_equal},
              {"all_good", s.all_good()}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact formal-ball computations over finite quasi-metric spaces";

  py::register_exception<qm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qm::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<qm::InvalidSpace>(m, "InvalidSpace", PyExc_ValueError);
  py::register_exception<qm::NotAPoset>(m, "NotAPoset", PyExc_ValueError);
  py::register_exception<qm::NotAnAbstractBasis>(m, "NotAnAbstractBasis", PyExc_ValueError);
  py::register_exception<qm::NotOpen>(m, "NotOpen", PyExc_ValueError);
  py::register_exception<qm::NoOracle>(m, "NoOracle", PyExc_RuntimeError);
  py::register_exception<qm::UnknownPoint>(m, "UnknownPoint", PyExc_KeyError);
  py::register_exception<qm::UnknownElement>(m, "UnknownElement", PyExc_KeyError);
  py::register_exception<qm::TooLarge>(m, "TooLarge", PyExc_ValueError);
  py::register_exception<qm::IllegalMove>(m, "IllegalMove", PyExc_ValueError);
  py::register_exception<qm::IndeterminateForm>(m, "IndeterminateForm", PyExc_ArithmeticError);

  m.attr("DEFAULT_SEED") = qm::kDefaultSeed;
  m.attr("DEFAULT_BUDGET") = qm::kDefaultAxiomBudget;
  m.attr("DEFAULT_REFUTER_DEPTH") = qm::kDefaultRefuterDepth;
  m.attr("DEFAULT_MODEL_DEPTH") = qm::kDefaultModelDepth;

  m.def("normalize", [](const std::string& text) { return qm::ExtReal::parse(text).to_string(); },
        "Canonical text form of an extended non-negative real.");
  m.def("add", [](const std::string& a, const std::string& b) {
    return (qm::ExtReal::parse(a) + qm::ExtReal::parse(b)).to_string();
  });
  m.def("monus", [](const std::string& a, const std::string& b) {
    return qm::monus(qm::ExtReal::parse(a), qm::ExtReal::parse(b)).to_string();
  });

  m.def("space", [](const std::string& space) { return qm::space_to_json(space_arg(space)).dump(); },
        "Validates a space description and returns it in canonical form.");
  m.def("distance", [](const std::string& space, const std::string& x, const std::string& y) {
    return space_arg(space).dist(x, y).to_string();
  });
  m.def("check_axioms", &check_axioms);
  m.def("specialization", [](const std::string& space) {
    const qm::Space s = space_arg(space);
    return qm::poset_to_json(qm::FinitePoset(s.names(), qm::specialization_order(s))).dump();
  });

  m.def("leq", [](const std::string& space, const std::string& a, const std::string& b) {
    return qm::leq_dplus(space_arg(space), qm::parse_ball(a), qm::parse_ball(b));
  });
  m.def("prec", [](const std::string& space, const std::string& a, const std::string& b) {
    const qm::Space s = space_arg(space);
    return qm::prec(s, ball_arg(s, a), ball_arg(s, b));
  });
  m.def("dplus", [](const std::string& space, const std::string& a, const std::string& b) {
    const qm::Space s = space_arg(space);
    return qm::dplus(s, ball_arg(s, a), ball_arg(s, b)).to_string();
  });
  m.def("way_below", &way_below);
  m.def("replay_way_below", &replay_way_below);
  m.def("standardness_probe", &standardness_probe);
  m.def("v_relation", [](const std::string& space, const std::string& x, const std::string& y) {
    const qm::Space s = space_arg(space);
    return qm::v_relation(s, s.point(x), s.point(y)).to_string();
  });
  m.def("center_points", [](const std::string& space) {
    const qm::Space s = space_arg(space);
    return names_of(s, qm::center_points(s));
  });
  m.def("smyth_probe", &smyth_probe);

  m.def("hat_membership", [](const std::string& space, const std::string& ball, const std::vector<std::string>& u) {
    const qm::Space s = space_arg(space);
    return qm::hat_membership(s, ball_arg(s, ball), open_arg(s, u));
  });
  m.def("thinning", [](const std::string& space, const std::vector<std::string>& u, const std::string& r) {
    const qm::Space s = space_arg(space);
    return names_of(s, qm::thinning(s, open_arg(s, u), qm::parse_rational(r)).points());
  });
  m.def("dist_to_complement", [](const std::string& space, const std::vector<std::string>& u) {
    const qm::Space s = space_arg(space);
    return values_map(s, qm::dist_function(s, open_arg(s, u)));
  });
  m.def("envelope", [](const std::string& space, const std::string& f, const std::string& alpha) {
    const qm::Space s = space_arg(space);
    return values_map(s, qm::envelope(s, qm::function_from_json(s, Json::parse(f)), qm::parse_rational(alpha)));
  });
  m.def("is_lipschitz", [](const std::string& space, const std::string& f, const std::string& alpha) {
    const qm::Space s = space_arg(space);
    return qm::lipschitz_check(s, qm::function_from_json(s, Json::parse(f)), qm::parse_rational(alpha)).pass();
  });
  m.def("lipschitz_threshold", [](const std::string& space, const std::string& f) -> std::optional<std::string> {
    const qm::Space s = space_arg(space);
    const auto t = qm::lipschitz_threshold(s, qm::function_from_json(s, Json::parse(f)));
    if (!t) return std::nullopt;
    return qm::to_string(*t);
  });

  m.def("ideal_completion", [](const std::string& poset) {
    const qm::FinitePoset p = qm::poset_from_json(Json::parse(poset));
    return completion_json(p.names(), qm::ideal_completion(p));
  });
  m.def("rounded_ideal_completion", [](const std::string& basis) {
    const qm::AbstractBasis b = qm::basis_from_json(Json::parse(basis));
    return completion_json(b.names(), qm::rounded_ideal_completion(b));
  });
  m.def("way_below_finite", [](const std::string& poset, const std::string& a, const std::string& b) {
    const qm::FinitePoset p = qm::poset_from_json(Json::parse(poset));
    return qm::way_below_finite(p, p.index(a), p.index(b));
  });
  m.def("export_dot", [](const std::string& poset) {
    return qm::export_dot(qm::poset_from_json(Json::parse(poset)));
  });
  m.def("quasi_ideal_model", &quasi_ideal_model);
  m.def("model_dot", [](const std::string& space, unsigned depth) {
    return qm::model_dot(qm::build_model(space_arg(space), depth));
  });
  m.def("choquet", &choquet);
}
