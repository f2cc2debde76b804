// qm: command-line front end for the formal-ball toolkit.
//
// Every verb prints line-delimited JSON records followed by one summary
// record. Exit status: 0 pass/holds, 1 refuted/fail, 2 usage or input
// error, 3 unknown.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qm/balls.hpp"
#include "qm/io.hpp"
#include "qm/lipschitz.hpp"
#include "qm/posets.hpp"
#include "qm/qideal.hpp"
#include "qm/space.hpp"

namespace {

using qm::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Options {
  std::uint64_t seed = qm::kDefaultSeed;
  std::optional<unsigned> depth;
  std::optional<std::uint64_t> budget;
  std::string alpha = "1";
  std::string dot;
  bool pretty = false;
  std::string replay;

  std::string input;
  std::string ball_a;
  std::string ball_b;
  std::string family;
  std::string sup;
  std::string shift = "0";
  std::string function;
  std::string open;
  std::string radius = "0";
  std::string model;
};

class Printer {
 public:
  explicit Printer(bool pretty) : pretty_(pretty) {}

  void record(const Json& j) {
    if (!pretty_) {
      std::cout << j.dump() << '\n';
      return;
    }
    if (j.contains("table") && j["table"].is_array() && !j["table"].empty()) {
      table(j["table"]);
      return;
    }
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    std::cout << '\n';
  }

 private:
  static std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void table(const Json& rows) {
    std::vector<std::string> keys;
    for (const auto& [key, value] : rows[0].items()) keys.push_back(key);
    std::vector<std::size_t> width;
    for (const auto& k : keys) width.push_back(k.size());
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], cell(row[keys[c]]).size());
    }
    auto line = [&](auto get) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        const std::string s = get(c);
        std::cout << s << std::string(width[c] - s.size() + 2, ' ');
      }
      std::cout << '\n';
    };
    line([&](std::size_t c) { return keys[c]; });
    line([&](std::size_t c) { return std::string(width[c], '-'); });
    for (const auto& row : rows) line([&](std::size_t c) { return cell(row[keys[c]]); });
    std::cout << '\n';
  }

  bool pretty_;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Json list_of(const qm::Space& s, const std::vector<qm::PointId>& pts) {
  Json j = Json::array();
  for (auto x : pts) j.push_back(s.name(x));
  return j;
}

Json ball_json(const qm::Space& s, const qm::FormalBall& b) { return qm::to_string(qm::literal(s, b)); }

int status_code(qm::Verdict::Status s) {
  switch (s) {
    case qm::Verdict::Status::Holds: return kPass;
    case qm::Verdict::Status::Refuted: return kFail;
    case qm::Verdict::Status::Unknown: return kUnknown;
  }
  return kUsage;
}

Json summary(const std::string& verb, const std::string& status, Json extra = Json::object()) {
  Json j;
  j["type"] = "summary";
  j["verb"] = verb;
  j["status"] = status;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

// ---------------------------------------------------------------------------

int run_axioms(const Options& o, Printer& out) {
  const Json spec = qm::read_json_file(o.input);
  const qm::Space s = qm::space_from_json(spec);
  const auto report = qm::check_axioms(s, o.budget.value_or(qm::kDefaultAxiomBudget), o.seed);
  for (const auto& v : report.violations) {
    Json w = Json::array();
    for (auto x : v.witness) w.push_back(s.name(x));
    Json violation{{"axiom", std::string(qm::axiom_name(v.axiom))},
                   {"witness", w},
                   {"lhs", v.lhs.to_string()},
                   {"rhs", v.rhs.to_string()}};
    out.record(Json{{"type", "witness"}, {"verb", "axioms"}, {"space", spec}, {"violation", violation}});
  }
  out.record(summary("axioms", report.pass() ? "pass" : "fail",
                     Json{{"exhaustive", report.exhaustive},
                          {"seed", report.seed},
                          {"triples_checked", report.triples_checked},
                          {"violations", report.violations.size()}}));
  return report.pass() ? kPass : kFail;
}

int run_order(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const auto radii = qm::dyadic_radii(o.depth.value_or(5));
  const std::vector<qm::Rational> shifts{qm::Rational(1, 4), qm::Rational(1), qm::Rational(3)};
  const auto report = qm::check_order_laws(s, radii, shifts);
  for (const auto& v : report.violations) {
    Json balls = Json::array();
    for (const auto& b : v.balls) balls.push_back(ball_json(s, b));
    Json r{{"type", "violation"}, {"law", v.law}, {"balls", balls}};
    if (v.shift) r["shift"] = qm::to_string(*v.shift);
    out.record(r);
  }
  out.record(summary("order", report.pass() ? "pass" : "fail",
                     Json{{"balls", report.balls}, {"violations", report.violations.size()}}));
  return report.pass() ? kPass : kFail;
}

int run_wb(const Options& o, Printer& out) {
  const Json spec = qm::read_json_file(o.input);
  const qm::Space s = qm::space_from_json(spec);
  const qm::BallLiteral a = qm::parse_ball(o.ball_a);
  const qm::BallLiteral b = qm::parse_ball(o.ball_b);
  const unsigned depth = o.depth.value_or(qm::kDefaultRefuterDepth);
  const qm::Verdict v = qm::way_below(s, qm::resolve(s, a), qm::resolve(s, b), depth);
  if (v.witness) {
    out.record(Json{{"type", "witness"},
                    {"verb", "wb"},
                    {"space", spec},
                    {"a", qm::to_string(a)},
                    {"b", qm::to_string(b)},
                    {"witness", qm::witness_to_json(*v.witness)}});
  }
  Json extra = qm::verdict_to_json(v);
  extra.erase("witness");
  extra.erase("status");
  extra["a"] = qm::to_string(a);
  extra["b"] = qm::to_string(b);
  out.record(summary("wb", std::string(qm::status_name(v.status)), extra));
  return status_code(v.status);
}

int run_standard(const Options& o, Printer& out) {
  const Json spec = qm::read_json_file(o.input);
  const qm::Space s = qm::space_from_json(spec);
  const Json family_json = qm::read_json_file(o.family);
  const qm::DirectedFamily family = qm::family_from_json(s, family_json);
  const qm::BallLiteral sup = qm::parse_ball(o.sup);
  const qm::Rational shift = qm::parse_rational(o.shift);
  const unsigned depth = o.depth.value_or(qm::kDefaultRefuterDepth);
  const qm::Verdict v = qm::standardness_probe(s, family, sup, shift, {}, depth);
  if (v.witness) {
    out.record(Json{{"type", "witness"},
                    {"verb", "standard"},
                    {"space", spec},
                    {"family", family_json},
                    {"sup", qm::to_string(sup)},
                    {"shift", qm::to_string(shift)},
                    {"witness", qm::witness_to_json(*v.witness)}});
  }
  Json extra = qm::verdict_to_json(v);
  extra.erase("witness");
  extra.erase("status");
  out.record(summary("standard", std::string(qm::status_name(v.status)), extra));
  return status_code(v.status);
}

int run_centers(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  Json rows = Json::array();
  for (qm::PointId x = 0; x < s.size(); ++x) {
    rows.push_back(Json{{"point", s.name(x)}, {"center", qm::center_point_check(s, x)}});
  }
  out.record(Json{{"type", "points"}, {"table", rows}});
  const auto centers = qm::center_points(s);
  out.record(summary("centers", "pass", Json{{"centers", list_of(s, centers)}}));
  return kPass;
}

int run_smyth(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const auto report = qm::smyth_probe(s, o.budget.value_or(qm::kDefaultAxiomBudget), o.seed);
  for (const auto& [a, b] : report.gaps) {
    out.record(Json{{"type", "gap"}, {"a", ball_json(s, a)}, {"b", ball_json(s, b)}});
  }
  out.record(summary("smyth", report.consistent() ? "pass" : "fail",
                     Json{{"non_centers", list_of(s, report.non_centers)},
                          {"gaps", report.gaps.size()},
                          {"pairs_checked", report.pairs_checked},
                          {"exhaustive", report.exhaustive},
                          {"seed", report.seed}}));
  return report.consistent() ? kPass : kFail;
}

qm::OpenSet open_option(const qm::Space& s, const std::string& text) {
  std::vector<qm::PointId> pts;
  for (const auto& name : split_list(text)) pts.push_back(s.point(name));
  return qm::OpenSet(s, pts);
}

int run_envelope(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const qm::LscFunction f = qm::function_from_json(s, qm::read_json_file(o.function));
  const qm::Rational alpha = qm::parse_rational(o.alpha);
  const qm::LscFunction g = qm::envelope(s, f, alpha);
  Json rows = Json::array();
  for (qm::PointId x = 0; x < s.size(); ++x) {
    rows.push_back(Json{{"point", s.name(x)}, {"f", f[x].to_string()}, {"envelope", g[x].to_string()}});
  }
  out.record(Json{{"type", "values"}, {"table", rows}});
  const auto check = qm::lipschitz_check(s, g, alpha);
  const bool below = [&] {
    for (qm::PointId x = 0; x < s.size(); ++x) {
      if (g[x] > f[x]) return false;
    }
    return true;
  }();
  const bool ok = check.pass() && check.lift_monotone && below;
  Json extra{{"alpha", qm::to_string(alpha)},
             {"lipschitz", check.pass()},
             {"lift_monotone", check.lift_monotone},
             {"below", below},
             {"f_monotone", qm::is_monotone(s, f)}};
  if (auto t = qm::lipschitz_threshold(s, f)) extra["threshold"] = qm::to_string(*t);
  out.record(summary("envelope", ok ? "pass" : "fail", extra));
  return ok ? kPass : kFail;
}

int run_dist(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const qm::OpenSet u = open_option(s, o.open);
  Json rows = Json::array();
  for (qm::PointId x = 0; x < s.size(); ++x) {
    rows.push_back(Json{{"point", s.name(x)},
                        {"in_open", u.contains(x)},
                        {"dist", qm::dist_to_complement(s, x, u).to_string()}});
  }
  out.record(Json{{"type", "values"}, {"table", rows}});
  out.record(summary("dist", "pass", Json{{"open", qm::open_to_json(s, u)}}));
  return kPass;
}

int run_thin(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const qm::OpenSet u = open_option(s, o.open);
  const qm::Rational r = qm::parse_rational(o.radius);
  const qm::OpenSet t = qm::thinning(s, u, r);
  out.record(summary("thin", "pass",
                     Json{{"open", qm::open_to_json(s, u)}, {"radius", qm::to_string(r)}, {"thinned", qm::open_to_json(s, t)}}));
  return kPass;
}

Json completion_json(const std::vector<std::string>& names, const qm::Completion& c) {
  Json ideals = Json::array();
  for (auto m : c.ideals) ideals.push_back(qm::subset_name(names, m));
  return ideals;
}

void maybe_dot(const Options& o, const std::string& dot) {
  if (!o.dot.empty()) qm::write_text_file(o.dot, dot);
}

int run_rideal(const Options& o, Printer& out) {
  const Json j = qm::read_json_file(o.input);
  try {
    const qm::AbstractBasis b = qm::basis_from_json(j);
    const auto c = qm::rounded_ideal_completion(b);
    for (std::size_t e = 0; e < b.size(); ++e) {
      if (c.embedding[e]) {
        out.record(Json{{"type", "embedding"}, {"element", b.names()[e]}, {"ideal", qm::subset_name(b.names(), c.ideals[*c.embedding[e]])}});
      }
    }
    maybe_dot(o, qm::export_dot(c.poset));
    out.record(summary("rideal", "pass", Json{{"ideals", completion_json(b.names(), c)}}));
    return kPass;
  } catch (const qm::NotAnAbstractBasis& e) {
    std::vector<std::string> names;
    for (const auto& n : j.at("elements")) names.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    Json lower = Json::array();
    for (auto i : e.lower()) lower.push_back(names.at(i));
    out.record(Json{{"type", "witness"}, {"verb", "rideal"}, {"lower", lower}, {"upper", names.at(e.upper())}, {"reason", e.what()}});
    out.record(summary("rideal", "fail"));
    return kFail;
  }
}

int run_idl(const Options& o, Printer& out) {
  const qm::FinitePoset p = qm::poset_from_json(qm::read_json_file(o.input));
  const auto c = qm::ideal_completion(p);
  maybe_dot(o, qm::export_dot(c.poset));
  out.record(summary("idl", "pass", Json{{"ideals", completion_json(p.names(), c)}}));
  return kPass;
}

int run_qideal(const Options& o, Printer& out) {
  const qm::Space s = qm::space_from_json(qm::read_json_file(o.input));
  const qm::ModelPoset m = qm::build_model(s, o.depth.value_or(qm::kDefaultModelDepth));
  const auto r = qm::quasi_ideal_model_check(m);
  if (!o.model.empty()) qm::write_text_file(o.model, qm::model_to_json(m).dump(2) + "\n");
  if (!r.order_violation && !o.dot.empty()) maybe_dot(o, qm::model_dot(m));
  for (const auto& [i, j] : r.layering_violations) {
    out.record(Json{{"type", "violation"}, {"check", "layering"}, {"below", m.labels[i]}, {"above", m.labels[j]}});
  }
  Json extra{{"elements", m.size()},
             {"depth", m.depth},
             {"partial_order", !r.order_violation},
             {"layering", r.layering()},
             {"chain_bound", r.chain_bound},
             {"limit_isomorphic", r.limit_isomorphic},
             {"quasi_ideal", r.quasi_ideal.pass()},
             {"halving", r.halving_violations.empty()}};
  if (r.longest_chain) extra["longest_chain"] = *r.longest_chain;
  out.record(summary("qideal-model", r.pass() ? "pass" : "fail", extra));
  return r.pass() ? kPass : kFail;
}

int run_choquet(const Options& o, Printer& out) {
  const qm::FinitePoset p = qm::poset_from_json(qm::read_json_file(o.input));
  const std::size_t depth = o.depth.value_or(4);
  const bool random = o.budget.has_value();
  const auto sum = random ? qm::choquet_random(p, depth, *o.budget, o.seed) : qm::choquet_exhaustive(p, depth);
  if (sum.first_failure) {
    Json rounds = Json::array();
    for (const auto& r : sum.first_failure->rounds) {
      rounds.push_back(Json{{"x", p.name(r.beta.point)},
                            {"V", qm::subset_name(p.names(), r.beta.open)},
                            {"y", p.name(r.alpha_point)},
                            {"U", qm::subset_name(p.names(), r.alpha_open)}});
    }
    out.record(Json{{"type", "witness"}, {"verb", "choquet"}, {"rounds", rounds}});
  }
  Json extra{{"depth", depth},
             {"exhaustive", !random},
             {"plays", sum.plays},
             {"alpha_wins", sum.alpha_wins},
             {"intersections_equal", sum.intersections_equal}};
  if (random) extra["seed"] = o.seed;
  out.record(summary("choquet", sum.all_good() ? "pass" : "fail", extra));
  return sum.all_good() ? kPass : kFail;
}

int run_export(const Options& o, Printer& out) {
  const Json j = qm::read_json_file(o.input);
  const std::string kind = j.is_object() && j.contains("kind") ? j["kind"].get<std::string>() : "";
  qm::FinitePoset p;
  if (kind == "poset") {
    p = qm::poset_from_json(j);
  } else {
    const qm::Space s = qm::space_from_json(j);
    p = qm::FinitePoset(s.names(), qm::specialization_order(s));
  }
  const std::string dot = qm::export_dot(p);
  if (o.dot.empty()) {
    std::cout << dot;
    return kPass;
  }
  qm::write_text_file(o.dot, dot);
  out.record(summary("export", "pass", Json{{"dot", o.dot}, {"elements", p.size()}}));
  return kPass;
}

// A replay file holds a witness record, possibly among other records.
Json find_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qm::InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  std::vector<Json> docs;
  try {
    docs.push_back(Json::parse(content));
  } catch (const Json::parse_error&) {
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        docs.push_back(Json::parse(line));
      } catch (const Json::parse_error& e) {
        throw qm::InputError("'" + path + "' is not JSON: " + e.what());
      }
    }
  }
  for (const auto& d : docs) {
    if (d.is_object() && d.value("type", "") == "witness") return d;
  }
  throw qm::InputError("'" + path + "' contains no witness record");
}

int run_replay(const std::string& path, Printer& out) {
  const Json w = find_witness(path);
  const std::string verb = w.value("verb", "");
  std::optional<std::string> failure;
  if (verb == "wb") {
    const qm::Space s = qm::space_from_json(w.at("space"));
    failure = qm::replay_way_below(s, qm::parse_ball(w.at("a").get<std::string>()),
                                   qm::parse_ball(w.at("b").get<std::string>()), qm::witness_from_json(w.at("witness")));
  } else if (verb == "standard") {
    const qm::Space s = qm::space_from_json(w.at("space"));
    failure = qm::replay_standardness(s, qm::family_from_json(s, w.at("family")),
                                      qm::parse_ball(w.at("sup").get<std::string>()),
                                      qm::parse_rational(w.at("shift").get<std::string>()),
                                      qm::witness_from_json(w.at("witness")));
  } else if (verb == "axioms") {
    const qm::Space s = qm::space_from_json(w.at("space"));
    const Json& v = w.at("violation");
    std::vector<qm::PointId> pts;
    for (const auto& n : v.at("witness")) pts.push_back(s.point(n.get<std::string>()));
    const std::string axiom = v.at("axiom").get<std::string>();
    if (axiom == "triangle" && pts.size() == 3) {
      if (!(s.dist(pts[0], pts[2]) > s.dist(pts[0], pts[1]) + s.dist(pts[1], pts[2]))) failure = "triangle holds";
    } else if (axiom == "reflexivity" && pts.size() == 1) {
      if (s.dist(pts[0], pts[0]).is_zero()) failure = "distance to itself is 0";
    } else if (axiom == "separation" && pts.size() == 2) {
      if (!(s.dist(pts[0], pts[1]).is_zero() && s.dist(pts[1], pts[0]).is_zero() && pts[0] != pts[1])) {
        failure = "points are separated";
      }
    } else {
      failure = "malformed violation";
    }
  } else {
    throw qm::InputError("cannot replay witnesses of verb '" + verb + "'");
  }
  if (failure) {
    std::cerr << "qm: witness does not replay: " << *failure << '\n';
    out.record(summary("replay", "invalid", Json{{"of", verb}, {"reason", *failure}}));
    return kUsage;
  }
  out.record(summary("replay", "refuted", Json{{"of", verb}}));
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal balls over finite quasi-metric spaces", "qm"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");
  app.add_option("--depth", o.depth, "Search or construction depth");
  app.add_option("--budget", o.budget, "Sample budget");
  app.add_option("--alpha", o.alpha, "Lipschitz constant p/q");
  app.add_option("--dot", o.dot, "Write DOT output to this path");
  app.add_flag("--pretty", o.pretty, "Human-readable tables");
  app.add_option("--replay", o.replay, "Replay a witness file");

  auto verb = [&](const char* name, const char* help, const char* input_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", o.input, input_help)->required();
    return sub;
  };
  CLI::App* axioms = verb("axioms", "Check the quasi-metric axioms", "space JSON");
  CLI::App* order = verb("order", "Check the laws of the formal-ball order", "space JSON");
  CLI::App* wb = verb("wb", "Decide or refute way-below between two balls", "space JSON");
  wb->add_option("a", o.ball_a, "ball \"(x, r)\"")->required();
  wb->add_option("b", o.ball_b, "ball \"(y, s)\"")->required();
  CLI::App* standard = verb("standard", "Probe standardness on a directed family", "space JSON");
  standard->add_option("--family", o.family, "family JSON")->required();
  standard->add_option("--sup", o.sup, "known supremum \"(x, r)\"")->required();
  standard->add_option("--shift", o.shift, "radius shift p/q");
  CLI::App* centers = verb("centers", "List center points", "space JSON");
  CLI::App* smyth = verb("smyth", "Probe Smyth-completeness", "space JSON");
  CLI::App* envelope = verb("envelope", "Lipschitz envelope of a function", "space JSON");
  envelope->add_option("--function", o.function, "function JSON")->required();
  CLI::App* dist = verb("dist", "Distance to the complement of an open set", "space JSON");
  dist->add_option("--open", o.open, "comma-separated points of the open set")->required();
  CLI::App* thin = verb("thin", "Thinning of an open set", "space JSON");
  thin->add_option("--open", o.open, "comma-separated points of the open set")->required();
  thin->add_option("--radius", o.radius, "radius p/q");
  CLI::App* rideal = verb("rideal", "Rounded-ideal completion of an abstract basis", "basis JSON");
  CLI::App* idl = verb("idl", "Ideal completion of a poset", "poset JSON");
  CLI::App* qideal = verb("qideal-model", "Build and check the quasi-ideal model", "space JSON");
  qideal->add_option("--model", o.model, "Write the model poset JSON to this path");
  CLI::App* choquet = verb("choquet", "Play the strong Choquet game", "poset JSON");
  CLI::App* exporter = verb("export", "Export a poset or specialization order as DOT", "poset or space JSON");
  CLI::App* replay = verb("replay", "Replay a witness", "witness JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qm: " << e.what() << '\n';
    return kUsage;
  }

  Printer out(o.pretty);
  try {
    if (!o.replay.empty()) return run_replay(o.replay, out);
    if (axioms->parsed()) return run_axioms(o, out);
    if (order->parsed()) return run_order(o, out);
    if (wb->parsed()) return run_wb(o, out);
    if (standard->parsed()) return run_standard(o, out);
    if (centers->parsed()) return run_centers(o, out);
    if (smyth->parsed()) return run_smyth(o, out);
    if (envelope->parsed()) return run_envelope(o, out);
    if (dist->parsed()) return run_dist(o, out);
    if (thin->parsed()) return run_thin(o, out);
    if (rideal->parsed()) return run_rideal(o, out);
    if (idl->parsed()) return run_idl(o, out);
    if (qideal->parsed()) return run_qideal(o, out);
    if (choquet->parsed()) return run_choquet(o, out);
    if (exporter->parsed()) return run_export(o, out);
    if (replay->parsed()) return run_replay(o.input, out);
    std::cerr << "qm: no verb given\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qm: " << e.what() << '\n';
    return kUsage;
  }
}
