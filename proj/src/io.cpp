#include "qm/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qm {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) throw InputError(std::string("unexpected key '") + key + "' in " + what);
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw InputError(std::string(what) + " is missing '" + key + "'");
  return j.at(key);
}

std::string text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError("expected a number in text form, got " + j.dump());
}

std::vector<std::string> names_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(text(e));
  return out;
}

Relation relation_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw InputError(std::string(what) + " must have one row per element");
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != n) throw InputError(std::string(what) + " row has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_boolean()) throw InputError(std::string(what) + " entries must be booleans");
      r.set(i, k, row[k].get<bool>());
    }
  }
  return r;
}

Json relation_to_json(const Relation& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.size(); ++k) row.push_back(r(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> rationals(const Json& j) {
  if (!j.is_array()) throw InputError("'values' must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json ball_json(const BallLiteral& b) { return to_string(b); }

BallLiteral ball_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("ball literal must be a string");
  return parse_ball(j.get<std::string>());
}

}  // namespace

Rational rational_from_json(const Json& j) { return parse_rational(text(j)); }

ExtReal extreal_from_json(const Json& j) { return ExtReal::parse(text(j)); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

Space space_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("space must be a JSON object");
  const std::string kind = text(field(j, "kind", "space"));
  if (kind == "table") {
    require_keys(j, {"kind", "points", "dist"}, "table space");
    auto names = names_from_json(field(j, "points", "table space"), "'points'");
    const Json& dist = field(j, "dist", "table space");
    if (!dist.is_array()) throw InputError("'dist' must be an array of rows");
    std::vector<std::vector<ExtReal>> table;
    for (const auto& row : dist) {
      if (!row.is_array()) throw InputError("'dist' rows must be arrays");
      std::vector<ExtReal> r;
      for (const auto& e : row) r.push_back(extreal_from_json(e));
      table.push_back(std::move(r));
    }
    return Space::finite_table(std::move(names), std::move(table));
  }
  if (kind == "dreal") {
    require_keys(j, {"kind", "values"}, "dreal space");
    const Json& values = field(j, "values", "dreal space");
    if (!values.is_array()) throw InputError("'values' must be an array");
    std::vector<ExtReal> v;
    for (const auto& e : values) v.push_back(extreal_from_json(e));
    return Space::dreal_grid(v);
  }
  if (kind == "sorgenfrey") {
    require_keys(j, {"kind", "values"}, "sorgenfrey space");
    return Space::sorgenfrey_grid(rationals(field(j, "values", "sorgenfrey space")));
  }
  if (kind == "poset") return Space::poset(poset_from_json(j));
  if (kind == "remark") {
    require_keys(j, {"kind", "a", "values"}, "remark space");
    return Space::remark_nonstandard(rational_from_json(field(j, "a", "remark space")),
                                     rationals(field(j, "values", "remark space")));
  }
  if (kind == "ng-nonstd") {
    require_keys(j, {"kind", "a", "b", "c", "values"}, "ng-nonstd space");
    return Space::ng_nonstandard(rational_from_json(field(j, "a", "ng-nonstd space")),
                                 rational_from_json(field(j, "b", "ng-nonstd space")),
                                 rational_from_json(field(j, "c", "ng-nonstd space")),
                                 rationals(field(j, "values", "ng-nonstd space")));
  }
  throw InputError("unknown space kind '" + kind + "'");
}

Json space_to_json(const Space& s) {
  Json j;
  j["kind"] = std::string(kind_name(s.kind()));
  auto values = [&] {
    Json v = Json::array();
    for (const auto& c : s.grid()) v.push_back(to_string(c));
    return v;
  };
  switch (s.kind()) {
    case SpaceKind::FiniteTable: {
      j["points"] = s.names();
      Json rows = Json::array();
      for (PointId x = 0; x < s.size(); ++x) {
        Json row = Json::array();
        for (PointId y = 0; y < s.size(); ++y) row.push_back(s.dist(x, y).to_string());
        rows.push_back(std::move(row));
      }
      j["dist"] = std::move(rows);
      break;
    }
    case SpaceKind::Poset:
      j["elements"] = s.names();
      j["leq"] = relation_to_json(s.as_poset()->relation());
      break;
    case SpaceKind::DRealGrid:
    case SpaceKind::SorgenfreyGrid:
      j["values"] = values();
      break;
    case SpaceKind::RemarkNonStandard:
      j["a"] = to_string(s.parameters()[0]);
      j["values"] = values();
      break;
    case SpaceKind::NgNonStandardWB:
      j["a"] = to_string(s.parameters()[0]);
      j["b"] = to_string(s.parameters()[1]);
      j["c"] = to_string(s.parameters()[2]);
      j["values"] = values();
      break;
  }
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  require_keys(j, {"kind", "elements", "leq"}, "poset");
  if (j.contains("kind") && text(j["kind"]) != "poset") throw InputError("expected kind 'poset'");
  auto names = names_from_json(field(j, "elements", "poset"), "'elements'");
  Relation r = relation_from_json(field(j, "leq", "poset"), names.size(), "'leq'");
  return FinitePoset(std::move(names), std::move(r));
}

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["kind"] = "poset";
  j["elements"] = p.names();
  j["leq"] = relation_to_json(p.relation());
  return j;
}

AbstractBasis basis_from_json(const Json& j) {
  require_keys(j, {"kind", "elements", "prec"}, "basis");
  if (j.contains("kind") && text(j["kind"]) != "basis") throw InputError("expected kind 'basis'");
  auto names = names_from_json(field(j, "elements", "basis"), "'elements'");
  Relation r = relation_from_json(field(j, "prec", "basis"), names.size(), "'prec'");
  return AbstractBasis(std::move(names), std::move(r));
}

Json basis_to_json(const AbstractBasis& b) {
  Json j;
  j["kind"] = "basis";
  j["elements"] = b.names();
  j["prec"] = relation_to_json(b.relation());
  return j;
}

LscFunction function_from_json(const Space& s, const Json& j) {
  require_keys(j, {"values"}, "function");
  const Json& values = field(j, "values", "function");
  if (!values.is_object()) throw InputError("'values' must map point names to values");
  std::vector<std::optional<ExtReal>> f(s.size());
  for (const auto& [key, value] : values.items()) {
    const PointId x = s.point(key);
    if (f[x]) throw InputError("function gives two values for '" + s.name(x) + "'");
    f[x] = extreal_from_json(value);
  }
  LscFunction out;
  for (PointId x = 0; x < s.size(); ++x) {
    if (!f[x]) throw InputError("function has no value for '" + s.name(x) + "'");
    out.push_back(*f[x]);
  }
  return out;
}

Json function_to_json(const Space& s, const LscFunction& f) {
  Json values = Json::object();
  for (PointId x = 0; x < s.size(); ++x) values[s.name(x)] = f.at(x).to_string();
  return Json{{"values", values}};
}

OpenSet open_from_json(const Space& s, const Json& j) {
  std::vector<PointId> pts;
  for (const auto& name : names_from_json(j, "open set")) pts.push_back(s.point(name));
  return OpenSet(s, pts);
}

Json open_to_json(const Space& s, const OpenSet& u) {
  Json j = Json::array();
  for (PointId x : u.points()) j.push_back(s.name(x));
  return j;
}

Json scripted_to_json(const ScriptedFamily& f) {
  const auto& p = f.parameters();
  switch (f.kind()) {
    case ScriptedFamily::Kind::Descending: return Json{{"family", "descending"}, {"s", to_string(p[0])}};
    case ScriptedFamily::Kind::Unbounded: return Json{{"family", "unbounded"}, {"s", to_string(p[0])}};
    case ScriptedFamily::Kind::FromLeft:
      return Json{{"family", "from-left"}, {"y", to_string(p[0])}, {"s", to_string(p[1])}};
  }
  return {};
}

ScriptedFamily scripted_from_json(const Json& j) {
  const std::string name = text(field(j, "family", "family"));
  if (name == "descending") {
    require_keys(j, {"family", "s"}, "family");
    return ScriptedFamily::descending(rational_from_json(field(j, "s", "family")));
  }
  if (name == "unbounded") {
    require_keys(j, {"family", "s"}, "family");
    return ScriptedFamily::unbounded(rational_from_json(field(j, "s", "family")));
  }
  if (name == "from-left") {
    require_keys(j, {"family", "y", "s"}, "family");
    return ScriptedFamily::from_left(rational_from_json(field(j, "y", "family")),
                                     rational_from_json(field(j, "s", "family")));
  }
  throw InputError("unknown scripted family '" + name + "'");
}

DirectedFamily family_from_json(const Space& s, const Json& j) {
  if (!j.is_object()) throw InputError("family must be a JSON object");
  if (j.contains("family")) return scripted_from_json(j);
  require_keys(j, {"members"}, "family");
  const Json& members = field(j, "members", "family");
  if (!members.is_array() || members.empty()) throw InputError("'members' must be a non-empty array");
  std::vector<FormalBall> out;
  for (const auto& m : members) out.push_back(resolve(s, ball_from_json(m)));
  return out;
}

Json family_to_json(const Space& s, const DirectedFamily& f) {
  if (const auto* scripted = std::get_if<ScriptedFamily>(&f)) return scripted_to_json(*scripted);
  Json members = Json::array();
  for (const auto& b : std::get<std::vector<FormalBall>>(f)) members.push_back(ball_json(literal(s, b)));
  return Json{{"members", members}};
}

Json witness_to_json(const RefutationWitness& w) {
  Json j;
  j["shape"] = std::string(shape_name(w.shape));
  if (w.scripted) j["family"] = scripted_to_json(*w.scripted);
  Json members = Json::array();
  for (const auto& m : w.members) members.push_back(ball_json(m));
  j["members"] = std::move(members);
  j["sup"] = ball_json(w.sup);
  if (w.failing) j["failing"] = ball_json(*w.failing);
  return j;
}

RefutationWitness witness_from_json(const Json& j) {
  require_keys(j, {"shape", "family", "members", "sup", "failing"}, "witness");
  RefutationWitness w;
  const std::string shape = text(field(j, "shape", "witness"));
  bool known = false;
  for (auto s : {FamilyShape::Singleton, FamilyShape::EpsilonChain, FamilyShape::GridChain, FamilyShape::Scripted,
                 FamilyShape::Finite}) {
    if (shape_name(s) == shape) {
      w.shape = s;
      known = true;
    }
  }
  if (!known) throw InputError("unknown witness shape '" + shape + "'");
  if (j.contains("family")) w.scripted = scripted_from_json(j["family"]);
  const Json& members = field(j, "members", "witness");
  if (!members.is_array()) throw InputError("'members' must be an array");
  for (const auto& m : members) w.members.push_back(ball_from_json(m));
  w.sup = ball_from_json(field(j, "sup", "witness"));
  if (j.contains("failing")) w.failing = ball_from_json(j["failing"]);
  return w;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(status_name(v.status));
  j["justification"] = v.justification;
  j["depth"] = v.depth;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

Json axiom_report_to_json(const Space& s, const AxiomReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["triples_checked"] = r.triples_checked;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json w = Json::array();
    for (PointId x : v.witness) w.push_back(s.name(x));
    violations.push_back(Json{{"axiom", std::string(axiom_name(v.axiom))},
                              {"witness", std::move(w)},
                              {"lhs", v.lhs.to_string()},
                              {"rhs", v.rhs.to_string()}});
  }
  j["violations"] = std::move(violations);
  return j;
}

Json model_to_json(const ModelPoset& m) {
  Json j;
  j["kind"] = "poset";
  j["elements"] = m.labels;
  j["leq"] = relation_to_json(m.order);
  Json radius = Json::array();
  for (const auto& b : m.nodes) radius.push_back(to_string(b.radius));
  j["radius"] = std::move(radius);
  return j;
}

}  // namespace qm
