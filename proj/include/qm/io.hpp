#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qm/balls.hpp"
#include "qm/lipschitz.hpp"
#include "qm/posets.hpp"
#include "qm/qideal.hpp"
#include "qm/space.hpp"

namespace qm {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Space space_from_json(const Json& j);
Json space_to_json(const Space& s);

FinitePoset poset_from_json(const Json& j);
Json poset_to_json(const FinitePoset& p);

/// {"kind": "basis", "elements": [...], "prec": [[bool, ...], ...]}
AbstractBasis basis_from_json(const Json& j);
Json basis_to_json(const AbstractBasis& b);

/// {"values": {"point": "p/q" | "inf", ...}}, total on the carrier.
LscFunction function_from_json(const Space& s, const Json& j);
Json function_to_json(const Space& s, const LscFunction& f);

/// A list of point names.
OpenSet open_from_json(const Space& s, const Json& j);
Json open_to_json(const Space& s, const OpenSet& u);

/// {"family": "descending", "s": ...}, {"family": "unbounded", "s": ...},
/// {"family": "from-left", "y": ..., "s": ...} or {"members": ["(x, r)", ...]}.
DirectedFamily family_from_json(const Space& s, const Json& j);
Json family_to_json(const Space& s, const DirectedFamily& f);
Json scripted_to_json(const ScriptedFamily& f);
ScriptedFamily scripted_from_json(const Json& j);

Json witness_to_json(const RefutationWitness& w);
RefutationWitness witness_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);

Json axiom_report_to_json(const Space& s, const AxiomReport& r);
Json model_to_json(const ModelPoset& m);

Rational rational_from_json(const Json& j);
ExtReal extreal_from_json(const Json& j);

}  // namespace qm
