#pragma once

// JSON forms of the interface types. Every *_from_json throws InputError on
// malformed or inconsistent documents.

#include "json.hpp"

#include "actorkit/actions.hpp"
#include "actorkit/constructions.hpp"
#include "actorkit/existence.hpp"
#include "actorkit/group.hpp"
#include "actorkit/report.hpp"
#include "actorkit/words.hpp"

namespace actorkit {

using json = nlohmann::json;

// Integers as numbers, other rationals as "n/d" strings, residues as numbers.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const json& j);
json field_to_json(Field f);
Field field_from_json(const json& j);

// {"field", "dim", "basis", "category", "products": [{"i", "j", "v"}]};
// zero products are omitted.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// {"B", "A", "left": [b][a][k], "right": [a][b][k]}
json action_to_json(const ActionPair& act);
ActionPair action_from_json(const json& j);

// {"kind", "target", "basis": [{"L", "R"}], "tensor", "action"}
json actor_to_json(const ActorAlgebra& actor);
ActorAlgebra actor_from_json(const json& j);

json report_to_json(const Report& r);
Report report_from_json(const json& j);

// The actor itself is included only on request.
json verdict_to_json(const Verdict& v, bool with_actor = false);

json group_to_json(const Group& g);
Group group_from_json(const json& j);

json cond4_to_json(const Cond4Result& r);

// Parses text, mapping syntax errors to InputError.
json parse_json_text(std::string_view text);

}  // namespace actorkit
