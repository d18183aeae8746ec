#pragma once

#include <string>

#include "json.hpp"
#include "lieposet/contact.hpp"
#include "lieposet/lie_algebra.hpp"
#include "lieposet/poset.hpp"
#include "lieposet/topology.hpp"

namespace lieposet {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(ParseError).
Json parse_json(const std::string& text);

/// {"n": 4, "relations": [[1,2],[2,3],[2,4]]}; relations are generators.
Poset poset_from_json(const Json& j);
/// Writes the Hasse covers as the relation list.
Json poset_to_json(const Poset& p);

/// {"dim": 7, "brackets": [[1,4,{"4": 2}], ...]}, 1-based; coefficients are
/// integers or "p/q" strings. Brackets not listed are zero.
LieAlgebra algebra_from_json(const Json& j);

/// {"steps": [{"block": "P111"}, {"block": "P112", "rule": "C", "c": 1}]};
/// "c", "a1", "a2" name the targets x, y, z.
ContactSequence sequence_from_json(const Json& j);
Json sequence_to_json(const ContactSequence& seq);

/// {"faces": [[1],[2],[1,2]]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// [[i, j, "p/q"], ...]
Json functional_to_json(const Functional& phi);

Json classification_to_json(const Classification& c);

/// Hasse diagram, bottom to top, elements of equal height on one rank.
std::string hasse_dot(const Poset& p, const std::string& name = "P");

}  // namespace lieposet
