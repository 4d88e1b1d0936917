#pragma once

#include <json.hpp>
#include <string>

#include "latcomp/congruence.hpp"
#include "latcomp/constructions.hpp"
#include "latcomp/morphism.hpp"
#include "latcomp/terms.hpp"

namespace latcomp {

using Json = nlohmann::ordered_json;

/// { "labels": [...], "covers": [[i,j],...] }, covers sorted; readers also
/// accept the { "labels": [...], "leq": [[bool,...],...] } form.
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& doc);

/// Lattice document plus { "complement": [j0, j1, ...] }.
Json algebra_to_json(const CompLattice& a);
CompLattice algebra_from_json(const Json& doc);

/// { "blocks": [[i,...],...] }, blocks sorted by least element.
Json congruence_to_json(const Congruence& c);
Congruence congruence_from_json(const Json& doc, int carrier_size);

/// { "map": [j0, j1, ...] }.
Json isomorphism_to_json(const Isomorphism& iso);
Isomorphism isomorphism_from_json(const Json& doc);

/// { "k": int, "S": { "<bitstring>": [comp table] } }.
Json action_to_json(const Action& s);
Action action_from_json(const Json& doc);

/// { "premises": [{"lhs": "...", "rhs": "..."}], "conclusion": {...} } with
/// term strings in the prefix s-expression format.
Formula formula_from_json(const Json& doc);

Json load_json_file(const std::string& path);

}  // namespace latcomp
