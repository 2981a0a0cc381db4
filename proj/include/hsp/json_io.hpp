#ifndef HSP_JSON_IO_HPP
#define HSP_JSON_IO_HPP

// JSON and plain-text serialization for the command-line tool: structures,
// two-factor linear combinations over family keys, and extensional groupoids.

#include <json.hpp>

#include <string>

#include "hsp/groupoid.hpp"
#include "hsp/lincomb.hpp"
#include "hsp/species.hpp"

namespace hsp {

// {"species": "graphs", "n": 3, "edges": [[1,2],[2,3]]}
nlohmann::json structure_to_json(const HStructure& x);

// Inverse of structure_to_json.  The species field is optional and defaults
// to `species`; when both are present they must agree.  Edges are validated
// (1-based endpoints inside the carrier, no loops, no duplicates, none at all
// for sets) and normalized.  Throws std::runtime_error on invalid input.
HStructure structure_from_json(const nlohmann::json& j, const std::string& species);

// Array of {"coefficient": "p/q", "left": side, "right": side}, one entry per
// term in key order, where a side is {"side": "B"|"A", "members":
// [structure...]}.  The bracket shape of the basis-key factor decides the
// side: square brackets are multiplicative families, braces layered ones.
nlohmann::json lincomb_to_json(const LinComb& lc);

// Inverse of lincomb_to_json; rebuilds canonical family keys from the
// members.
LinComb lincomb_from_json(const nlohmann::json& terms);

// Parses the output of LinComb::to_string, "p/q·K1 ⊗ K2 + ..." or "0".
LinComb lincomb_from_text(const std::string& text);

// {"objects": [...], "morphisms": [[src,tgt,id],...],
//  "composition": [[f,g,c],...]} with one composition triple per composable
// pair, c being g∘f (f applied first).
nlohmann::json groupoid_to_json(const FiniteGroupoid& G);

// Object and morphism assignments of a functor, by index.
nlohmann::json gmap_to_json(const GroupoidMap& f);

}  // namespace hsp

#endif
