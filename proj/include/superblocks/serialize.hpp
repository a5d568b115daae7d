#pragma once

// JSON and DOT encodings shared by the CLI and the tests.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; readers accept both. Indices (roots, permutations) are 1-based.
//
//   weight      [2, 0, 1, 0]
//   permutation [3, 1, 2]
//   root        [1, 3]                       e_1 - e_3
//   move        {"kind": "odd", "root": [1, 3], "sign": -1}
//               {"kind": "even", "w": [2, 1, 3], "translation": [3, -3, 0]}
//   chain       [{"weight": [..], "move": null}, {"weight": [..], "move": {..}}, ...]
//   character   [{"exponent": [..], "coeff": k}, ...]   lexicographic exponent order

#include "superblocks/characters.hpp"
#include "superblocks/linkage.hpp"

#include <json.hpp>

#include <string>

namespace superblocks {

using json = nlohmann::json;

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json to_json(const Weight& lambda);
Weight weight_from_json(const json& j, const Shape& shape);

json to_json(const Permutation& w);
Permutation permutation_from_json(const json& j, std::size_t size);

json to_json(const Root& alpha);
Root root_from_json(const json& j, const Shape& shape);

json to_json(const Move& move);
Move move_from_json(const json& j, const Shape& shape);

json to_json(const LinkageChain& chain);
/// Throws std::invalid_argument on a malformed document; does not validate moves.
LinkageChain chain_from_json(const json& j, const Shape& shape);

json to_json(const CharacterPoly& c);
CharacterPoly character_from_json(const json& j, const Shape& shape);

json to_json(const Defect& d);
json to_json(const Fingerprint& f);
json to_json(const SameBlockResult& result);
json to_json(const BlockPartition& partition);

/// `odd(e1-e3)` or `even(2,1,3)`
std::string move_label(const Move& move);

/// Undirected graph in the DOT language; node names are weight literals.
std::string to_dot(const BlockGraph& graph);

}  // namespace superblocks
