#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lts/cohomology.hpp"
#include "lts/extension.hpp"
#include "lts/separating.hpp"

namespace lts {

using Json = nlohmann::json;

// Ground field for loading: Qi accepts any Gaussian rational, Q rejects
// inputs that need i with FieldRestriction.
enum class Field { Q, Qi };
// Accepts "Q", "Qi" and "Q(i)"; throws Parse.
Field parse_field(std::string_view s);

// Reads and parses a file; throws Parse naming the path.
Json read_json_file(const std::string& path);
// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

// {"dim", "field", "products": [{"args": [i,j,k], "value": {"p": "c"}}]},
// listing every nonzero [e_i,e_j,e_k] with i < j.
Json lts_to_json(const Lts& T);
// Accepts that document or a catalog reference {"name": ..., "lambda": ...}.
// Malformed documents throw Parse with the offending field in the message.
// The completed table is axiom-checked unless checkAxioms is false.
Lts lts_from_json(const Json& j, Field field = Field::Qi, bool checkAxioms = true);

struct CocycleDoc {
  Lts system;
  Cocycle theta;
};
Json cocycle_to_json(const Lts& system, const Cocycle& theta);
// When base is given the "system" field may be omitted.
CocycleDoc cocycle_from_json(const Json& j, Field field = Field::Qi, const Lts* base = nullptr);

Json extension_to_json(const ExtensionSpec& spec);
ExtensionSpec extension_from_json(const Json& j, Field field = Field::Qi);

Json witness_to_json(const DegenerationWitness& w);
DegenerationWitness witness_from_json(const Json& j, Field field = Field::Qi);

Json separating_to_json(const SeparatingSet& R);
SeparatingSet separating_from_json(const Json& j, Field field = Field::Qi);

}  // namespace lts
