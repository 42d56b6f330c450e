#pragma once
// JSON interchange for presentations, invariants, elements and graphs.

#include "json.hpp"

#include <string>

#include "vsym/crysto.hpp"
#include "vsym/intlinalg.hpp"
#include "vsym/presentations.hpp"
#include "vsym/raag.hpp"
#include "vsym/schreier.hpp"

namespace vsym {

using json = nlohmann::ordered_json;

/// {"name": str, "generators": [str], "relators": [str]}
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
Presentation read_presentation(const std::string& path);

json to_json(const AbelianInvariants& a);  // {"torsion": [...], "freeRank": k}
json to_json(const Class2Quotient& q);

/// {"v": {"1,2": a, ...}, "perm": [1-based images]}
json to_json(const CrystoElement<long long>& e);
CrystoElement<long long> element_from_json(int n, const json& j);

/// {"n": n, "generators": [matrix rows for tau_1, ...]}
ActionSpec action_from_json(const json& j);

json to_json(const SimpleGraph& g, const ChordalityResult& r);

/// Generator values of a rewriting, keyed by symbol.
json gamma_table(const SchreierRewriter& rw);

json read_json_file(const std::string& path);

}  // namespace vsym
