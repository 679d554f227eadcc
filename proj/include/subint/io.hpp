#pragma once

#include "fmt.hpp"
#include "hilbert.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace subint
{

using json = nlohmann::json;

// Model files:
//
//   {"kind": "prop" | "modal",
//    "worlds": ["0", "1", ...],
//    "root": "0",                                   prop only
//    "relations": [{"index": "top -> p", "edges": [["0", "1"], ...]}, ...],
//    "default": "total" | {"edges": [...]},        optional, total if absent
//    "valuation": {"1": ["p", "q"], ...}}           unlisted worlds: nothing true
//
// Problems are reported as model_error with a JSON pointer to the culprit.

using any_model = std::variant< prop_model, modal_model >;

any_model model_from_json( const json& j );
json to_json( const prop_model& m );
json to_json( const modal_model& m );

// Proof files:
//
//   {"logic": "vf" | "n", "axioms": [text, ...],
//    "lines": [{"formula": text,
//               "by": {"schema": 1..7, "subst": {"A": text, ...}}
//                   | {"rule": "RC" | "RD" | "RI" | "MP" | "AF" | "Nec", "from": [i, j]}
//                   | {"taut": true}
//                   | {"extra": k}}, ...]}

using any_proof = std::variant< vf_proof, n_proof >;

any_proof proof_from_json( const json& j );
json to_json( const vf_proof& p );
json to_json( const n_proof& p );

/// Reads a whole file as JSON; model_error on I/O or syntax problems.
json load_json( const std::string& path );

/// One digraph per explicit index, plus the default relation when it is
/// not total. A total default is only mentioned in a legend.
std::string to_dot( const prop_model& m );
std::string to_dot( const modal_model& m );

} // namespace subint
