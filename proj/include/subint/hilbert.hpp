#pragma once

#include "caps.hpp"
#include "formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace subint
{

// VF axiom schemas, over the letters A, B, C:
//
//   1  A & B -> A          5  A -> A
//   2  A & B -> B          6  bot -> A
//   3  A -> A | B          7  A & (B | C) -> (A & B) | (A & C)
//   4  B -> A | B
//
// VF rules (premises in the order listed):
//
//   RC  A -> B, A -> C  /  A -> B & C
//   RD  A -> C, B -> C  /  A | B -> C
//   RI  A -> B, B -> C  /  A -> C
//   MP  A, A -> B       /  B
//   AF  A               /  B -> A
//
// N proofs use tautologies (boxes read as letters), MP and
// Nec: C / []C.

inline constexpr int vf_schema_count = 7;

/// Schema `id` (1-based) as a formula over atoms named "A", "B", "C".
prop_formula vf_schema( int id );

struct schema_instance
{
    int schema = 0;
    std::map< std::string, prop_formula > subst; // empty: infer by matching
};

struct extra_axiom
{
    std::size_t index = 0; // into the proof's axiom list
};

struct tautology {};

enum class rule_kind
{
    rc,
    rd,
    ri,
    mp,
    af,
    nec,
};

std::string to_string( rule_kind r );
std::optional< rule_kind > parse_rule( const std::string& name );

struct rule_use
{
    rule_kind rule;
    std::vector< std::size_t > from;
};

using justification = std::variant< schema_instance, extra_axiom, tautology, rule_use >;

template < language Lang >
struct proof_line
{
    basic_formula< Lang > formula;
    justification by;
};

template < language Lang >
struct basic_proof
{
    std::vector< basic_formula< Lang > > axioms; // X for VF, Y for N
    std::vector< proof_line< Lang > > lines;

    [[nodiscard]] const basic_formula< Lang >& conclusion() const { return lines.back().formula; }
};

using vf_proof = basic_proof< prop_language >;
using n_proof = basic_proof< modal_language >;

struct proof_error
{
    std::optional< std::size_t > line; // empty for problems with the axiom list
    std::string reason;
};

/// First problem found, or nothing when every line checks.
std::optional< proof_error > check_proof( const vf_proof& proof );
std::optional< proof_error > check_proof( const n_proof& proof, std::size_t atom_cap = 24 );

/// Substitution making `schema` equal to `f`, if any.
std::optional< std::map< std::string, prop_formula > > match_schema( const prop_formula& schema,
                                                                     const prop_formula& f );

prop_formula instantiate( const prop_formula& schema, const std::map< std::string, prop_formula >& subst );

struct search_limits
{
    std::size_t depth = 3;        // rule rounds after seeding
    std::size_t max_size = 0;     // formula node cap; 0 means the goal's size
    std::size_t max_lines = 200000;
};

inline search_limits search_limits_from( const caps& c )
{
    return { c.search_depth, 0, c.search_lines };
}

// Forward-chaining saturation from axiom instances over the subformulas of
// the goal and the extra axioms. Incomplete: nothing found says nothing.
// Throws resource_error when the line budget runs out.
std::optional< vf_proof > search_vf_proof( const prop_formula& goal, const std::vector< prop_formula >& axioms,
                                           const search_limits& limits = {} );
std::optional< n_proof > search_n_proof( const modal_formula& goal, const std::vector< modal_formula >& axioms,
                                         const search_limits& limits = {} );

} // namespace subint
