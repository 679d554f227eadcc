#pragma once

#include "formula.hpp"

#include <cstddef>
#include <span>

namespace subint
{

inline constexpr std::size_t default_atom_cap = 24;

// Classical reasoning over modal formulas where every boxed subformula that
// is not itself under a box counts as one more propositional letter.
//
// The alphabet is the set of atoms and such boxes; when it exceeds
// `atom_cap` a resource_error is thrown rather than risking an exponential
// search.

/// Is the conjunction of `formulas` satisfiable?
bool satisfiable( std::span< const modal_formula > formulas, std::size_t atom_cap = default_atom_cap );

/// Does every assignment making all premises true make `goal` true?
bool taut_consequence( std::span< const modal_formula > premises, const modal_formula& goal,
                       std::size_t atom_cap = default_atom_cap );

inline bool is_tautology( const modal_formula& goal, std::size_t atom_cap = default_atom_cap )
{
    return taut_consequence( {}, goal, atom_cap );
}

} // namespace subint
