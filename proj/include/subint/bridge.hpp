#pragma once

#include "fmt.hpp"
#include "formula.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace subint
{

/// The unique A with corsi(A) == b, if there is one.
std::optional< prop_formula > inverse_corsi( const modal_formula& b );

/// Same worlds and valuation, no root. Index C^c -> D^c gets the
/// propositional relation of C -> D; every other index is total.
///
/// Explicit propositional indices are carried over directly. When the
/// propositional default is not total, implications in `formulas` that use
/// it get an explicit copy, since no single modal default can give total
/// relations to non-images and the propositional default to images.
modal_model prop_to_modal( const prop_model& m, std::span< const prop_formula > formulas = {} );

/// Adds a fresh root r (last world id) that reaches every world under every
/// index and makes every atom of `atom_universe` true. For an implication
/// C -> D whose image C^c -> D^c is an explicit modal index, the old worlds
/// keep that modal relation; for any other index they keep the modal
/// default. Old worlds never reach r.
prop_model modal_to_prop( const modal_model& m, const std::set< std::string >& atom_universe );

// Forcing comparison between a source model and its transfer.
struct transfer_disagreement
{
    world_id world;
    std::string formula;
    bool source;
    bool target;
};

struct transfer_report
{
    std::size_t comparisons = 0;
    std::vector< transfer_disagreement > disagreements;
};

/// forces(m, x, A) vs forces(prop_to_modal(m), x, corsi(A)) at every world.
transfer_report compare_prop_to_modal( const prop_model& m, std::span< const prop_formula > formulas );

/// forces(modal_to_prop(m), x, A) vs forces(m, x, corsi(A)) at every old world.
transfer_report compare_modal_to_prop( const modal_model& m, std::span< const prop_formula > formulas );

} // namespace subint
