#pragma once

#include "caps.hpp"
#include "decide_n.hpp"
#include "fmt.hpp"
#include "formula.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace subint
{

// Decision session for VF + X, X a finite set of closed negative axioms.
// A is provable iff corsi(A) is provable in N + X*, so every question is
// forwarded to an n_decider over X*.
class vf_decider
{
    std::vector< prop_formula > _axioms;
    n_decider _modal;

public:
    explicit vf_decider( std::vector< prop_formula > axioms, const caps& limits = {} );

    [[nodiscard]] bool decide( const prop_formula& a );
    bool operator()( const prop_formula& a ) { return decide( a ); }

    [[nodiscard]] const std::vector< prop_formula >& axioms() const { return _axioms; }
    [[nodiscard]] n_decider& modal() { return _modal; }
};

bool decide_vf( const prop_formula& a, std::vector< prop_formula > axioms, const caps& limits = {} );

// A pair (gamma, delta) of subsets of Sub_X(A).
struct tableau
{
    prop_set gamma;
    prop_set delta;

    friend bool operator==( const tableau&, const tableau& ) = default;
};

std::string to_string( const tableau& t );

/// /\gamma -> \/delta is unprovable.
bool is_consistent( vf_decider& decider, const tableau& t );

/// Greedy Lindenbaum extension over `universe` in canonical order: each
/// formula goes to gamma when that stays consistent, otherwise to delta.
/// Throws precondition_error when `t` is inconsistent.
tableau saturate( vf_decider& decider, tableau t, const prop_set& universe );

/// Every saturated consistent tableau over `universe`. Consistency is
/// inherited by sub-tableaux, so inconsistent prefixes are cut off early.
std::vector< tableau > saturated_tableaux( vf_decider& decider, const prop_set& universe );

/// Same set, by filtering all 2^n two-colourings. Exponential; reference
/// implementation for testing.
std::vector< tableau > saturated_tableaux_by_filter( vf_decider& decider, const prop_set& universe );

/// Delta holds every implication B -> C of `universe` such that some world
/// has B in gamma and C in delta; gamma is empty. Returns the saturation.
tableau root_tableau( vf_decider& decider, const std::vector< tableau >& worlds, const prop_set& universe );

struct vf_countermodel
{
    prop_model model;
    world_id refuting;
    std::vector< tableau > worlds; // indexed like the model's worlds
    prop_set closure;              // Sub_X(A)

    // Verification gates, all of which must pass.
    bool root_condition = false;
    bool truth_lemma = false;
    std::vector< bool > axioms_valid; // one flag per member of X
    bool refutes = false;

    [[nodiscard]] bool all_gates() const
    {
        bool ok = root_condition && truth_lemma && refutes;
        for ( bool b : axioms_valid )
            ok = ok && b;
        return ok;
    }
};

std::variant< vf_countermodel, is_theorem > build_vf_countermodel( vf_decider& decider, const prop_formula& a,
                                                                   const caps& limits = {} );

/// For every world t and every B in the closure: t forces B iff B in t.gamma.
std::optional< truth_lemma_violation > verify_truth_lemma_vf( const vf_countermodel& cm );

/// Aczel slash relative to a provability predicate.
template < typename Decide >
bool slash_with( const prop_formula& a, Decide&& provable )
{
    switch ( a.op() )
    {
    case connective::conj:
        return slash_with( a.lhs(), provable ) && slash_with( a.rhs(), provable );
    case connective::disj:
        return slash_with( a.lhs(), provable ) || slash_with( a.rhs(), provable );
    case connective::imp:
        return provable( a ) && ( !slash_with( a.lhs(), provable ) || slash_with( a.rhs(), provable ) );
    default:
        return false;
    }
}

inline bool slash( vf_decider& decider, const prop_formula& a ) { return slash_with( a, decider ); }

enum class dp_side
{
    left,
    right,
    not_provable,
};

/// When A | B is provable, a disjunct that is slashed (hence provable).
dp_side dp_split( vf_decider& decider, const prop_formula& a, const prop_formula& b );

} // namespace subint
