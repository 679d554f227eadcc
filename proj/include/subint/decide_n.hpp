#pragma once

#include "caps.hpp"
#include "fmt.hpp"
#include "formula.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace subint
{

// Decision session for N + Y, Y a finite set of closed modal formulas.
//
// The theorems of N + Y are exactly the classical consequences of
// Y together with []C for every theorem C (boxed subformulas read as
// letters). Only boxes occurring unnested in the goal or in Y can matter:
// any other []C is a fresh letter asserted once. Deciding a box body
// recurses on strictly smaller formulas, except that boxes inside Y can
// refer back to each other, so the statuses of all box bodies in reach are
// settled together as a least fixpoint.
//
// A session caches everything it learns and is not thread-safe; independent
// sessions are.
class n_decider
{
    std::vector< modal_formula > _axioms;
    modal_set _axiom_boxes;    // every boxed subformula of Y, nested or not
    modal_set _axiom_top;      // unnested boxes of Y
    std::unordered_map< modal_formula, bool > _settled; // box body -> provable
    std::unordered_map< modal_formula, bool > _cache;
    std::size_t _atom_cap;
    bool _consistent = true;

    bool entails( const modal_formula& goal, const std::unordered_set< modal_formula >& provisional ) const;
    void settle( const modal_formula& goal );

public:
    explicit n_decider( std::vector< modal_formula > axioms, const caps& limits = {} );

    [[nodiscard]] bool decide( const modal_formula& f );

    /// N + Y does not prove bot.
    [[nodiscard]] bool consistent() const { return _consistent; }
    [[nodiscard]] const std::vector< modal_formula >& axioms() const { return _axioms; }
    [[nodiscard]] std::size_t atom_cap() const { return _atom_cap; }
};

/// One-shot convenience wrapper.
bool decide_n( const modal_formula& f, std::vector< modal_formula > axioms, const caps& limits = {} );

struct is_theorem {};

// The finite canonical countermodel over maximal consistent subsets of
// Sub_Y(A): G R_B D iff []B is not in G or B is in D, V(p) = {G : p in G}.
struct n_countermodel
{
    modal_model model;
    world_id refuting;
    std::vector< modal_set > worlds; // member sets, indexed like the model's worlds
    modal_set closure;               // Sub_Y(A)
};

/// All (A, Y)-maximal consistent sets, in enumeration order.
std::vector< modal_set > maximal_sets( n_decider& decider, const modal_set& closure );

std::variant< n_countermodel, is_theorem > build_n_countermodel( n_decider& decider, const modal_formula& a,
                                                                 const caps& limits = {} );

struct truth_lemma_violation
{
    world_id world;
    std::string formula;
    bool forced;     // what the model says
    bool member;     // what the world's set says
};

/// For every world and every B in the closure: forced iff member.
std::optional< truth_lemma_violation > verify_truth_lemma_n( const n_countermodel& cm );

} // namespace subint
