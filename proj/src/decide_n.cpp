#include "subint/decide_n.hpp"

#include "subint/errors.hpp"
#include "subint/sat.hpp"
#include "subint/syntax.hpp"

#include <algorithm>

namespace subint
{

namespace
{

void collect_all_boxes( const modal_formula& f, modal_set& out )
{
    switch ( f.op() )
    {
    case connective::atom:
    case connective::falsum:
        return;
    case connective::box:
        out.insert( f );
        collect_all_boxes( f.body(), out );
        return;
    default:
        collect_all_boxes( f.lhs(), out );
        collect_all_boxes( f.rhs(), out );
    }
}

} // namespace

n_decider::n_decider( std::vector< modal_formula > axioms, const caps& limits )
    : _axioms{ std::move( axioms ) }, _atom_cap{ limits.atoms }
{
    require_closed( _axioms );
    for ( const auto& y : _axioms )
    {
        collect_all_boxes( y, _axiom_boxes );
        collect_top_boxes( y, _axiom_top );
    }
    settle( modal_formula::falsum() );
    _consistent = !entails( modal_formula::falsum(), {} );
}

bool n_decider::entails( const modal_formula& goal, const std::unordered_set< modal_formula >& provisional ) const
{
    modal_set letters = _axiom_top;
    collect_top_boxes( goal, letters );

    std::vector< modal_formula > premises = _axioms;
    for ( const auto& b : letters )
    {
        const auto body = b.body();
        auto it = _settled.find( body );
        if ( ( it != _settled.end() && it->second ) || provisional.contains( body ) )
            premises.push_back( b );
    }
    return taut_consequence( premises, goal, _atom_cap );
}

void n_decider::settle( const modal_formula& goal )
{
    modal_set boxes = _axiom_boxes;
    collect_all_boxes( goal, boxes );

    std::vector< modal_formula > open;
    for ( const auto& b : boxes )
        if ( !_settled.contains( b.body() ) )
            open.push_back( b.body() );
    if ( open.empty() )
        return;
    std::stable_sort( open.begin(), open.end(), formula_order{} );
    open.erase( std::unique( open.begin(), open.end() ), open.end() );

    // Least fixpoint: a body is provable once it follows from the bodies
    // already known provable. Bodies left over are unprovable.
    std::unordered_set< modal_formula > proven;
    for ( bool changed = true; changed; )
    {
        changed = false;
        for ( const auto& body : open )
            if ( !proven.contains( body ) && entails( body, proven ) )
            {
                proven.insert( body );
                changed = true;
            }
    }
    for ( const auto& body : open )
        _settled.emplace( body, proven.contains( body ) );
}

bool n_decider::decide( const modal_formula& f )
{
    if ( !_consistent )
        return true;
    if ( auto it = _cache.find( f ); it != _cache.end() )
        return it->second;
    settle( f );
    const bool result = entails( f, {} );
    _cache.emplace( f, result );
    return result;
}

bool decide_n( const modal_formula& f, std::vector< modal_formula > axioms, const caps& limits )
{
    return n_decider{ std::move( axioms ), limits }.decide( f );
}

std::vector< modal_set > maximal_sets( n_decider& decider, const modal_set& closure )
{
    const std::vector< modal_formula > items( closure.begin(), closure.end() );
    std::vector< modal_set > out;
    modal_set chosen, dropped;

    auto consistent = [ & ]( const modal_set& s ) {
        return !decider.decide( modal_formula::neg( big_conj( s ) ) );
    };
    auto maximal = [ & ] {
        for ( const auto& b : dropped )
        {
            auto bigger = chosen;
            bigger.insert( b );
            if ( consistent( bigger ) )
                return false;
        }
        return true;
    };

    auto dfs = [ & ]( auto&& self, std::size_t i ) -> void {
        if ( i == items.size() )
        {
            if ( maximal() )
                out.push_back( chosen );
            return;
        }
        const auto& b = items[ i ];
        chosen.insert( b );
        if ( consistent( chosen ) )
            self( self, i + 1 );
        chosen.erase( b );

        // a consistent set can always take one of B and ~B
        if ( !dropped.contains( tilde( b ) ) )
        {
            dropped.insert( b );
            self( self, i + 1 );
            dropped.erase( b );
        }
    };

    if ( consistent( chosen ) )
        dfs( dfs, 0 );
    return out;
}

std::variant< n_countermodel, is_theorem > build_n_countermodel( n_decider& decider, const modal_formula& a,
                                                                 const caps& limits )
{
    if ( decider.decide( a ) )
        return is_theorem{};

    auto closure = sub_y( a, decider.axioms() );
    if ( closure.size() > limits.sub_y )
        throw resource_error{ "|Sub_Y(A)| = " + std::to_string( closure.size() ) + " exceeds cap " +
                              std::to_string( limits.sub_y ) };

    auto worlds = maximal_sets( decider, closure );
    const auto n = worlds.size();
    if ( n == 0 )
        throw invariant_error{ "no maximal consistent set although the formula is unprovable" };

    modal_family family{ n };
    for ( const auto& f : closure )
    {
        if ( !f.is( connective::box ) )
            continue;
        const auto body = f.body();
        relation r{ n };
        for ( world_id g = 0; g < n; ++g )
            for ( world_id d = 0; d < n; ++d )
                r.set( g, d, !worlds[ g ].contains( f ) || worlds[ d ].contains( body ) );
        family.set( body, std::move( r ) );
    }

    valuation v( n );
    std::vector< std::string > labels;
    for ( world_id w = 0; w < n; ++w )
    {
        labels.push_back( std::to_string( w ) );
        for ( const auto& f : worlds[ w ] )
            if ( f.is( connective::atom ) )
                v[ w ].insert( f.name() );
    }

    const auto negated = tilde( a );
    std::optional< world_id > refuting;
    for ( world_id w = 0; w < n && !refuting; ++w )
        if ( worlds[ w ].contains( negated ) )
            refuting = w;
    if ( !refuting )
        throw invariant_error{ "no maximal set contains ~A" };

    return n_countermodel{ modal_model{ modal_frame{ std::move( labels ), std::move( family ) }, std::move( v ) },
                           *refuting, std::move( worlds ), std::move( closure ) };
}

std::optional< truth_lemma_violation > verify_truth_lemma_n( const n_countermodel& cm )
{
    evaluator< modal_language > ev{ cm.model };
    for ( world_id w = 0; w < cm.worlds.size(); ++w )
        for ( const auto& b : cm.closure )
        {
            const bool forced = ev.forces( w, b );
            const bool member = cm.worlds[ w ].contains( b );
            if ( forced != member )
                return truth_lemma_violation{ w, to_string( b ), forced, member };
        }
    return std::nullopt;
}

} // namespace subint
