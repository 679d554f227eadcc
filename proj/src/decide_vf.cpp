#include "subint/decide_vf.hpp"

#include "subint/errors.hpp"
#include "subint/syntax.hpp"

namespace subint
{

vf_decider::vf_decider( std::vector< prop_formula > axioms, const caps& limits )
    : _axioms{ std::move( axioms ) }, _modal{ x_star( _axioms ), limits }
{
}

bool vf_decider::decide( const prop_formula& a ) { return _modal.decide( corsi( a ) ); }

bool decide_vf( const prop_formula& a, std::vector< prop_formula > axioms, const caps& limits )
{
    return vf_decider{ std::move( axioms ), limits }.decide( a );
}

std::string to_string( const tableau& t ) { return "(" + to_string( t.gamma ) + ", " + to_string( t.delta ) + ")"; }

bool is_consistent( vf_decider& decider, const tableau& t )
{
    return !decider.decide( prop_formula::implies( big_conj( t.gamma ), big_disj( t.delta ) ) );
}

tableau saturate( vf_decider& decider, tableau t, const prop_set& universe )
{
    if ( !is_consistent( decider, t ) )
        throw precondition_error{ "saturate: inconsistent tableau " + to_string( t ) };

    for ( const auto& b : universe )
    {
        if ( t.gamma.contains( b ) || t.delta.contains( b ) )
            continue;
        t.gamma.insert( b );
        if ( is_consistent( decider, t ) )
            continue;
        t.gamma.erase( b );
        t.delta.insert( b );
    }
    return t;
}

std::vector< tableau > saturated_tableaux( vf_decider& decider, const prop_set& universe )
{
    const std::vector< prop_formula > items( universe.begin(), universe.end() );
    std::vector< tableau > out;
    tableau t;

    auto dfs = [ & ]( auto&& self, std::size_t i ) -> void {
        if ( i == items.size() )
        {
            out.push_back( t );
            return;
        }
        const auto& b = items[ i ];
        t.gamma.insert( b );
        if ( is_consistent( decider, t ) )
            self( self, i + 1 );
        t.gamma.erase( b );

        t.delta.insert( b );
        if ( is_consistent( decider, t ) )
            self( self, i + 1 );
        t.delta.erase( b );
    };

    if ( is_consistent( decider, t ) )
        dfs( dfs, 0 );
    return out;
}

std::vector< tableau > saturated_tableaux_by_filter( vf_decider& decider, const prop_set& universe )
{
    const std::vector< prop_formula > items( universe.begin(), universe.end() );
    if ( items.size() >= 63 )
        throw resource_error{ "too many formulas to enumerate colourings" };

    std::vector< tableau > out;
    const std::uint64_t count = std::uint64_t{ 1 } << items.size();
    // Enumerate so that the result comes out in the same order as the DFS
    // (gamma before delta, first formula most significant).
    for ( std::uint64_t m = 0; m < count; ++m )
    {
        tableau t;
        for ( std::size_t i = 0; i < items.size(); ++i )
        {
            const bool in_delta = ( m >> ( items.size() - 1 - i ) ) & 1U;
            ( in_delta ? t.delta : t.gamma ).insert( items[ i ] );
        }
        if ( is_consistent( decider, t ) )
            out.push_back( std::move( t ) );
    }
    return out;
}

tableau root_tableau( vf_decider& decider, const std::vector< tableau >& worlds, const prop_set& universe )
{
    tableau start;
    for ( const auto& f : universe )
    {
        if ( !f.is( connective::imp ) )
            continue;
        for ( const auto& w : worlds )
            if ( w.gamma.contains( f.lhs() ) && w.delta.contains( f.rhs() ) )
            {
                start.delta.insert( f );
                break;
            }
    }
    if ( !is_consistent( decider, start ) )
        throw invariant_error{ "root tableau is inconsistent: " + to_string( start ) };
    return saturate( decider, std::move( start ), universe );
}

std::variant< vf_countermodel, is_theorem > build_vf_countermodel( vf_decider& decider, const prop_formula& a,
                                                                   const caps& limits )
{
    if ( decider.decide( a ) )
        return is_theorem{};

    auto closure = sub_x( a, decider.axioms() );
    if ( closure.size() > limits.sub_x )
        throw resource_error{ "|Sub_X(A)| = " + std::to_string( closure.size() ) + " exceeds cap " +
                              std::to_string( limits.sub_x ) };

    auto worlds = saturated_tableaux( decider, closure );
    const auto n = worlds.size();

    auto index_of = [ & ]( const tableau& t ) -> world_id {
        for ( world_id w = 0; w < n; ++w )
            if ( worlds[ w ] == t )
                return w;
        throw invariant_error{ "saturated tableau missing from the world set: " + to_string( t ) };
    };

    const auto root = index_of( root_tableau( decider, worlds, closure ) );
    const auto refuting = index_of( saturate( decider, tableau{ {}, { a } }, closure ) );

    prop_family family{ n };
    for ( const auto& f : closure )
    {
        if ( !f.is( connective::imp ) )
            continue;
        relation r{ n };
        for ( world_id s = 0; s < n; ++s )
            for ( world_id t = 0; t < n; ++t )
                r.set( s, t,
                       worlds[ s ].delta.contains( f ) || worlds[ t ].delta.contains( f.lhs() ) ||
                               worlds[ t ].gamma.contains( f.rhs() ) );
        family.set( f, std::move( r ) );
    }

    if ( auto v = root_condition_violation( family, root ) )
        throw invariant_error{ "countermodel root condition fails: " + *v };

    valuation v( n );
    std::vector< std::string > labels;
    for ( world_id w = 0; w < n; ++w )
    {
        labels.push_back( std::to_string( w ) );
        for ( const auto& f : worlds[ w ].gamma )
            if ( f.is( connective::atom ) )
                v[ w ].insert( f.name() );
    }

    vf_countermodel cm{ prop_model{ prop_frame{ std::move( labels ), std::move( family ), root }, std::move( v ) },
                        refuting, std::move( worlds ), std::move( closure ), false, false, {}, false };
    cm.root_condition = true;
    cm.truth_lemma = !verify_truth_lemma_vf( cm ).has_value();
    for ( const auto& x : decider.axioms() )
        cm.axioms_valid.push_back( frame_valid( cm.model.frame(), x ) );
    cm.refutes = !forces( cm.model, cm.refuting, a );
    return cm;
}

std::optional< truth_lemma_violation > verify_truth_lemma_vf( const vf_countermodel& cm )
{
    evaluator< prop_language > ev{ cm.model };
    for ( world_id w = 0; w < cm.worlds.size(); ++w )
        for ( const auto& b : cm.closure )
        {
            const bool forced = ev.forces( w, b );
            const bool member = cm.worlds[ w ].gamma.contains( b );
            if ( forced != member )
                return truth_lemma_violation{ w, to_string( b ), forced, member };
        }
    return std::nullopt;
}

dp_side dp_split( vf_decider& decider, const prop_formula& a, const prop_formula& b )
{
    if ( !decider.decide( prop_formula::disj( a, b ) ) )
        return dp_side::not_provable;
    if ( slash( decider, a ) )
        return dp_side::left;
    if ( slash( decider, b ) )
        return dp_side::right;
    throw invariant_error{ "provable disjunction with neither disjunct slashed: " + to_string( a ) + " | " +
                           to_string( b ) };
}

} // namespace subint
