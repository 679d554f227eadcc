#include "subint/fmt.hpp"
#include "subint/frame_conditions.hpp"
#include "subint/syntax.hpp"

namespace subint
{

prop_formula fig1_formula()
{
    const auto p = prop_formula::atom( "p" );
    const auto q = prop_formula::atom( "q" );
    const auto top = prop_formula::top();
    return prop_formula::iff( prop_formula::implies( top, prop_formula::conj( p, q ) ),
                              prop_formula::implies( top, prop_formula::conj( q, p ) ) );
}

prop_model fig1_model()
{
    const auto p = prop_formula::atom( "p" );
    const auto q = prop_formula::atom( "q" );
    const auto top = prop_formula::top();

    relation pq{ 3 }, qp{ 3 };
    for ( world_id x = 0; x < 3; ++x )
        for ( world_id y = 0; y < 3; ++y )
        {
            pq.set( x, y, x != 1 );
            qp.set( x, y, x <= y );
        }

    prop_family family{ 3 };
    family.set( prop_formula::implies( top, prop_formula::conj( p, q ) ), pq );
    family.set( prop_formula::implies( top, prop_formula::conj( q, p ) ), qp );

    return prop_model{ prop_frame{ { "0", "1", "2" }, std::move( family ), 0 }, valuation{ {}, {}, { "p" } } };
}

bool is_serial( const prop_frame& frame, const prop_formula& index )
{
    const auto& r = frame.relations().lookup( index );
    for ( world_id x = 0; x < frame.size(); ++x )
    {
        bool found = false;
        for ( world_id y = 0; y < frame.size() && !found; ++y )
            found = r.contains( x, y );
        if ( !found )
            return false;
    }
    return true;
}

namespace
{

// Closed formulas do not depend on the valuation.
prop_model bare_model( const prop_frame& frame ) { return prop_model{ frame, valuation( frame.size() ) }; }

// Condition for the closed negative formula ~c, by shape of c.
bool condition( const prop_frame& frame, const prop_formula& c, std::string& clause )
{
    const auto top = prop_formula::top();
    const auto neg_top = prop_formula::neg( top );
    const auto model = bare_model( frame );
    evaluator< prop_language > ev{ model };
    const auto n = frame.size();

    auto every_x_some_y = [ & ]( const prop_formula& index, auto&& pred ) {
        const auto& r = frame.relations().lookup( index );
        for ( world_id x = 0; x < n; ++x )
        {
            bool found = false;
            for ( world_id y = 0; y < n && !found; ++y )
                found = r.contains( x, y ) && pred( y );
            if ( !found )
                return false;
        }
        return true;
    };

    if ( c == neg_top )
    {
        clause = "~top-serial";
        return is_serial( frame, neg_top );
    }
    if ( c == prop_formula::implies( top, neg_top ) )
    {
        clause = "two-step: x R_(top->~top) y R_(~top) z";
        const auto& second = frame.relations().lookup( neg_top );
        return every_x_some_y( c, [ & ]( world_id y ) {
            for ( world_id z = 0; z < n; ++z )
                if ( second.contains( y, z ) )
                    return true;
            return false;
        } );
    }
    if ( c.is_negation() )
    {
        clause = "~~C: every x sees a C-world under R_(~C)";
        const auto& body = ev.extension( c.lhs() );
        return every_x_some_y( c, [ & ]( world_id y ) { return bool{ body[ y ] }; } );
    }
    if ( c.is( connective::imp ) )
    {
        clause = "~(C->D): every x sees a C-and-not-D world under R_(C->D)";
        const auto& lhs = ev.extension( c.lhs() );
        const auto& rhs = ev.extension( c.rhs() );
        return every_x_some_y( c, [ & ]( world_id y ) { return lhs[ y ] && !rhs[ y ]; } );
    }
    if ( c.is( connective::disj ) )
    {
        std::string l, r;
        const bool ok = condition( frame, c.lhs(), l ) && condition( frame, c.rhs(), r );
        clause = "~(C|D): both disjuncts negated";
        return ok;
    }
    clause = "~C: no world forces C";
    const auto& ext = ev.extension( c );
    for ( world_id x = 0; x < n; ++x )
        if ( ext[ x ] )
            return false;
    return true;
}

} // namespace

frame_condition_check check_frame_condition( const prop_frame& frame, const prop_formula& axiom )
{
    if ( !is_closed_negative_axiom( axiom ) )
        throw precondition_error{ "not a closed negative axiom: " + to_string( axiom ) };

    frame_condition_check out{};
    out.validity = frame_valid( frame, axiom );
    out.condition = condition( frame, axiom.lhs(), out.clause );
    return out;
}

} // namespace subint
