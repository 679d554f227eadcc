#include "subint/bridge.hpp"

#include "subint/errors.hpp"
#include "subint/syntax.hpp"

namespace subint
{

std::optional< prop_formula > inverse_corsi( const modal_formula& b )
{
    switch ( b.op() )
    {
    case connective::atom:
    case connective::falsum:
        return prop_formula{ b.node() };
    case connective::conj:
    case connective::disj: {
        auto l = inverse_corsi( b.lhs() );
        auto r = inverse_corsi( b.rhs() );
        if ( !l || !r )
            return std::nullopt;
        return b.is( connective::conj ) ? prop_formula::conj( *l, *r ) : prop_formula::disj( *l, *r );
    }
    case connective::box: {
        const auto body = b.body();
        if ( !body.is( connective::imp ) )
            return std::nullopt;
        auto l = inverse_corsi( body.lhs() );
        auto r = inverse_corsi( body.rhs() );
        if ( !l || !r )
            return std::nullopt;
        return prop_formula::implies( *l, *r );
    }
    case connective::imp:
        // corsi never produces an unboxed implication
        return std::nullopt;
    }
    return std::nullopt;
}

namespace
{

// corsi(C) -> corsi(D) for an implication C -> D
modal_formula image_index( const prop_formula& imp )
{
    return modal_formula::implies( corsi( imp.lhs() ), corsi( imp.rhs() ) );
}

// The propositional implication whose image index is `b`, if any.
std::optional< prop_formula > preimage_index( const modal_formula& b )
{
    if ( !b.is( connective::imp ) )
        return std::nullopt;
    auto l = inverse_corsi( b.lhs() );
    auto r = inverse_corsi( b.rhs() );
    if ( !l || !r )
        return std::nullopt;
    return prop_formula::implies( *l, *r );
}

} // namespace

modal_model prop_to_modal( const prop_model& m, std::span< const prop_formula > formulas )
{
    const auto& source = m.frame().relations();
    const auto n = m.size();
    modal_family family{ n };

    for ( const auto& [ index, r ] : source.explicit_relations() )
    {
        if ( !index.is( connective::imp ) )
            continue; // never looked up by propositional forcing
        const auto target = image_index( index );
        if ( family.has_explicit( target ) )
            throw invariant_error{ "two implications share the modal index " + to_string( target ) };
        family.set( target, r );
    }

    if ( !source.default_is_total() )
    {
        for ( const auto& f : formulas )
            for ( const auto& sub : subformulas( f ) )
                if ( sub.is( connective::imp ) && !source.has_explicit( sub ) )
                    family.set( image_index( sub ), source.default_relation() );
    }

    return modal_model{ modal_frame{ m.frame().labels(), std::move( family ) }, m.val() };
}

prop_model modal_to_prop( const modal_model& m, const std::set< std::string >& atom_universe )
{
    const auto& source = m.frame().relations();
    const auto n = m.size();
    const world_id root = n;

    auto lift = [ & ]( const relation& old ) {
        relation r{ n + 1 };
        for ( world_id y = 0; y <= n; ++y )
            r.set( root, y );
        for ( world_id x = 0; x < n; ++x )
            for ( world_id y = 0; y < n; ++y )
                r.set( x, y, old.contains( x, y ) );
        return r;
    };

    prop_family family{ n + 1, lift( source.default_relation() ) };
    for ( const auto& [ index, r ] : source.explicit_relations() )
        if ( auto imp = preimage_index( index ) )
            family.set( *imp, lift( r ) );

    auto labels = m.frame().labels();
    std::string fresh = "r";
    while ( m.frame().find( fresh ) )
        fresh += "'";
    labels.push_back( fresh );

    auto v = m.val();
    v.push_back( atom_universe );

    return prop_model{ prop_frame{ std::move( labels ), std::move( family ), root }, std::move( v ) };
}

transfer_report compare_prop_to_modal( const prop_model& m, std::span< const prop_formula > formulas )
{
    const auto target = prop_to_modal( m, formulas );
    evaluator< prop_language > src{ m };
    evaluator< modal_language > dst{ target };

    transfer_report report;
    for ( const auto& f : formulas )
    {
        const auto image = corsi( f );
        for ( world_id x = 0; x < m.size(); ++x )
        {
            ++report.comparisons;
            const bool a = src.forces( x, f );
            const bool b = dst.forces( x, image );
            if ( a != b )
                report.disagreements.push_back( { x, to_string( f ), a, b } );
        }
    }
    return report;
}

transfer_report compare_modal_to_prop( const modal_model& m, std::span< const prop_formula > formulas )
{
    std::set< std::string > universe;
    for ( const auto& f : formulas )
        collect_atoms( f.node(), universe );

    const auto target = modal_to_prop( m, universe );
    evaluator< modal_language > src{ m };
    evaluator< prop_language > dst{ target };

    transfer_report report;
    for ( const auto& f : formulas )
    {
        const auto image = corsi( f );
        for ( world_id x = 0; x < m.size(); ++x )
        {
            ++report.comparisons;
            const bool a = src.forces( x, image );
            const bool b = dst.forces( x, f );
            if ( a != b )
                report.disagreements.push_back( { x, to_string( f ), a, b } );
        }
    }
    return report;
}

} // namespace subint
