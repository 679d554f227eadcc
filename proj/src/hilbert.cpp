#include "subint/hilbert.hpp"

#include "subint/errors.hpp"
#include "subint/sat.hpp"
#include "subint/syntax.hpp"

#include <algorithm>
#include <unordered_map>

namespace subint
{

prop_formula vf_schema( int id )
{
    using F = prop_formula;
    const auto a = F::atom( "A" ), b = F::atom( "B" ), c = F::atom( "C" );
    switch ( id )
    {
    case 1: return F::implies( F::conj( a, b ), a );
    case 2: return F::implies( F::conj( a, b ), b );
    case 3: return F::implies( a, F::disj( a, b ) );
    case 4: return F::implies( b, F::disj( a, b ) );
    case 5: return F::implies( a, a );
    case 6: return F::implies( F::falsum(), a );
    case 7: return F::implies( F::conj( a, F::disj( b, c ) ), F::disj( F::conj( a, b ), F::conj( a, c ) ) );
    default: throw precondition_error{ "no VF axiom schema " + std::to_string( id ) };
    }
}

std::string to_string( rule_kind r )
{
    switch ( r )
    {
    case rule_kind::rc: return "RC";
    case rule_kind::rd: return "RD";
    case rule_kind::ri: return "RI";
    case rule_kind::mp: return "MP";
    case rule_kind::af: return "AF";
    case rule_kind::nec: return "Nec";
    }
    return "?";
}

std::optional< rule_kind > parse_rule( const std::string& name )
{
    for ( auto r : { rule_kind::rc, rule_kind::rd, rule_kind::ri, rule_kind::mp, rule_kind::af, rule_kind::nec } )
        if ( to_string( r ) == name )
            return r;
    return std::nullopt;
}

namespace
{

bool match_into( const prop_formula& t, const prop_formula& f, std::map< std::string, prop_formula >& subst )
{
    if ( t.is( connective::atom ) )
    {
        auto [ it, fresh ] = subst.emplace( t.name(), f );
        return fresh || it->second == f;
    }
    if ( t.op() != f.op() )
        return false;
    if ( t.is( connective::falsum ) )
        return true;
    return match_into( t.lhs(), f.lhs(), subst ) && match_into( t.rhs(), f.rhs(), subst );
}

template < language Lang >
std::optional< std::string > check_rule( const basic_proof< Lang >& proof, std::size_t i, const rule_use& use )
{
    using F = basic_formula< Lang >;
    const auto& concl = proof.lines[ i ].formula;

    const std::size_t arity = ( use.rule == rule_kind::af || use.rule == rule_kind::nec ) ? 1 : 2;
    if ( use.from.size() != arity )
        return to_string( use.rule ) + " takes " + std::to_string( arity ) + " premise(s), got " +
               std::to_string( use.from.size() );
    for ( auto j : use.from )
        if ( j >= i )
            return "premise " + std::to_string( j ) + " does not precede line " + std::to_string( i );

    const auto& p = proof.lines[ use.from[ 0 ] ].formula;
    const F* q = arity == 2 ? &proof.lines[ use.from[ 1 ] ].formula : nullptr;
    auto imp = []( const F& f ) { return f.is( connective::imp ); };
    const std::string mismatch = to_string( use.rule ) + " does not yield this formula from the cited premises";

    switch ( use.rule )
    {
    case rule_kind::mp:
        if ( !imp( *q ) || !( q->lhs() == p ) || !( q->rhs() == concl ) )
            return mismatch;
        return std::nullopt;
    case rule_kind::af:
        if ( !imp( concl ) || !( concl.rhs() == p ) )
            return mismatch;
        return std::nullopt;
    case rule_kind::rc:
        if ( !imp( p ) || !imp( *q ) || !( p.lhs() == q->lhs() ) ||
             !( concl == F::implies( p.lhs(), F::conj( p.rhs(), q->rhs() ) ) ) )
            return mismatch;
        return std::nullopt;
    case rule_kind::rd:
        if ( !imp( p ) || !imp( *q ) || !( p.rhs() == q->rhs() ) ||
             !( concl == F::implies( F::disj( p.lhs(), q->lhs() ), p.rhs() ) ) )
            return mismatch;
        return std::nullopt;
    case rule_kind::ri:
        if ( !imp( p ) || !imp( *q ) || !( p.rhs() == q->lhs() ) || !( concl == F::implies( p.lhs(), q->rhs() ) ) )
            return mismatch;
        return std::nullopt;
    case rule_kind::nec:
        if constexpr ( basic_formula< Lang >::is_modal )
        {
            if ( !( concl == F::box( p ) ) )
                return mismatch;
            return std::nullopt;
        }
        break;
    }
    return mismatch;
}

std::optional< std::string > check_schema( const prop_formula& f, const schema_instance& inst )
{
    if ( inst.schema < 1 || inst.schema > vf_schema_count )
        return "no axiom schema " + std::to_string( inst.schema );
    const auto schema = vf_schema( inst.schema );
    if ( inst.subst.empty() )
    {
        if ( !match_schema( schema, f ) )
            return "not an instance of axiom " + std::to_string( inst.schema );
        return std::nullopt;
    }
    const auto letters = atoms( schema );
    for ( const auto& [ k, v ] : inst.subst )
        if ( !letters.contains( k ) )
            return "axiom " + std::to_string( inst.schema ) + " has no letter " + k;
    for ( const auto& l : letters )
        if ( !inst.subst.contains( l ) )
            return "substitution for axiom " + std::to_string( inst.schema ) + " misses letter " + l;
    if ( !( instantiate( schema, inst.subst ) == f ) )
        return "formula differs from axiom " + std::to_string( inst.schema ) + " under the given substitution";
    return std::nullopt;
}

} // namespace

std::optional< std::map< std::string, prop_formula > > match_schema( const prop_formula& schema,
                                                                     const prop_formula& f )
{
    std::map< std::string, prop_formula > subst;
    if ( !match_into( schema, f, subst ) )
        return std::nullopt;
    return subst;
}

prop_formula instantiate( const prop_formula& schema, const std::map< std::string, prop_formula >& subst )
{
    switch ( schema.op() )
    {
    case connective::atom: {
        auto it = subst.find( schema.name() );
        return it == subst.end() ? schema : it->second;
    }
    case connective::falsum: return schema;
    case connective::conj: return prop_formula::conj( instantiate( schema.lhs(), subst ), instantiate( schema.rhs(), subst ) );
    case connective::disj: return prop_formula::disj( instantiate( schema.lhs(), subst ), instantiate( schema.rhs(), subst ) );
    case connective::imp: return prop_formula::implies( instantiate( schema.lhs(), subst ), instantiate( schema.rhs(), subst ) );
    case connective::box: break;
    }
    throw std::logic_error{ "instantiate: box in a schema" };
}

std::optional< proof_error > check_proof( const vf_proof& proof )
{
    for ( std::size_t k = 0; k < proof.axioms.size(); ++k )
        if ( !is_closed_negative_axiom( proof.axioms[ k ] ) )
            return proof_error{ std::nullopt, "axiom " + std::to_string( k ) + " is not a closed negative axiom" };
    if ( proof.lines.empty() )
        return proof_error{ std::nullopt, "empty proof" };

    for ( std::size_t i = 0; i < proof.lines.size(); ++i )
    {
        const auto& line = proof.lines[ i ];
        std::optional< std::string > err;
        if ( const auto* s = std::get_if< schema_instance >( &line.by ) )
            err = check_schema( line.formula, *s );
        else if ( const auto* e = std::get_if< extra_axiom >( &line.by ) )
        {
            if ( e->index >= proof.axioms.size() )
                err = "no extra axiom " + std::to_string( e->index );
            else if ( !( proof.axioms[ e->index ] == line.formula ) )
                err = "formula is not extra axiom " + std::to_string( e->index );
        }
        else if ( std::holds_alternative< tautology >( line.by ) )
            err = "tautology lines are only allowed in N proofs";
        else
        {
            const auto& use = std::get< rule_use >( line.by );
            if ( use.rule == rule_kind::nec )
                err = "Nec is not a VF rule";
            else
                err = check_rule( proof, i, use );
        }
        if ( err )
            return proof_error{ i, *err };
    }
    return std::nullopt;
}

std::optional< proof_error > check_proof( const n_proof& proof, std::size_t atom_cap )
{
    for ( std::size_t k = 0; k < proof.axioms.size(); ++k )
        if ( !proof.axioms[ k ].is_closed() )
            return proof_error{ std::nullopt, "axiom " + std::to_string( k ) + " is not closed" };
    if ( proof.lines.empty() )
        return proof_error{ std::nullopt, "empty proof" };

    for ( std::size_t i = 0; i < proof.lines.size(); ++i )
    {
        const auto& line = proof.lines[ i ];
        std::optional< std::string > err;
        if ( std::holds_alternative< schema_instance >( line.by ) )
            err = "axiom schemas are VF-only; N proofs use tautology lines";
        else if ( const auto* e = std::get_if< extra_axiom >( &line.by ) )
        {
            if ( e->index >= proof.axioms.size() )
                err = "no extra axiom " + std::to_string( e->index );
            else if ( !( proof.axioms[ e->index ] == line.formula ) )
                err = "formula is not extra axiom " + std::to_string( e->index );
        }
        else if ( std::holds_alternative< tautology >( line.by ) )
        {
            try
            {
                if ( !is_tautology( line.formula, atom_cap ) )
                    err = "not a tautology";
            }
            catch ( const resource_error& e )
            {
                err = std::string{ "cannot check tautology: " } + e.what();
            }
        }
        else
        {
            const auto& use = std::get< rule_use >( line.by );
            if ( use.rule != rule_kind::mp && use.rule != rule_kind::nec )
                err = to_string( use.rule ) + " is not an N rule";
            else
                err = check_rule( proof, i, use );
        }
        if ( err )
            return proof_error{ i, *err };
    }
    return std::nullopt;
}

namespace
{

// Derived formulas with their justifications; premises always refer to
// earlier entries.
template < language Lang >
class derivation_store
{
    using F = basic_formula< Lang >;

    std::vector< proof_line< Lang > > _lines;
    std::unordered_map< F, std::size_t > _index;
    std::size_t _max_size;
    std::size_t _max_lines;

public:
    derivation_store( std::size_t max_size, std::size_t max_lines ) : _max_size{ max_size }, _max_lines{ max_lines } {}

    std::optional< std::size_t > find( const F& f ) const
    {
        auto it = _index.find( f );
        if ( it == _index.end() )
            return std::nullopt;
        return it->second;
    }

    // Returns the line index, existing or new; nullopt when over the size cap.
    std::optional< std::size_t > add( const F& f, justification by, bool ignore_size = false )
    {
        if ( !ignore_size && f.size() > _max_size )
            return std::nullopt;
        if ( auto i = find( f ) )
            return i;
        if ( _lines.size() >= _max_lines )
            throw resource_error{ "proof search exceeded " + std::to_string( _max_lines ) + " lines" };
        _index.emplace( f, _lines.size() );
        _lines.push_back( { f, std::move( by ) } );
        return _lines.size() - 1;
    }

    [[nodiscard]] std::size_t size() const { return _lines.size(); }
    [[nodiscard]] const F& formula( std::size_t i ) const { return _lines[ i ].formula; }

    // The lines the goal depends on, renumbered.
    basic_proof< Lang > extract( std::size_t goal, std::vector< F > axioms ) const
    {
        std::vector< bool > needed( _lines.size(), false );
        needed[ goal ] = true;
        for ( std::size_t i = goal + 1; i-- > 0; )
            if ( needed[ i ] )
                if ( const auto* r = std::get_if< rule_use >( &_lines[ i ].by ) )
                    for ( auto j : r->from )
                        needed[ j ] = true;

        std::vector< std::size_t > renumber( _lines.size(), 0 );
        basic_proof< Lang > out{ std::move( axioms ), {} };
        for ( std::size_t i = 0; i <= goal; ++i )
        {
            if ( !needed[ i ] )
                continue;
            renumber[ i ] = out.lines.size();
            auto line = _lines[ i ];
            if ( auto* r = std::get_if< rule_use >( &line.by ) )
                for ( auto& j : r->from )
                    j = renumber[ j ];
            out.lines.push_back( std::move( line ) );
        }
        return out;
    }
};

} // namespace

std::optional< vf_proof > search_vf_proof( const prop_formula& goal, const std::vector< prop_formula >& axioms,
                                           const search_limits& limits )
{
    require_closed_negative( axioms );
    const auto universe_set = sub_x( goal, axioms );
    const std::vector< prop_formula > universe( universe_set.begin(), universe_set.end() );
    const auto max_size = limits.max_size ? limits.max_size : goal.size();

    derivation_store< prop_language > store{ max_size, limits.max_lines };
    auto done = [ & ]() -> std::optional< vf_proof > {
        if ( auto g = store.find( goal ) )
            return store.extract( *g, axioms );
        return std::nullopt;
    };

    for ( std::size_t k = 0; k < axioms.size(); ++k )
        store.add( axioms[ k ], extra_axiom{ k }, true );

    for ( int id = 1; id <= vf_schema_count; ++id )
    {
        const auto schema = vf_schema( id );
        const auto letters = atoms( schema );
        const std::vector< std::string > names( letters.begin(), letters.end() );
        std::vector< std::size_t > pick( names.size(), 0 );
        for ( ;; )
        {
            std::map< std::string, prop_formula > subst;
            for ( std::size_t i = 0; i < names.size(); ++i )
                subst.emplace( names[ i ], universe[ pick[ i ] ] );
            store.add( instantiate( schema, subst ), schema_instance{ id, subst } );

            std::size_t i = 0;
            while ( i < pick.size() && ++pick[ i ] == universe.size() )
                pick[ i++ ] = 0;
            if ( i == pick.size() )
                break;
        }
    }
    if ( auto p = done() )
        return p;

    using F = prop_formula;
    for ( std::size_t round = 0; round < limits.depth; ++round )
    {
        const auto n = store.size();
        std::unordered_map< F, std::vector< std::size_t > > by_lhs, by_rhs;
        for ( std::size_t i = 0; i < n; ++i )
        {
            const auto& f = store.formula( i );
            if ( f.is( connective::imp ) )
            {
                by_lhs[ f.lhs() ].push_back( i );
                by_rhs[ f.rhs() ].push_back( i );
            }
        }

        for ( std::size_t i = 0; i < n; ++i )
        {
            const auto f = store.formula( i );

            for ( const auto& b : universe )
                store.add( F::implies( b, f ), rule_use{ rule_kind::af, { i } } );

            if ( !f.is( connective::imp ) )
                continue;

            if ( auto a = store.find( f.lhs() ); a && *a < n )
                store.add( f.rhs(), rule_use{ rule_kind::mp, { *a, i } } );

            if ( auto it = by_lhs.find( f.rhs() ); it != by_lhs.end() )
                for ( auto j : it->second )
                    store.add( F::implies( f.lhs(), store.formula( j ).rhs() ), rule_use{ rule_kind::ri, { i, j } } );

            for ( auto j : by_lhs[ f.lhs() ] )
                store.add( F::implies( f.lhs(), F::conj( f.rhs(), store.formula( j ).rhs() ) ),
                           rule_use{ rule_kind::rc, { i, j } } );

            for ( auto j : by_rhs[ f.rhs() ] )
                store.add( F::implies( F::disj( f.lhs(), store.formula( j ).lhs() ), f.rhs() ),
                           rule_use{ rule_kind::rd, { i, j } } );
        }
        if ( auto p = done() )
            return p;
        if ( store.size() == n )
            break;
    }
    return std::nullopt;
}

std::optional< n_proof > search_n_proof( const modal_formula& goal, const std::vector< modal_formula >& axioms,
                                         const search_limits& limits )
{
    require_closed( axioms );
    using F = modal_formula;

    modal_set universe_set = subformulas( goal );
    for ( const auto& y : axioms )
        collect_subformulas( y, universe_set );
    const std::vector< F > universe( universe_set.begin(), universe_set.end() );
    const auto max_size = limits.max_size ? limits.max_size : goal.size();

    derivation_store< modal_language > store{ max_size, limits.max_lines };
    auto done = [ & ]() -> std::optional< n_proof > {
        if ( auto g = store.find( goal ) )
            return store.extract( *g, axioms );
        return std::nullopt;
    };

    for ( std::size_t k = 0; k < axioms.size(); ++k )
        store.add( axioms[ k ], extra_axiom{ k }, true );
    for ( const auto& f : universe )
        if ( is_tautology( f ) )
            store.add( f, tautology{} );
    if ( auto p = done() )
        return p;

    for ( std::size_t round = 0; round < limits.depth; ++round )
    {
        const auto n = store.size();
        for ( std::size_t i = 0; i < n; ++i )
        {
            const auto f = store.formula( i );
            if ( universe_set.contains( F::box( f ) ) )
                store.add( F::box( f ), rule_use{ rule_kind::nec, { i } } );
            if ( f.is( connective::imp ) )
                if ( auto a = store.find( f.lhs() ); a && *a < n )
                    store.add( f.rhs(), rule_use{ rule_kind::mp, { *a, i } } );
        }

        // Classical consequences inside the universe: one tautology
        // P1 -> (P2 -> ... -> F) and a chain of MP steps.
        std::vector< std::size_t > known;
        for ( std::size_t i = 0; i < store.size(); ++i )
            if ( universe_set.contains( store.formula( i ) ) )
                known.push_back( i );

        for ( const auto& target : universe )
        {
            if ( store.find( target ) )
                continue;
            std::vector< std::size_t > premises = known;
            auto entails = [ & ]( const std::vector< std::size_t >& ps ) {
                std::vector< F > fs;
                for ( auto i : ps )
                    fs.push_back( store.formula( i ) );
                try
                {
                    return taut_consequence( fs, target );
                }
                catch ( const resource_error& )
                {
                    return false;
                }
            };
            if ( !entails( premises ) )
                continue;
            for ( std::size_t k = premises.size(); k-- > 0; )
            {
                auto trial = premises;
                trial.erase( trial.begin() + static_cast< std::ptrdiff_t >( k ) );
                if ( entails( trial ) )
                    premises = std::move( trial );
            }

            auto chain = target;
            for ( auto it = premises.rbegin(); it != premises.rend(); ++it )
                chain = F::implies( store.formula( *it ), chain );
            auto line = store.add( chain, tautology{}, true );
            for ( auto i : premises )
            {
                const auto next = store.formula( *line ).rhs();
                line = store.add( next, rule_use{ rule_kind::mp, { i, *line } }, true );
            }
        }
        if ( auto p = done() )
            return p;
        if ( store.size() == n )
            break;
    }
    return std::nullopt;
}

} // namespace subint
