#include "subint/harness.hpp"

#include "subint/bridge.hpp"
#include "subint/errors.hpp"
#include "subint/frame_conditions.hpp"
#include "subint/hilbert.hpp"
#include "subint/parser.hpp"
#include "subint/syntax.hpp"

#include <unordered_set>

namespace subint
{

std::string atom_name( std::size_t i )
{
    static const char* first[] = { "p", "q", "r", "s", "t", "u" };
    if ( i < 6 )
        return first[ i ];
    return "a" + std::to_string( i );
}

namespace
{

template < language Lang >
basic_formula< Lang > random_leaf( rng& r, std::size_t atoms, std::size_t depth )
{
    using F = basic_formula< Lang >;
    const auto pick = r.below( atoms + 2 );
    if ( pick < atoms )
        return F::atom( atom_name( pick ) );
    if ( pick == atoms || depth == 0 )
        return F::falsum();
    return F::top();
}

prop_formula random_prop_at( rng& r, std::size_t atoms, std::size_t depth )
{
    using F = prop_formula;
    if ( depth == 0 || r.chance( 1, 5 ) )
        return random_leaf< prop_language >( r, atoms, depth );

    if ( r.chance( 1, 4 ) )
    {
        const int id = 1 + static_cast< int >( r.below( vf_schema_count ) );
        const auto schema = vf_schema( id );
        if ( schema.depth() <= depth )
        {
            std::map< std::string, prop_formula > subst;
            for ( const auto& letter : subint::atoms( schema ) )
                subst.emplace( letter, random_prop_at( r, atoms, depth - schema.depth() ) );
            return instantiate( schema, subst );
        }
    }

    const auto l = random_prop_at( r, atoms, depth - 1 );
    switch ( r.below( 5 ) )
    {
    case 0: return F::conj( l, random_prop_at( r, atoms, depth - 1 ) );
    case 1: return F::disj( l, random_prop_at( r, atoms, depth - 1 ) );
    case 2: return F::neg( l );
    default: return F::implies( l, random_prop_at( r, atoms, depth - 1 ) );
    }
}

modal_formula random_modal_at( rng& r, std::size_t atoms, std::size_t depth )
{
    using F = modal_formula;
    if ( depth == 0 || r.chance( 1, 5 ) )
        return random_leaf< modal_language >( r, atoms, depth );

    if ( depth >= 2 && r.chance( 1, 6 ) )
    {
        // necessitated tautology
        const auto c = random_modal_at( r, atoms, depth - 2 );
        return F::box( F::implies( c, c ) );
    }

    const auto l = random_modal_at( r, atoms, depth - 1 );
    switch ( r.below( 6 ) )
    {
    case 0: return F::conj( l, random_modal_at( r, atoms, depth - 1 ) );
    case 1: return F::disj( l, random_modal_at( r, atoms, depth - 1 ) );
    case 2: return F::neg( l );
    case 3:
    case 4: return F::box( l );
    default: return F::implies( l, random_modal_at( r, atoms, depth - 1 ) );
    }
}

template < language Lang >
fmt_model< Lang > random_model( rng& r, std::size_t max_worlds, const std::vector< basic_formula< Lang > >& indices,
                                const std::set< std::string >& atom_universe,
                                std::pair< std::uint64_t, std::uint64_t > density = { 1, 2 } )
{
    constexpr bool modal = basic_formula< Lang >::is_modal;
    const std::size_t n = 1 + r.below( max_worlds );
    const std::optional< world_id > root = modal ? std::nullopt : std::optional< world_id >{ 0 };

    const auto [ num, den ] = density;
    relation def = r.chance( 1, 2 ) ? relation::total( n ) : random_relation( r, n, root, num, den );
    relation_family< Lang > family{ n, std::move( def ) };
    for ( const auto& index : indices )
        if ( r.chance( 1, 2 ) )
            family.set( index, random_relation( r, n, root, num, den ) );

    valuation v( n );
    for ( world_id w = 0; w < n; ++w )
        for ( const auto& a : atom_universe )
            if ( r.chance( 1, 2 ) )
                v[ w ].insert( a );

    std::vector< std::string > labels;
    for ( world_id w = 0; w < n; ++w )
        labels.push_back( std::to_string( w ) );
    if constexpr ( modal )
        return { fmt_frame< Lang >{ std::move( labels ), std::move( family ) }, std::move( v ) };
    else
        return { fmt_frame< Lang >{ std::move( labels ), std::move( family ), 0 }, std::move( v ) };
}

std::set< std::string > atom_universe( std::size_t atoms )
{
    std::set< std::string > out;
    for ( std::size_t i = 0; i < atoms; ++i )
        out.insert( atom_name( i ) );
    return out;
}

std::vector< prop_formula > implications_in( const std::vector< prop_formula >& fs )
{
    prop_set out;
    for ( const auto& f : fs )
        for ( const auto& s : subformulas( f ) )
            if ( s.is( connective::imp ) )
                out.insert( s );
    return { out.begin(), out.end() };
}

std::string join( const std::vector< prop_formula >& fs )
{
    std::string out;
    for ( const auto& f : fs )
        out += ( out.empty() ? "" : "; " ) + to_string( f );
    return out;
}

// Distinct salts keep the streams of the suites independent of each other.
constexpr std::uint64_t salt_corpus = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t salt_models = 0xbf58476d1ce4e5b9ULL;
constexpr std::uint64_t salt_modal = 0x94d049bb133111ebULL;
constexpr std::uint64_t salt_frames = 0x2545f4914f6cdd1dULL;
constexpr std::uint64_t salt_transfer = 0x5851f42d4c957f2dULL;

} // namespace

prop_formula random_prop( rng& r, std::size_t atoms, std::size_t depth ) { return random_prop_at( r, atoms, depth ); }
modal_formula random_modal( rng& r, std::size_t atoms, std::size_t depth ) { return random_modal_at( r, atoms, depth ); }

relation random_relation( rng& r, std::size_t worlds, std::optional< world_id > root, std::uint64_t num,
                          std::uint64_t den )
{
    relation out{ worlds };
    for ( world_id a = 0; a < worlds; ++a )
        for ( world_id b = 0; b < worlds; ++b )
            out.set( a, b, ( root && a == *root ) || r.chance( num, den ) );
    return out;
}

prop_model random_prop_model( rng& r, std::size_t max_worlds, const std::vector< prop_formula >& indices,
                              const std::set< std::string >& atom_universe,
                              std::pair< std::uint64_t, std::uint64_t > density )
{
    return random_model( r, max_worlds, indices, atom_universe, density );
}

modal_model random_modal_model( rng& r, std::size_t max_worlds, const std::vector< modal_formula >& indices,
                                const std::set< std::string >& atom_universe )
{
    return random_model( r, max_worlds, indices, atom_universe );
}

void property_result::violation( std::string what )
{
    ++violations;
    if ( examples.size() < 5 )
        examples.push_back( std::move( what ) );
}

json to_json( const property_result& r )
{
    return { { "name", r.name },           { "axioms", r.axioms },       { "checked", r.checked },
             { "violations", r.violations }, { "skipped", r.skipped }, { "witnesses", r.witnesses },
             { "examples", r.examples } };
}

fuzz_session::fuzz_session( corpus_spec spec ) : _spec{ std::move( spec ) }
{
    for ( std::size_t k = 0; k < _spec.axiom_sets.size(); ++k )
    {
        prop_slice s;
        s.text = _spec.axiom_sets[ k ];
        s.axioms = parse_list< prop_language >( s.text );
        require_closed_negative( s.axioms );
        s.decider = std::make_unique< vf_decider >( s.axioms, _spec.limits );

        rng r{ _spec.seed ^ ( salt_corpus * ( k + 1 ) ) };
        std::unordered_set< prop_formula > seen;
        for ( std::size_t i = 0; i < _spec.samples; ++i )
        {
            auto a = random_prop( r, _spec.atoms, _spec.depth );
            auto b = random_prop( r, _spec.atoms, _spec.depth );
            for ( const auto& f : { a, b } )
                if ( seen.insert( f ).second )
                    s.formulas.push_back( f );
            s.pairs.emplace_back( std::move( a ), std::move( b ) );
        }
        if ( k == 0 && _spec.mutant && !s.pairs.empty() )
            _mutant_target = s.pairs.front().first;
        _slices.push_back( std::move( s ) );
    }
}

bool fuzz_session::decided( prop_slice& s, const prop_formula& a )
{
    const bool d = s.decider->decide( a );
    return ( _mutant_target && *_mutant_target == a ) ? !d : d;
}

std::vector< property_result > fuzz_session::run( const std::string& suite )
{
    if ( suite == "dp" )
        return disjunction_property();
    if ( suite == "slash" )
        return slash_equivalence();
    if ( suite == "fmp" )
        return finite_frame_property();
    if ( suite == "soundness" )
        return soundness();
    if ( suite == "companion" )
        return companion();
    if ( suite == "n-countermodel" )
        return n_countermodels();
    if ( suite == "frame-conditions" )
        return frame_conditions();
    if ( suite == "transfer" )
        return transfer();
    throw std::invalid_argument{ "unknown suite '" + suite + "'" };
}

std::vector< property_result > fuzz_session::run_all()
{
    std::vector< property_result > out;
    for ( const auto& name : suite_names )
        for ( auto& r : run( name ) )
            out.push_back( std::move( r ) );
    return out;
}

std::vector< property_result > fuzz_session::disjunction_property()
{
    std::vector< property_result > out;
    for ( auto& s : _slices )
    {
        property_result res{ "dp", s.text };
        for ( const auto& [ a, b ] : s.pairs )
        {
            ++res.checked;
            const auto ab = prop_formula::disj( a, b );
            if ( decided( s, ab ) && !decided( s, a ) && !decided( s, b ) )
                res.violation( "provable " + to_string( ab ) + " with neither disjunct provable" );

            try
            {
                const auto side = dp_split( *s.decider, a, b );
                if ( ( side == dp_side::left && !decided( s, a ) ) || ( side == dp_side::right && !decided( s, b ) ) )
                    res.violation( "dp-split picked an unprovable disjunct of " + to_string( ab ) );
                if ( side != dp_side::not_provable )
                    ++res.witnesses;
            }
            catch ( const invariant_error& e )
            {
                res.violation( e.what() );
            }
        }
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::slash_equivalence()
{
    std::vector< property_result > out;
    for ( auto& s : _slices )
    {
        property_result res{ "slash", s.text };
        for ( const auto& [ a, b ] : s.pairs )
            for ( const auto& f : { a, b, prop_formula::disj( a, b ) } )
            {
                ++res.checked;
                const bool sl = slash( *s.decider, f );
                const bool d = decided( s, f );
                if ( sl != d )
                    res.violation( to_string( f ) + ": slash " + ( sl ? "holds" : "fails" ) + ", decide says " +
                                   ( d ? "provable" : "refutable" ) );
                if ( d )
                    ++res.witnesses;
            }
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::finite_frame_property()
{
    std::vector< property_result > out;
    for ( auto& s : _slices )
    {
        property_result res{ "fmp", s.text };
        for ( const auto& f : s.formulas )
        {
            if ( s.decider->decide( f ) )
                continue;
            if ( sub_x( f, s.axioms ).size() > _spec.closure_cap )
            {
                ++res.skipped;
                continue;
            }
            ++res.checked;
            try
            {
                auto built = build_vf_countermodel( *s.decider, f, _spec.limits );
                const auto* cm = std::get_if< vf_countermodel >( &built );
                if ( !cm )
                    res.violation( to_string( f ) + ": countermodel builder says theorem" );
                else if ( !cm->all_gates() )
                    res.violation( to_string( f ) + ": a countermodel gate failed" );
                else
                    ++res.witnesses;
            }
            catch ( const invariant_error& e )
            {
                res.violation( to_string( f ) + ": " + e.what() );
            }
        }
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::soundness()
{
    std::vector< property_result > out;
    const auto universe = atom_universe( _spec.atoms );
    for ( std::size_t k = 0; k < _slices.size(); ++k )
    {
        auto& s = _slices[ k ];
        property_result res{ "soundness", s.text };

        std::vector< prop_formula > theorems;
        for ( const auto& f : s.formulas )
            if ( s.decider->decide( f ) )
                theorems.push_back( f );
        auto pool = theorems;
        pool.insert( pool.end(), s.axioms.begin(), s.axioms.end() );
        const auto indices = implications_in( pool );

        rng r{ _spec.seed ^ ( salt_models * ( k + 1 ) ) };
        std::size_t attempts = 0;
        while ( res.checked < _spec.models && attempts < 100 * _spec.models + 100 )
        {
            ++attempts;
            const auto m = random_prop_model( r, _spec.max_worlds, indices, universe );
            bool l_frame = true;
            for ( const auto& x : s.axioms )
                l_frame = l_frame && frame_valid( m.frame(), x, _spec.limits.frame_valid );
            if ( !l_frame )
            {
                ++res.skipped;
                continue;
            }
            ++res.checked;
            evaluator< prop_language > ev{ m };
            for ( const auto& t : theorems )
            {
                ++res.witnesses;
                if ( !ev.valid( t ) )
                    res.violation( "theorem " + to_string( t ) + " fails in a random L-model" );
            }
        }
        if ( res.checked < _spec.models )
            res.violation( "only " + std::to_string( res.checked ) + " L-models found" );
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::companion()
{
    std::vector< property_result > out;
    search_limits limits{ 2, 0, 20000 };
    for ( auto& s : _slices )
    {
        property_result res{ "companion", s.text };

        auto extended = x_star( s.axioms );
        for ( std::size_t k = 0; k <= 2; ++k )
            extended.push_back( neg2k_axiom( k ) );
        n_decider with_neg2k{ extended, _spec.limits };

        for ( const auto& f : s.formulas )
        {
            ++res.checked;
            const bool d = s.decider->decide( f );
            const auto image = corsi( f );

            if ( with_neg2k.decide( image ) != d )
                res.violation( to_string( f ) + ": decision changes when the neg2k axioms are added" );

            if ( !d )
            {
                if ( sub_x( f, s.axioms ).size() > _spec.closure_cap )
                    ++res.skipped;
                else
                {
                    try
                    {
                        auto built = build_vf_countermodel( *s.decider, f, _spec.limits );
                        const auto* cm = std::get_if< vf_countermodel >( &built );
                        if ( !cm || !cm->all_gates() )
                            res.violation( to_string( f ) + ": refutable but no verified countermodel" );
                        else
                            ++res.witnesses;
                    }
                    catch ( const invariant_error& e )
                    {
                        res.violation( to_string( f ) + ": " + e.what() );
                    }
                }
            }

            if ( f.size() <= _spec.search_goal_cap )
            {
                try
                {
                    if ( auto proof = search_vf_proof( f, s.axioms, limits ) )
                    {
                        ++res.witnesses;
                        if ( auto err = check_proof( *proof ) )
                            res.violation( to_string( f ) + ": search certificate fails to check: " + err->reason );
                        if ( !d )
                            res.violation( to_string( f ) + ": certificate found for a refutable formula" );
                    }
                }
                catch ( const resource_error& )
                {
                    ++res.skipped;
                }
            }
        }
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::n_countermodels()
{
    std::vector< property_result > out;
    for ( std::size_t k = 0; k < _spec.modal_axiom_sets.size(); ++k )
    {
        const auto& text = _spec.modal_axiom_sets[ k ];
        const auto y = parse_list< modal_language >( text );
        require_closed( y );
        property_result res{ "n-countermodel", text };
        n_decider decider{ y, _spec.limits };
        auto limits = _spec.limits;
        limits.sub_y = _spec.closure_cap;

        rng r{ _spec.seed ^ ( salt_modal * ( k + 1 ) ) };
        for ( std::size_t i = 0; i < _spec.modal_samples; ++i )
        {
            const auto a = random_modal( r, _spec.modal_atoms, _spec.modal_depth );
            if ( sub_y( a, y ).size() > _spec.closure_cap )
            {
                ++res.skipped;
                continue;
            }
            ++res.checked;
            if ( decider.decide( a ) )
                continue;
            try
            {
                auto built = build_n_countermodel( decider, a, limits );
                const auto* cm = std::get_if< n_countermodel >( &built );
                if ( !cm )
                {
                    res.violation( to_string( a ) + ": refutable but the builder says theorem" );
                    continue;
                }
                bool ok = true;
                if ( auto v = verify_truth_lemma_n( *cm ) )
                {
                    ok = false;
                    res.violation( to_string( a ) + ": truth lemma fails at world " + std::to_string( v->world ) +
                                   " for " + v->formula );
                }
                for ( const auto& ax : y )
                    if ( !model_valid( cm->model, ax ) )
                    {
                        ok = false;
                        res.violation( to_string( a ) + ": countermodel does not validate " + to_string( ax ) );
                    }
                if ( forces( cm->model, cm->refuting, a ) )
                {
                    ok = false;
                    res.violation( to_string( a ) + ": refuting world forces the formula" );
                }
                if ( ok )
                    ++res.witnesses;
            }
            catch ( const invariant_error& e )
            {
                res.violation( to_string( a ) + ": " + e.what() );
            }
        }
        out.push_back( std::move( res ) );
    }
    return out;
}

std::vector< property_result > fuzz_session::frame_conditions()
{
    const std::vector< prop_formula > axioms{ parse_prop( "~bot" ), parse_prop( "~~top" ),
                                              parse_prop( "~(top -> ~top)" ) };
    const auto indices = implications_in( axioms );

    property_result res{ "frame-conditions", join( axioms ) };
    rng r{ _spec.seed ^ salt_frames };
    for ( std::size_t i = 0; i < _spec.frames; ++i )
    {
        // sparse, so that seriality fails often enough to matter
        const auto m = random_prop_model( r, _spec.max_worlds, indices, {}, { 1, 4 } );
        for ( const auto& ax : axioms )
        {
            ++res.checked;
            const auto c = check_frame_condition( m.frame(), ax );
            if ( c.validity != c.condition )
                res.violation( to_string( ax ) + ": validity " + ( c.validity ? "holds" : "fails" ) +
                               " but the condition (" + c.clause + ") " + ( c.condition ? "holds" : "fails" ) );
            if ( c.validity )
                ++res.witnesses;
        }
    }
    return { res };
}

std::vector< property_result > fuzz_session::transfer()
{
    property_result to_modal{ "transfer-prop-to-modal", "" };
    property_result to_prop{ "transfer-modal-to-prop", "" };
    const auto universe = atom_universe( _spec.atoms );

    rng r{ _spec.seed ^ salt_transfer };
    for ( std::size_t i = 0; i < _spec.transfer_pairs; ++i )
    {
        const auto f = random_prop( r, _spec.atoms, _spec.depth );
        const auto subs = subformulas( f );
        const std::vector< prop_formula > formulas( subs.begin(), subs.end() );
        const auto imps = implications_in( { f } );

        const auto pm = random_prop_model( r, _spec.max_worlds, imps, universe );
        auto rep = compare_prop_to_modal( pm, formulas );
        to_modal.checked += rep.comparisons;
        ++to_modal.witnesses;
        for ( const auto& d : rep.disagreements )
            to_modal.violation( d.formula + " at world " + std::to_string( d.world ) );

        std::vector< modal_formula > modal_indices;
        for ( const auto& c : imps )
            modal_indices.push_back( modal_formula::implies( corsi( c.lhs() ), corsi( c.rhs() ) ) );
        const auto mm = random_modal_model( r, _spec.max_worlds, modal_indices, universe );
        rep = compare_modal_to_prop( mm, formulas );
        to_prop.checked += rep.comparisons;
        ++to_prop.witnesses;
        for ( const auto& d : rep.disagreements )
            to_prop.violation( d.formula + " at world " + std::to_string( d.world ) );
    }
    return { to_modal, to_prop };
}

json fuzz_report( const corpus_spec& spec, const std::vector< property_result >& results )
{
    json j;
    j[ "seed" ] = spec.seed;
    j[ "samples" ] = spec.samples;
    j[ "atoms" ] = spec.atoms;
    j[ "depth" ] = spec.depth;
    j[ "axiom_sets" ] = spec.axiom_sets;
    j[ "modal_axiom_sets" ] = spec.modal_axiom_sets;
    j[ "mutant" ] = spec.mutant;
    json rs = json::array();
    bool ok = true;
    for ( const auto& r : results )
    {
        rs.push_back( to_json( r ) );
        ok = ok && r.ok();
    }
    j[ "results" ] = rs;
    j[ "ok" ] = ok;
    return j;
}

} // namespace subint
