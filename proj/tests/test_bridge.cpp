#include "oracles.hpp"

#include <subint/bridge.hpp>
#include <subint/decide_n.hpp>
#include <subint/decide_vf.hpp>
#include <subint/harness.hpp>
#include <subint/syntax.hpp>

#include <gtest/gtest.h>

using namespace subint;

namespace
{

prop_formula P( const char* s ) { return parse_prop( s ); }
modal_formula M( const char* s ) { return parse_modal( s ); }

prop_set all_subformulas( const std::vector< prop_formula >& fs )
{
    prop_set out;
    for ( const auto& f : fs )
        collect_subformulas( f, out );
    return out;
}

} // namespace

TEST( InverseCorsi, Examples )
{
    EXPECT_EQ( inverse_corsi( M( "[](p -> q)" ) ), P( "p -> q" ) );
    EXPECT_EQ( inverse_corsi( M( "p & q" ) ), P( "p & q" ) );
    EXPECT_FALSE( inverse_corsi( M( "[]p" ) ).has_value() );
    EXPECT_FALSE( inverse_corsi( M( "p -> q" ) ).has_value() );
    EXPECT_FALSE( inverse_corsi( M( "[](p -> []q)" ) ).has_value() );

    oracle::gen g{ 61 };
    for ( int i = 0; i < 500; ++i )
    {
        auto a = g.formula< prop_language >( 3, 4 );
        ASSERT_EQ( inverse_corsi( corsi( a ) ), a );
    }
}

TEST( PropToModal, Fig1 )
{
    const auto m = fig1_model();
    const auto mm = prop_to_modal( m );
    const auto idx = corsi( P( "top" ) ) ;
    const auto key = modal_formula::implies( idx, corsi( P( "p & q" ) ) );
    ASSERT_TRUE( mm.frame().relations().has_explicit( key ) );
    const auto& r = mm.frame().relations().lookup( key );
    for ( world_id x = 0; x < 3; ++x )
        for ( world_id y = 0; y < 3; ++y )
            EXPECT_EQ( r.contains( x, y ), x != 1 );

    const std::vector< prop_formula > fs{ fig1_formula(), P( "p | ~p" ), P( "top -> q & p" ) };
    auto rep = compare_prop_to_modal( m, fs );
    EXPECT_GT( rep.comparisons, 0U );
    EXPECT_TRUE( rep.disagreements.empty() );
    for ( world_id x = 0; x < 3; ++x )
        EXPECT_EQ( oracle::holds( m, x, fs[ 0 ] ), oracle::holds( mm, x, corsi( fs[ 0 ] ) ) );
}

TEST( PropToModal, OneWorld )
{
    prop_model m{ prop_frame{ { "0" }, prop_family{ 1 }, 0 }, valuation( 1 ) };
    auto mm = prop_to_modal( m );
    EXPECT_TRUE( oracle::holds( mm, 0, corsi( P( "p -> p" ) ) ) );
}

// Agreement checked with the naive evaluator on both sides.
TEST( PropToModal, ForcingAgreesOnRandomModels )
{
    rng r{ 71 };
    oracle::gen g{ 73 };
    for ( int i = 0; i < 250; ++i )
    {
        std::vector< prop_formula > fs{ g.formula< prop_language >( 2, 3 ), g.formula< prop_language >( 2, 3 ) };
        prop_set imps;
        for ( const auto& f : fs )
            oracle::implications( f, imps );
        auto m = random_prop_model( r, 4, { imps.begin(), imps.end() }, { "p", "q" } );
        auto subs = all_subformulas( fs );
        const std::vector< prop_formula > sv( subs.begin(), subs.end() );
        auto mm = prop_to_modal( m, sv );
        for ( const auto& f : sv )
            for ( world_id x = 0; x < m.size(); ++x )
                ASSERT_EQ( oracle::holds( m, x, f ), oracle::holds( mm, x, corsi( f ) ) ) << to_string( f );
        EXPECT_TRUE( compare_prop_to_modal( m, fs ).disagreements.empty() );
    }
}

TEST( ModalToProp, FreshRoot )
{
    modal_model mm{ modal_frame{ { "a", "b" }, modal_family{ 2 } }, valuation{ { "p" }, {} } };
    auto m = modal_to_prop( mm, { "p", "q" } );
    ASSERT_EQ( m.size(), 3U );
    EXPECT_EQ( m.frame().root(), 2U );
    EXPECT_EQ( m.val()[ 2 ], ( std::set< std::string >{ "p", "q" } ) );
    const auto& d = m.frame().relations().lookup( P( "p -> q" ) );
    for ( world_id w = 0; w < 3; ++w )
    {
        EXPECT_TRUE( d.contains( 2, w ) );
        if ( w < 2 )
        {
            EXPECT_FALSE( d.contains( w, 2 ) );
            EXPECT_TRUE( d.contains( w, 1 - w ) );
        }
    }
}

TEST( ModalToProp, ForcingAgreesOnOldWorlds )
{
    rng r{ 79 };
    oracle::gen g{ 83 };
    for ( int i = 0; i < 250; ++i )
    {
        std::vector< prop_formula > fs{ g.formula< prop_language >( 2, 3 ), g.formula< prop_language >( 2, 3 ) };
        auto subs = all_subformulas( fs );
        std::vector< modal_formula > idx;
        for ( const auto& f : subs )
        {
            // Indices of the boxes in corsi(f): the translated implications.
            if ( f.is( connective::imp ) )
                idx.push_back( corsi( f ).body() );
        }
        auto mm = random_modal_model( r, 4, idx, { "p", "q" } );
        auto m = modal_to_prop( mm, { "p", "q" } );
        for ( const auto& f : subs )
            for ( world_id x = 0; x < mm.size(); ++x )
                ASSERT_EQ( oracle::holds( m, x, f ), oracle::holds( mm, x, corsi( f ) ) ) << to_string( f );
        EXPECT_TRUE( compare_modal_to_prop( mm, fs ).disagreements.empty() );
    }
}

// If a modal model validates ~C^c, no world of the transferred model forces C.
TEST( ModalToProp, ClosedNegativeTransfer )
{
    rng r{ 89 };
    const std::vector< prop_formula > axioms{ P( "~~top" ), P( "~(top -> ~top)" ), P( "~bot" ) };
    int hits = 0;
    for ( int i = 0; i < 400; ++i )
    {
        std::vector< modal_formula > idx;
        for ( const auto& a : axioms )
        {
            prop_set subs = subformulas( a );
            for ( const auto& f : subs )
                if ( f.is( connective::imp ) )
                    idx.push_back( corsi( f ).body() );
        }
        auto mm = random_modal_model( r, 3, idx, {} );
        auto m = modal_to_prop( mm, {} );
        for ( const auto& a : axioms )
        {
            const auto c = a.lhs();
            const auto star = modal_formula::neg( corsi( c ) );
            if ( !oracle::valid_in( mm, star ) )
                continue;
            ++hits;
            for ( world_id x = 0; x < m.size(); ++x )
                ASSERT_FALSE( oracle::holds( m, x, c ) ) << to_string( a );
        }
    }
    EXPECT_GT( hits, 50 );
}

// Under a total default every world sees itself under ~^(2k) bot, which is
// not forced anywhere; so ~[]~^(2k) bot holds in every transferred model.
TEST( Neg2k, ValidInEveryPropToModalImage )
{
    rng r{ 97 };
    for ( int i = 0; i < 200; ++i )
    {
        auto m = random_prop_model( r, 4, { P( "p -> q" ), P( "~p" ) }, { "p", "q" } );
        if ( !m.frame().relations().default_is_total() )
            continue;
        auto mm = prop_to_modal( m );
        for ( std::size_t k = 0; k <= 3; ++k )
            ASSERT_TRUE( oracle::valid_in( mm, neg2k_axiom( k ) ) ) << k;
    }
}

// A modal countermodel validating X* for corsi(A) transfers to a
// propositional L-model refuting A.
TEST( Companion, RefutationsTransfer )
{
    oracle::gen g{ 101 };
    int transferred = 0;
    for ( const char* xs : { "", "~~top" } )
    {
        const auto x = parse_list< prop_language >( xs );
        const auto xstar = x_star( x );
        n_decider nd{ xstar };
        for ( int i = 0; i < 80; ++i )
        {
            auto a = g.formula< prop_language >( 2, 3 );
            const auto c = corsi( a );
            if ( nd.decide( c ) || sub_y( c, xstar ).size() > 12 )
                continue;
            auto cm = std::get< n_countermodel >( build_n_countermodel( nd, c ) );
            std::set< std::string > names = atoms( a );
            auto pm = modal_to_prop( cm.model, names );
            ASSERT_FALSE( oracle::holds( pm, cm.refuting, a ) ) << to_string( a );
            for ( const auto& b : x )
                ASSERT_TRUE( oracle::valid_in( pm, b ) ) << to_string( b );
            ASSERT_FALSE( decide_vf( a, x ) );
            ++transferred;
        }
    }
    EXPECT_GT( transferred, 20 );
}
