#include "oracles.hpp"

#include <subint/parser.hpp>
#include <subint/sat.hpp>
#include <subint/syntax.hpp>

#include <gtest/gtest.h>

using namespace subint;

namespace
{

prop_formula P( const char* s ) { return parse_prop( s ); }
modal_formula M( const char* s ) { return parse_modal( s ); }

const auto p = prop_formula::atom( "p" );
const auto q = prop_formula::atom( "q" );
const auto bot = prop_formula::falsum();
const auto top = prop_formula::top();

} // namespace

TEST( Parse, PrecedenceAndSugar )
{
    EXPECT_EQ( P( "p & q -> p" ), prop_formula::implies( prop_formula::conj( p, q ), p ) );
    EXPECT_EQ( P( "~top" ), prop_formula::implies( prop_formula::implies( bot, bot ), bot ) );
    EXPECT_EQ( M( "[](p -> p)" ), modal_formula::box( M( "p -> p" ) ) );
    EXPECT_EQ( M( "box p" ), M( "[]p" ) );
    EXPECT_EQ( P( "p -> q -> p" ), prop_formula::implies( p, prop_formula::implies( q, p ) ) );
    EXPECT_EQ( P( "p | q & p" ), prop_formula::disj( p, prop_formula::conj( q, p ) ) );
    EXPECT_EQ( P( "p <-> q" ),
               prop_formula::conj( prop_formula::implies( p, q ), prop_formula::implies( q, p ) ) );
    EXPECT_EQ( P( "~p | q" ), prop_formula::disj( prop_formula::neg( p ), q ) );
}

TEST( Parse, IffIsLeftAssociative )
{
    const auto r = prop_formula::atom( "r" );
    EXPECT_EQ( P( "p <-> q <-> r" ), prop_formula::iff( prop_formula::iff( p, q ), r ) );
}

TEST( Parse, ErrorsCarryOffsets )
{
    try
    {
        (void)P( "p & & q" );
        FAIL();
    }
    catch ( const parse_error& e )
    {
        EXPECT_EQ( e.offset(), 4U );
    }
    try
    {
        (void)P( "[]p" );
        FAIL();
    }
    catch ( const parse_error& e )
    {
        EXPECT_EQ( e.offset(), 0U );
    }
    EXPECT_THROW( (void)P( "(p" ), parse_error );
    EXPECT_THROW( (void)P( "P" ), parse_error );
    EXPECT_THROW( (void)P( "" ), parse_error );
    EXPECT_THROW( (void)P( "p q" ), parse_error );
}

TEST( Parse, ListSkipsEmptyItems )
{
    auto xs = parse_list< prop_language >( "~~top; ;~bot" );
    ASSERT_EQ( xs.size(), 2U );
    EXPECT_EQ( xs[ 1 ], prop_formula::neg( bot ) );
}

TEST( Print, RoundTripProperty )
{
    oracle::gen g{ 0x9e3779b97f4a7c15ULL };
    for ( int i = 0; i < 2000; ++i )
    {
        auto f = g.formula< modal_language >( 3, 5 );
        auto text = to_string( f );
        auto back = parse_modal( text );
        ASSERT_EQ( back, f ) << text;
        ASSERT_EQ( to_string( back ), text );
        auto pf = g.formula< prop_language >( 3, 5 );
        ASSERT_EQ( parse_prop( to_string( pf ) ), pf ) << to_string( pf );
    }
}

TEST( Order, SizeThenText )
{
    formula_order lt;
    EXPECT_TRUE( lt( p, prop_formula::conj( p, p ) ) );
    EXPECT_TRUE( lt( p, q ) );
    EXPECT_FALSE( lt( q, p ) );
    EXPECT_FALSE( lt( p, p ) );
}

TEST( BigConnectives, EmptyCases )
{
    EXPECT_EQ( big_conj( prop_set{} ), top );
    EXPECT_EQ( big_disj( prop_set{} ), bot );
    EXPECT_EQ( big_conj( prop_set{ p } ), p );
    EXPECT_EQ( big_conj( prop_set{ q, p } ), prop_formula::conj( p, q ) );
}

TEST( SubX, Examples )
{
    EXPECT_EQ( sub_x( p, {} ), ( prop_set{ p, bot, top } ) );
    EXPECT_EQ( sub_x( P( "p -> q" ), {} ), ( prop_set{ p, q, P( "p -> q" ), bot, top } ) );

    const std::vector< prop_formula > x{ P( "~~top" ) };
    const auto not_top = prop_formula::implies( top, bot );
    const prop_set expected{ p, bot, top, not_top, prop_formula::implies( not_top, bot ) };
    EXPECT_EQ( sub_x( p, x ), expected );
}

TEST( SubX, ClosedAndBounded )
{
    oracle::gen g{ 7 };
    for ( int i = 0; i < 300; ++i )
    {
        auto a = g.formula< prop_language >( 3, 4 );
        std::vector< prop_formula > x{ P( "~~top" ), P( "~(top -> ~top)" ) };
        auto s = sub_x( a, x );
        std::size_t bound = a.size() + 2;
        for ( const auto& b : x )
            bound += b.size();
        EXPECT_LE( s.size(), bound );
        EXPECT_TRUE( s.contains( bot ) && s.contains( top ) );
        for ( const auto& f : s )
        {
            if ( !f.is( connective::atom ) && !f.is( connective::falsum ) )
            {
                ASSERT_TRUE( s.contains( f.lhs() ) && s.contains( f.rhs() ) );
            }
        }
    }
}

TEST( SubY, Examples )
{
    const auto bp = M( "[]p" );
    const modal_set expected{ bp, M( "p" ), M( "~[]p" ), M( "~p" ), M( "bot" ), M( "top" ) };
    EXPECT_EQ( sub_y( bp, {} ), expected );
    EXPECT_EQ( tilde( M( "~p" ) ), M( "p" ) );
    EXPECT_EQ( tilde( M( "p" ) ), M( "~p" ) );
}

TEST( SubY, ClosureIsFixpoint )
{
    oracle::gen g{ 11 };
    const std::vector< modal_formula > y{ M( "~[]bot" ) };
    for ( int i = 0; i < 200; ++i )
    {
        auto a = g.formula< modal_language >( 2, 3 );
        auto s = sub_y( a, y );
        EXPECT_TRUE( s.contains( a ) && s.contains( y[ 0 ] ) );
        for ( const auto& f : s )
        {
            ASSERT_TRUE( s.contains( tilde( f ) ) ) << to_string( f );
            if ( f.is( connective::box ) )
            {
                ASSERT_TRUE( s.contains( f.body() ) );
            }
            else if ( !f.is( connective::atom ) && !f.is( connective::falsum ) )
            {
                ASSERT_TRUE( s.contains( f.lhs() ) && s.contains( f.rhs() ) );
            }
        }
    }
}

TEST( Translate, Corsi )
{
    EXPECT_EQ( corsi( p ), M( "p" ) );
    EXPECT_EQ( corsi( P( "p -> q" ) ), M( "[](p -> q)" ) );
    EXPECT_EQ( corsi( P( "~~top" ) ), M( "[]([]([](bot -> bot) -> bot) -> bot)" ) );
    EXPECT_EQ( corsi( P( "p & q | bot" ) ), M( "p & q | bot" ) );
}

TEST( Translate, Godel )
{
    EXPECT_EQ( godel( p ), M( "[]p" ) );
    EXPECT_EQ( godel( bot ), M( "bot" ) );
    EXPECT_EQ( godel( P( "p -> q" ) ), M( "[]([]p -> []q)" ) );
}

TEST( Translate, CorsiIsInjectiveAndKeepsClosedness )
{
    oracle::gen g{ 3 };
    std::map< modal_formula, prop_formula, formula_order > seen;
    for ( int i = 0; i < 2000; ++i )
    {
        auto a = g.formula< prop_language >( 2, 4 );
        auto c = corsi( a );
        EXPECT_EQ( c.is_closed(), a.is_closed() );
        auto [ it, fresh ] = seen.emplace( c, a );
        if ( !fresh )
        {
            ASSERT_EQ( it->second, a );
        }
    }
}

TEST( ClosedNegative, Examples )
{
    EXPECT_TRUE( is_closed_negative_axiom( P( "~~top" ) ) );
    EXPECT_TRUE( is_closed_negative_axiom( P( "~(top -> ~top)" ) ) );
    EXPECT_TRUE( is_closed_negative_axiom( P( "~bot" ) ) );
    EXPECT_FALSE( is_closed_negative_axiom( P( "~top" ) ) );
    EXPECT_FALSE( is_closed_negative_axiom( P( "~~p" ) ) );
    EXPECT_TRUE( is_closed_negative_axiom( P( "top" ) ) ); // bot -> bot is ~bot
    EXPECT_THROW( require_closed_negative( std::vector{ P( "~top" ) } ), precondition_error );
}

TEST( ClosedNegative, ImpliesClassicalTheorem )
{
    oracle::gen g{ 5 };
    int hits = 0;
    for ( int i = 0; i < 3000; ++i )
    {
        auto b = prop_formula::neg( g.formula< prop_language >( 1, 4 ) );
        if ( !b.is_closed() || !is_closed_negative_axiom( b ) )
            continue;
        ++hits;
        EXPECT_TRUE( oracle::entails( {}, as_modal( b ) ) ) << to_string( b );
    }
    EXPECT_GT( hits, 0 );
}

TEST( XStar, Examples )
{
    EXPECT_TRUE( x_star( {} ).empty() );
    auto one = x_star( std::vector{ P( "~~top" ) } );
    ASSERT_EQ( one.size(), 1U );
    EXPECT_EQ( one[ 0 ], M( "[]([](bot -> bot) -> bot) -> bot" ) );
    EXPECT_EQ( x_star( std::vector{ P( "~bot" ) } )[ 0 ], M( "bot -> bot" ) );
    EXPECT_THROW( x_star( std::vector{ P( "~p" ) } ), precondition_error );
}

TEST( Neg2k, Examples )
{
    EXPECT_EQ( neg2k_axiom( 0 ), M( "~[]bot" ) );
    EXPECT_EQ( neg2k_axiom( 1 ), M( "~[]~~bot" ) );
    EXPECT_EQ( neg2k_axiom( 2 ), M( "~[]~~~~bot" ) );
}

TEST( Sat, Examples )
{
    EXPECT_TRUE( is_tautology( M( "p | ~p" ) ) );
    EXPECT_TRUE( taut_consequence( std::vector{ M( "[]p" ) }, M( "[]p | q" ) ) );
    EXPECT_FALSE( is_tautology( M( "[](p | ~p)" ) ) );
    EXPECT_FALSE( satisfiable( std::vector{ M( "p" ), M( "~p" ) } ) );
    EXPECT_TRUE( satisfiable( std::vector{ M( "[]p" ), M( "~p" ) } ) );
}

TEST( Sat, AtomCap )
{
    EXPECT_THROW( (void)is_tautology( M( "p | q | r" ), 2 ), resource_error );
    EXPECT_NO_THROW( (void)is_tautology( M( "p | q | r" ), 3 ) );
}

TEST( Sat, AgreesWithTruthTable )
{
    oracle::gen g{ 13 };
    for ( int i = 0; i < 1500; ++i )
    {
        std::vector< modal_formula > prem;
        for ( std::size_t k = g.below( 3 ); k > 0; --k )
            prem.push_back( g.formula< modal_language >( 3, 3 ) );
        auto goal = g.formula< modal_language >( 3, 3 );
        ASSERT_EQ( taut_consequence( prem, goal ), oracle::entails( prem, goal ) ) << to_string( goal );
    }
}
