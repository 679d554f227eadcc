#include "oracles.hpp"

#include <subint/frame_conditions.hpp>
#include <subint/harness.hpp>
#include <subint/syntax.hpp>

#include <gtest/gtest.h>

using namespace subint;

namespace
{

prop_formula P( const char* s ) { return parse_prop( s ); }

std::vector< std::string > labels( std::size_t n )
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < n; ++i )
        out.push_back( std::to_string( i ) );
    return out;
}

prop_frame one_world() { return prop_frame{ labels( 1 ), prop_family{ 1 }, 0 }; }

} // namespace

// The relations are {x != 1} for top -> p & q and {x <= y} for top -> q & p,
// q is false everywhere. World 1 has no successor under the first index, so
// it forces top -> p & q vacuously; every world reaches itself under the
// second, so top -> q & p is forced nowhere.
TEST( Fig1, ForcingFollowsTheRelations )
{
    const auto m = fig1_model();
    EXPECT_TRUE( forces( m, 2, P( "p" ) ) );
    EXPECT_FALSE( forces( m, 1, P( "p" ) ) );
    EXPECT_TRUE( forces( m, 1, P( "top -> p & q" ) ) );
    EXPECT_FALSE( forces( m, 0, P( "top -> p & q" ) ) );
    EXPECT_FALSE( forces( m, 1, P( "top -> q & p" ) ) );
    EXPECT_FALSE( forces( m, 0, P( "top -> q & p" ) ) );
    EXPECT_FALSE( forces( m, 0, P( "(top -> p & q) -> (top -> q & p)" ) ) );
    EXPECT_TRUE( forces( m, 0, P( "(top -> q & p) -> (top -> p & q)" ) ) );
    EXPECT_FALSE( forces( m, 0, fig1_formula() ) );
    EXPECT_FALSE( model_valid( m, fig1_formula() ) );
    EXPECT_EQ( refuting_worlds( m, fig1_formula() ), ( std::vector< world_id >{ 0, 1, 2 } ) );
}

TEST( Fig1, Structure )
{
    const auto m = fig1_model();
    EXPECT_EQ( m.frame().root(), 0U );
    EXPECT_FALSE( root_condition_violation( m.frame().relations(), 0 ).has_value() );
    const auto& r1 = m.frame().relations().lookup( P( "top -> p & q" ) );
    const auto& r2 = m.frame().relations().lookup( P( "top -> q & p" ) );
    for ( world_id x = 0; x < 3; ++x )
        for ( world_id y = 0; y < 3; ++y )
        {
            EXPECT_EQ( r1.contains( x, y ), x != 1 );
            EXPECT_EQ( r2.contains( x, y ), x <= y );
        }
    EXPECT_TRUE( m.frame().relations().default_is_total() );
    EXPECT_EQ( fig1_formula(), P( "(top -> (p & q)) <-> (top -> (q & p))" ) );
}

TEST( Forcing, TrivialCases )
{
    const auto m = fig1_model();
    for ( world_id x = 0; x < 3; ++x )
        EXPECT_FALSE( forces( m, x, P( "bot" ) ) );
    EXPECT_TRUE( model_valid( m, P( "p -> p" ) ) );
    EXPECT_THROW( (void)forces( m, 3, P( "p" ) ), std::out_of_range );
}

TEST( Forcing, ExcludedMiddleFails )
{
    prop_family fam{ 2 };
    prop_model m{ prop_frame{ labels( 2 ), fam, 0 }, valuation{ {}, { "p" } } };
    EXPECT_FALSE( forces( m, 0, P( "p | ~p" ) ) );
    EXPECT_FALSE( model_valid( m, P( "p | ~p" ) ) );
}

TEST( Forcing, AgreesWithNaiveClauses )
{
    rng r{ 99 };
    oracle::gen g{ 21 };
    for ( int i = 0; i < 300; ++i )
    {
        std::vector< prop_formula > fs;
        for ( int k = 0; k < 5; ++k )
            fs.push_back( g.formula< prop_language >( 2, 4 ) );
        prop_set imps;
        for ( const auto& f : fs )
            oracle::implications( f, imps );
        auto m = random_prop_model( r, 4, { imps.begin(), imps.end() }, { "p", "q" } );
        evaluator< prop_language > ev{ m };
        for ( const auto& f : fs )
            for ( world_id x = 0; x < m.size(); ++x )
                ASSERT_EQ( ev.forces( x, f ), oracle::holds( m, x, f ) ) << to_string( f );

        modal_set bodies;
        auto mf = g.formula< modal_language >( 2, 4 );
        oracle::box_bodies( mf, bodies );
        auto mm = random_modal_model( r, 4, { bodies.begin(), bodies.end() }, { "p", "q" } );
        for ( world_id x = 0; x < mm.size(); ++x )
            ASSERT_EQ( forces( mm, x, mf ), oracle::holds( mm, x, mf ) ) << to_string( mf );
    }
}

TEST( Frames, RootConditionIsEnforced )
{
    relation r{ 2 };
    r.set( 0, 0 );
    r.set( 1, 1 );
    prop_family fam{ 2 };
    fam.set( P( "p -> q" ), r );
    EXPECT_THROW( ( prop_frame{ labels( 2 ), fam, 0 } ), model_error );
    EXPECT_THROW( ( prop_frame{ labels( 2 ), prop_family{ 2, r }, 0 } ), model_error );
    EXPECT_THROW( ( prop_frame{ labels( 2 ), prop_family{ 2 }, 2 } ), model_error );
    EXPECT_THROW( ( prop_frame{ { "a", "a" }, prop_family{ 2 }, 0 } ), model_error );
    EXPECT_NO_THROW( ( modal_frame{ labels( 2 ), modal_family{ 2, r } } ) );
}

TEST( Frames, RandomRootViolationsRejected )
{
    rng r{ 5 };
    int rejected = 0;
    for ( int i = 0; i < 300; ++i )
    {
        const std::size_t n = 1 + r.below( 4 );
        relation rel = random_relation( r, n, std::nullopt );
        prop_family fam{ n };
        fam.set( P( "p -> p" ), rel );
        bool reaches = true;
        for ( world_id w = 0; w < n; ++w )
            reaches = reaches && rel.contains( 0, w );
        if ( reaches )
        {
            EXPECT_NO_THROW( ( prop_frame{ labels( n ), fam, 0 } ) );
        }
        else
        {
            ++rejected;
            EXPECT_THROW( ( prop_frame{ labels( n ), fam, 0 } ), model_error );
        }
    }
    EXPECT_GT( rejected, 0 );
}

TEST( FrameValid, Examples )
{
    EXPECT_TRUE( frame_valid( one_world(), P( "~bot" ) ) );
    EXPECT_TRUE( frame_valid( fig1_model().frame(), P( "~bot" ) ) );
    EXPECT_FALSE( frame_valid( fig1_model().frame(), fig1_formula() ) );
    EXPECT_TRUE( frame_valid( one_world(), P( "~~top" ) ) );
    EXPECT_TRUE( frame_valid( one_world(), P( "p -> p" ) ) );
    EXPECT_FALSE( frame_valid( one_world(), P( "p" ) ) );
}

TEST( FrameValid, Cap )
{
    EXPECT_THROW( (void)frame_valid( fig1_model().frame(), P( "p & q & r & s & t & u & a6" ) ), resource_error );
    EXPECT_THROW( (void)frame_valid( fig1_model().frame(), P( "p & q" ), 5 ), resource_error );
}

// Closed formulas ignore the valuation.
TEST( FrameValid, ClosedFormulasIgnoreValuation )
{
    rng r{ 17 };
    oracle::gen g{ 29 };
    for ( int i = 0; i < 300; ++i )
    {
        auto c = g.formula< prop_language >( 1, 4 );
        if ( !c.is_closed() )
            continue;
        prop_set imps;
        oracle::implications( c, imps );
        auto m1 = random_prop_model( r, 4, { imps.begin(), imps.end() }, { "p", "q" } );
        valuation v( m1.size() );
        for ( auto& w : v )
            if ( r.chance( 1, 2 ) )
                w.insert( "p" );
        prop_model m2{ m1.frame(), v };
        for ( world_id x = 0; x < m1.size(); ++x )
            ASSERT_EQ( forces( m1, x, c ), forces( m2, x, c ) );
    }
}

TEST( FrameConditions, Examples )
{
    auto c = check_frame_condition( one_world(), P( "~~top" ) );
    EXPECT_TRUE( c.validity );
    EXPECT_TRUE( c.condition );

    // World 1 has no successor under ~top.
    relation root_only{ 2 };
    root_only.set( 0, 0 );
    root_only.set( 0, 1 );
    prop_family fam{ 2 };
    fam.set( P( "~top" ), root_only );
    prop_frame f{ labels( 2 ), fam, 0 };
    c = check_frame_condition( f, P( "~~top" ) );
    EXPECT_FALSE( c.validity );
    EXPECT_FALSE( c.condition );
    EXPECT_FALSE( is_serial( f, P( "~top" ) ) );

    c = check_frame_condition( f, P( "~bot" ) );
    EXPECT_TRUE( c.validity );
    EXPECT_TRUE( c.condition );
}

TEST( FrameConditions, AgreeOnRandomFrames )
{
    rng r{ 2024 };
    const std::vector< prop_formula > axioms{ P( "~bot" ), P( "~~top" ), P( "~(top -> ~top)" ), P( "~~~~top" ),
                                              P( "~(top -> bot)" ), P( "~(~top | ~~~top)" ) };
    prop_set imps;
    for ( const auto& a : axioms )
        oracle::implications( a, imps );
    const std::vector< prop_formula > indices( imps.begin(), imps.end() );
    int valid_seen = 0, invalid_seen = 0;
    for ( int i = 0; i < 400; ++i )
    {
        auto m = random_prop_model( r, 4, indices, {}, { 1, 4 } );
        for ( const auto& a : axioms )
        {
            auto c = check_frame_condition( m.frame(), a );
            ASSERT_EQ( c.validity, c.condition ) << to_string( a ) << " clause " << c.clause;
            ( c.validity ? valid_seen : invalid_seen )++;
        }
    }
    EXPECT_GT( valid_seen, 0 );
    EXPECT_GT( invalid_seen, 0 );
}
