#include "oracles.hpp"

#include <subint/decide_n.hpp>
#include <subint/decide_vf.hpp>
#include <subint/hilbert.hpp>
#include <subint/io.hpp>
#include <subint/syntax.hpp>

#include <gtest/gtest.h>

using namespace subint;

namespace
{

prop_formula P( const char* s ) { return parse_prop( s ); }
modal_formula M( const char* s ) { return parse_modal( s ); }

vf_proof fixture( const std::string& name )
{
    auto any = proof_from_json( load_json( std::string{ SUBINT_DATA_DIR } + "/proofs/" + name + ".json" ) );
    return std::get< vf_proof >( any );
}

rule_use rule( rule_kind k, std::vector< std::size_t > from ) { return { k, std::move( from ) }; }

} // namespace

TEST( Schemas, Shapes )
{
    EXPECT_EQ( to_string( vf_schema( 1 ) ), "A & B -> A" );
    EXPECT_EQ( to_string( vf_schema( 7 ) ), "A & (B | C) -> A & B | A & C" );
    EXPECT_THROW( (void)vf_schema( 8 ), precondition_error );
    auto s = match_schema( vf_schema( 3 ), P( "p -> p | (q -> r)" ) );
    ASSERT_TRUE( s.has_value() );
    EXPECT_EQ( s->at( "B" ), P( "q -> r" ) );
    EXPECT_FALSE( match_schema( vf_schema( 5 ), P( "p -> q" ) ).has_value() );
    EXPECT_EQ( instantiate( vf_schema( 6 ), { { "A", P( "p" ) } } ), P( "bot -> p" ) );
}

TEST( Fixtures, AllCheckAndAreDecidedProvable )
{
    const std::map< std::string, prop_formula > expected{
        { "and_commutes", P( "(p & q) -> (q & p)" ) },
        { "or_commutes", P( "(p | q) -> (q | p)" ) },
        { "distributes", P( "(p | q) & (p | r) -> p | (q & r)" ) },
        { "conj_of_theorems", P( "(p -> p) & (q -> q)" ) },
    };
    for ( const auto& [ name, goal ] : expected )
    {
        auto proof = fixture( name );
        auto err = check_proof( proof );
        EXPECT_FALSE( err.has_value() ) << name << ": " << ( err ? err->reason : "" );
        EXPECT_EQ( proof.conclusion(), goal ) << name;
        EXPECT_TRUE( decide_vf( goal, {} ) ) << name;
    }
}

TEST( Fixtures, ConjunctionFromHypotheses )
{
    // Hypotheses have to be members of X, so closed negative axioms stand in
    // for A and B.
    vf_proof pr;
    pr.axioms = { P( "~~top" ), P( "~bot" ) };
    pr.lines = {
        { P( "~~top" ), extra_axiom{ 0 } },
        { P( "~bot" ), extra_axiom{ 1 } },
        { P( "top -> ~~top" ), rule( rule_kind::af, { 0 } ) },
        { P( "top -> ~bot" ), rule( rule_kind::af, { 1 } ) },
        { P( "top -> ~~top & ~bot" ), rule( rule_kind::rc, { 2, 3 } ) },
        { P( "top" ), schema_instance{ 6, {} } },
        { P( "~~top & ~bot" ), rule( rule_kind::mp, { 5, 4 } ) },
    };
    EXPECT_FALSE( check_proof( pr ).has_value() );
    EXPECT_TRUE( decide_vf( P( "~~top & ~bot" ), pr.axioms ) );
}

TEST( Checker, RejectsBadLines )
{
    vf_proof pr;
    pr.lines = { { P( "p -> p" ), schema_instance{ 5, {} } }, { P( "p -> q" ), rule( rule_kind::mp, { 0, 0 } ) } };
    auto err = check_proof( pr );
    ASSERT_TRUE( err.has_value() );
    EXPECT_EQ( err->line, 1U );

    pr.lines = { { P( "p -> q" ), schema_instance{ 5, {} } } };
    ASSERT_TRUE( check_proof( pr ).has_value() );
    EXPECT_EQ( check_proof( pr )->line, 0U );

    pr.lines = { { P( "p -> p" ), rule( rule_kind::af, { 0 } ) } };
    EXPECT_TRUE( check_proof( pr ).has_value() ); // self reference

    pr.lines = { { P( "p -> p" ), schema_instance{ 5, { { "A", P( "q" ) } } } } };
    EXPECT_TRUE( check_proof( pr ).has_value() ); // substitution disagrees

    pr.lines = { { P( "p | ~p" ), tautology{} } };
    EXPECT_TRUE( check_proof( pr ).has_value() ); // no tautology lines in VF

    pr.axioms = { P( "~top" ) };
    pr.lines = { { P( "~top" ), extra_axiom{ 0 } } };
    auto bad_axiom = check_proof( pr );
    ASSERT_TRUE( bad_axiom.has_value() );
    EXPECT_FALSE( bad_axiom->line.has_value() );

    pr.axioms = {};
    pr.lines = {};
    EXPECT_TRUE( check_proof( pr ).has_value() );
}

TEST( Checker, RulePremiseOrderMatters )
{
    vf_proof pr;
    pr.lines = {
        { P( "p & q -> q" ), schema_instance{ 2, {} } },
        { P( "p & q -> p" ), schema_instance{ 1, {} } },
        { P( "p & q -> q & p" ), rule( rule_kind::rc, { 1, 0 } ) },
    };
    EXPECT_TRUE( check_proof( pr ).has_value() );
    pr.lines[ 2 ].by = rule( rule_kind::rc, { 0, 1 } );
    EXPECT_FALSE( check_proof( pr ).has_value() );
}

TEST( Checker, NProofs )
{
    n_proof pr;
    pr.lines = { { M( "p -> p" ), tautology{} }, { M( "[](p -> p)" ), rule( rule_kind::nec, { 0 } ) } };
    EXPECT_FALSE( check_proof( pr ).has_value() );

    pr.lines = { { M( "[](p | ~p)" ), tautology{} } };
    EXPECT_TRUE( check_proof( pr ).has_value() );

    pr.axioms = { M( "~[]bot" ) };
    pr.lines = { { M( "~[]bot" ), extra_axiom{ 0 } },
                 { M( "~[]bot -> ([]bot -> p)" ), tautology{} },
                 { M( "[]bot -> p" ), rule( rule_kind::mp, { 0, 1 } ) } };
    EXPECT_FALSE( check_proof( pr ).has_value() );

    pr.axioms = { M( "~[]p" ) };
    EXPECT_TRUE( check_proof( pr ).has_value() ); // open axiom

    pr.axioms = {};
    pr.lines = { { M( "p -> p" ), schema_instance{ 5, {} } } };
    EXPECT_TRUE( check_proof( pr ).has_value() );

    pr.lines = { { M( "p | q | r | s" ), tautology{} } };
    EXPECT_TRUE( check_proof( pr, 2 ).has_value() ); // alphabet cap is a rejection, not a crash
}

TEST( Search, Examples )
{
    auto vf = search_vf_proof( P( "(p & q) -> (q & p)" ), {} );
    ASSERT_TRUE( vf.has_value() );
    EXPECT_FALSE( check_proof( *vf ).has_value() );
    EXPECT_EQ( vf->conclusion(), P( "(p & q) -> (q & p)" ) );

    auto n = search_n_proof( M( "[](p -> p)" ), {} );
    ASSERT_TRUE( n.has_value() );
    EXPECT_FALSE( check_proof( *n ).has_value() );

    EXPECT_FALSE( search_vf_proof( P( "bot" ), {} ).has_value() );
    EXPECT_FALSE( search_vf_proof( P( "bot" ), { P( "~~top" ) } ).has_value() );
}

TEST( Search, LineBudgetIsAResourceError )
{
    search_limits tight{ 3, 0, 5 };
    EXPECT_THROW( (void)search_vf_proof( P( "(p | q) & (p | r) -> p | (q & r)" ), {}, tight ), resource_error );
}

TEST( Search, CertificatesCheckAndAgreeWithDecider )
{
    oracle::gen g{ 101 };
    vf_decider vf{ {} };
    n_decider n{ {} };
    int found_vf = 0, found_n = 0;
    for ( int i = 0; i < 150; ++i )
    {
        auto a = g.formula< prop_language >( 2, 2 );
        if ( a.size() > 9 )
            continue;
        if ( auto pr = search_vf_proof( a, {}, { 2, 0, 50000 } ) )
        {
            ++found_vf;
            ASSERT_FALSE( check_proof( *pr ).has_value() ) << to_string( a );
            ASSERT_TRUE( vf.decide( a ) ) << to_string( a );
        }
        auto b = g.formula< modal_language >( 2, 3 );
        if ( auto pr = search_n_proof( b, {}, { 2, 0, 50000 } ) )
        {
            ++found_n;
            ASSERT_FALSE( check_proof( *pr ).has_value() ) << to_string( b );
            ASSERT_TRUE( n.decide( b ) ) << to_string( b );
        }
    }
    EXPECT_GT( found_vf, 0 );
    EXPECT_GT( found_n, 0 );
}
