#include "subint/cli.hpp"

#include "subint/bridge.hpp"
#include "subint/caps.hpp"
#include "subint/decide_n.hpp"
#include "subint/decide_vf.hpp"
#include "subint/errors.hpp"
#include "subint/frame_conditions.hpp"
#include "subint/harness.hpp"
#include "subint/hilbert.hpp"
#include "subint/io.hpp"
#include "subint/parser.hpp"
#include "subint/syntax.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace subint
{

namespace
{

struct options
{
    std::string caps_text;
    std::string logic = "vf";
    std::string axioms;
    std::string formula;
    std::string second;
    std::string file;
    std::string format = "json";
    std::string translation;
    std::string to;
    std::string out_json;
    std::string out_dot;
    bool countermodel = false;
    bool certificate = false;
    bool as_json = false;
    std::vector< std::string > formulas;
    corpus_spec corpus;
    std::vector< std::string > suites;
    std::vector< std::string > axiom_sets;
    std::vector< std::string > modal_axiom_sets;
};

caps effective_caps( const options& o )
{
    auto c = caps_from_env();
    if ( !o.caps_text.empty() )
        c = parse_caps( o.caps_text, c );
    return c;
}

json verdict_json( const std::string& logic, const std::string& formula, const std::string& axioms, bool provable )
{
    return { { "logic", logic },
             { "formula", formula },
             { "axioms", axioms },
             { "verdict", provable ? "provable" : "refutable" } };
}

template < typename Model >
json countermodel_json( const Model& m, world_id refuting )
{
    json j = to_json( m );
    j[ "refuting" ] = m.frame().label( refuting );
    return j;
}

int cmd_decide( const options& o, std::ostream& out )
{
    const auto limits = effective_caps( o );
    if ( o.logic == "vf" )
    {
        const auto a = parse_prop( o.formula );
        vf_decider decider{ parse_list< prop_language >( o.axioms ), limits };
        require_closed_negative( decider.axioms() );
        const bool provable = decider.decide( a );
        auto j = verdict_json( "vf", to_string( a ), o.axioms, provable );
        j[ "route" ] = { { "modal_formula", to_string( corsi( a ) ) },
                         { "modal_axioms", [ & ] {
                              json xs = json::array();
                              for ( const auto& y : decider.modal().axioms() )
                                  xs.push_back( to_string( y ) );
                              return xs;
                          }() } };
        if ( provable && o.certificate )
        {
            if ( auto p = search_vf_proof( a, decider.axioms(), search_limits_from( limits ) ) )
                j[ "certificate" ] = to_json( *p );
            else
                j[ "certificate" ] = nullptr;
        }
        if ( !provable && o.countermodel )
        {
            auto built = build_vf_countermodel( decider, a, limits );
            const auto& cm = std::get< vf_countermodel >( built );
            if ( !cm.all_gates() )
                throw invariant_error{ "countermodel failed verification" };
            j[ "countermodel" ] = countermodel_json( cm.model, cm.refuting );
        }
        if ( o.as_json || o.countermodel || o.certificate )
            out << j.dump( 2 ) << '\n';
        else
            out << ( provable ? "provable" : "refutable" ) << '\n';
        return provable ? exit_provable : exit_refutable;
    }

    const auto a = parse_modal( o.formula );
    n_decider decider{ parse_list< modal_language >( o.axioms ), limits };
    const bool provable = decider.decide( a );
    auto j = verdict_json( "n", to_string( a ), o.axioms, provable );
    if ( provable && o.certificate )
    {
        if ( auto p = search_n_proof( a, decider.axioms(), search_limits_from( limits ) ) )
            j[ "certificate" ] = to_json( *p );
        else
            j[ "certificate" ] = nullptr;
    }
    if ( !provable && o.countermodel )
    {
        auto built = build_n_countermodel( decider, a, limits );
        const auto& cm = std::get< n_countermodel >( built );
        if ( verify_truth_lemma_n( cm ) || forces( cm.model, cm.refuting, a ) )
            throw invariant_error{ "countermodel failed verification" };
        j[ "countermodel" ] = countermodel_json( cm.model, cm.refuting );
    }
    if ( o.as_json || o.countermodel || o.certificate )
        out << j.dump( 2 ) << '\n';
    else
        out << ( provable ? "provable" : "refutable" ) << '\n';
    return provable ? exit_provable : exit_refutable;
}

void write_file( const std::string& path, const std::string& text )
{
    std::ofstream f{ path };
    if ( !f || !( f << text ) )
        throw precondition_error{ "cannot write " + path };
}

int cmd_countermodel( const options& o, std::ostream& out )
{
    const auto limits = effective_caps( o );
    auto emit = [ & ]( const auto& model, world_id refuting ) {
        if ( !o.out_json.empty() )
            write_file( o.out_json, countermodel_json( model, refuting ).dump( 2 ) + "\n" );
        if ( !o.out_dot.empty() )
            write_file( o.out_dot, to_dot( model ) );
        if ( o.format == "dot" )
            out << to_dot( model );
        else
            out << countermodel_json( model, refuting ).dump( 2 ) << '\n';
    };

    if ( o.logic == "vf" )
    {
        const auto a = parse_prop( o.formula );
        vf_decider decider{ parse_list< prop_language >( o.axioms ), limits };
        require_closed_negative( decider.axioms() );
        auto built = build_vf_countermodel( decider, a, limits );
        if ( std::holds_alternative< is_theorem >( built ) )
        {
            out << "is-theorem\n";
            return exit_provable;
        }
        const auto& cm = std::get< vf_countermodel >( built );
        if ( !cm.all_gates() )
            throw invariant_error{ "countermodel failed verification" };
        emit( cm.model, cm.refuting );
        return exit_refutable;
    }

    const auto a = parse_modal( o.formula );
    n_decider decider{ parse_list< modal_language >( o.axioms ), limits };
    auto built = build_n_countermodel( decider, a, limits );
    if ( std::holds_alternative< is_theorem >( built ) )
    {
        out << "is-theorem\n";
        return exit_provable;
    }
    const auto& cm = std::get< n_countermodel >( built );
    if ( verify_truth_lemma_n( cm ) || forces( cm.model, cm.refuting, a ) )
        throw invariant_error{ "countermodel failed verification" };
    emit( cm.model, cm.refuting );
    return exit_refutable;
}

template < language Lang >
int report_forcing( const fmt_model< Lang >& m, const basic_formula< Lang >& a, std::ostream& out )
{
    evaluator< Lang > ev{ m };
    std::vector< world_id > refuting;
    for ( world_id w = 0; w < m.size(); ++w )
    {
        const bool f = ev.forces( w, a );
        out << "world " << m.frame().label( w ) << ": " << ( f ? "forced" : "not forced" ) << '\n';
        if ( !f )
            refuting.push_back( w );
    }
    if ( refuting.empty() )
    {
        out << "valid\n";
        return exit_provable;
    }
    for ( auto w : refuting )
        out << "invalid at world " << m.frame().label( w ) << '\n';
    return exit_refutable;
}

int cmd_check_model( const options& o, std::ostream& out )
{
    const auto model = model_from_json( load_json( o.file ) );
    if ( const auto* pm = std::get_if< prop_model >( &model ) )
        return report_forcing( *pm, parse_prop( o.formula ), out );
    return report_forcing( std::get< modal_model >( model ), parse_modal( o.formula ), out );
}

int cmd_check_proof( const options& o, std::ostream& out )
{
    const auto proof = proof_from_json( load_json( o.file ) );
    std::optional< proof_error > err;
    std::string conclusion;
    if ( const auto* vp = std::get_if< vf_proof >( &proof ) )
    {
        err = check_proof( *vp );
        if ( !vp->lines.empty() )
            conclusion = to_string( vp->conclusion() );
    }
    else
    {
        const auto& np = std::get< n_proof >( proof );
        err = check_proof( np, effective_caps( o ).atoms );
        if ( !np.lines.empty() )
            conclusion = to_string( np.conclusion() );
    }
    if ( err )
    {
        if ( err->line )
            out << "line " << *err->line << ": " << err->reason << '\n';
        else
            out << err->reason << '\n';
        return exit_refutable;
    }
    out << "ok: " << conclusion << '\n';
    return exit_provable;
}

int cmd_translate( const options& o, std::ostream& out )
{
    if ( o.translation == "x-star" )
    {
        const auto x = parse_list< prop_language >( o.formula );
        for ( const auto& y : x_star( x ) )
            out << to_string( y ) << '\n';
        return exit_provable;
    }
    const auto a = parse_prop( o.formula );
    out << to_string( o.translation == "godel" ? godel( a ) : corsi( a ) ) << '\n';
    return exit_provable;
}

int cmd_slash( const options& o, std::ostream& out )
{
    vf_decider decider{ parse_list< prop_language >( o.axioms ), effective_caps( o ) };
    require_closed_negative( decider.axioms() );
    const bool s = slash( decider, parse_prop( o.formula ) );
    out << ( s ? "slashed" : "not slashed" ) << '\n';
    return s ? exit_provable : exit_refutable;
}

int cmd_dp_split( const options& o, std::ostream& out )
{
    vf_decider decider{ parse_list< prop_language >( o.axioms ), effective_caps( o ) };
    require_closed_negative( decider.axioms() );
    switch ( dp_split( decider, parse_prop( o.formula ), parse_prop( o.second ) ) )
    {
    case dp_side::left: out << "left\n"; return exit_provable;
    case dp_side::right: out << "right\n"; return exit_provable;
    case dp_side::not_provable: break;
    }
    out << "not-provable\n";
    return exit_refutable;
}

int cmd_transfer( const options& o, std::ostream& out )
{
    const auto model = model_from_json( load_json( o.file ) );
    std::vector< prop_formula > formulas;
    for ( const auto& text : o.formulas )
        for ( const auto& s : subformulas( parse_prop( text ) ) )
            if ( std::find( formulas.begin(), formulas.end(), s ) == formulas.end() )
                formulas.push_back( s );

    const bool is_prop = std::holds_alternative< prop_model >( model );
    if ( ( o.to == "modal" && !is_prop ) || ( o.to == "prop" && is_prop ) )
        throw precondition_error{ "--to " + o.to + " needs a " + ( is_prop ? "modal" : "propositional" ) +
                                  " model" };

    json j;
    transfer_report rep;
    if ( const auto* pm = std::get_if< prop_model >( &model ) )
    {
        j[ "model" ] = to_json( prop_to_modal( *pm, formulas ) );
        rep = compare_prop_to_modal( *pm, formulas );
    }
    else
    {
        const auto& mm = std::get< modal_model >( model );
        std::set< std::string > universe;
        for ( const auto& f : formulas )
            collect_atoms( f.node(), universe );
        j[ "model" ] = to_json( modal_to_prop( mm, universe ) );
        rep = compare_modal_to_prop( mm, formulas );
    }
    j[ "comparisons" ] = rep.comparisons;
    json rows = json::array();
    for ( const auto& d : rep.disagreements )
        rows.push_back( { { "world", d.world }, { "formula", d.formula }, { "source", d.source }, { "target", d.target } } );
    j[ "disagreements" ] = rows;
    out << j.dump( 2 ) << '\n';
    return rep.disagreements.empty() ? exit_provable : exit_refutable;
}

int cmd_frame_check( const options& o, std::ostream& out )
{
    const auto model = model_from_json( load_json( o.file ) );
    const auto* pm = std::get_if< prop_model >( &model );
    if ( !pm )
        throw precondition_error{ "frame-check needs a propositional frame" };
    const auto c = check_frame_condition( pm->frame(), parse_prop( o.formula ) );
    out << "validity: " << ( c.validity ? "true" : "false" ) << '\n';
    out << "condition: " << ( c.condition ? "true" : "false" ) << '\n';
    out << "clause: " << c.clause << '\n';
    return c.validity == c.condition ? exit_provable : exit_refutable;
}

int cmd_fuzz( options o, std::ostream& out )
{
    o.corpus.limits = effective_caps( o );
    if ( !o.axiom_sets.empty() )
        o.corpus.axiom_sets = o.axiom_sets;
    if ( !o.modal_axiom_sets.empty() )
        o.corpus.modal_axiom_sets = o.modal_axiom_sets;
    for ( auto& s : o.corpus.axiom_sets )
        if ( s == "empty" )
            s.clear();
    for ( auto& s : o.corpus.modal_axiom_sets )
        if ( s == "empty" )
            s.clear();

    fuzz_session session{ o.corpus };
    std::vector< property_result > results;
    const auto suites = o.suites.empty() ? suite_names : o.suites;
    for ( const auto& name : suites )
        for ( auto& r : session.run( name ) )
            results.push_back( std::move( r ) );
    const auto report = fuzz_report( o.corpus, results );
    out << report.dump( 2 ) << '\n';
    return report[ "ok" ].get< bool >() ? exit_provable : exit_refutable;
}

} // namespace

int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Decision procedures, countermodels and proof checking for VF and N", "subintkit" };
    app.require_subcommand( 1 );
    options o;
    app.add_option( "--caps", o.caps_text, "size guards, e.g. sub_x=14,atoms=20 (overrides SUBINTKIT_CAPS)" );

    auto logic_opt = [ & ]( CLI::App* c ) {
        c->add_option( "--logic", o.logic, "vf or n" )->check( CLI::IsMember( { "vf", "n" } ) );
    };
    auto axioms_opt = [ & ]( CLI::App* c ) {
        c->add_option( "--axioms", o.axioms, "semicolon-separated axiom set" );
    };

    auto* decide = app.add_subcommand( "decide", "provable (exit 0) or refutable (exit 1)" );
    logic_opt( decide );
    axioms_opt( decide );
    decide->add_flag( "--countermodel", o.countermodel, "attach a verified countermodel on refutation" );
    decide->add_flag( "--certificate", o.certificate, "attach a bounded-search proof when one is found" );
    decide->add_flag( "--json", o.as_json, "print the verdict as JSON" );
    decide->add_option( "formula", o.formula )->required();

    auto* countermodel = app.add_subcommand( "countermodel", "build and verify a finite countermodel" );
    logic_opt( countermodel );
    axioms_opt( countermodel );
    countermodel->add_option( "--format", o.format, "json or dot" )->check( CLI::IsMember( { "json", "dot" } ) );
    countermodel->add_option( "--out", o.out_json, "also write the model JSON here" );
    countermodel->add_option( "--dot", o.out_dot, "also write a DOT rendering here" );
    countermodel->add_option( "formula", o.formula )->required();

    auto* check_model = app.add_subcommand( "check-model", "forcing of a formula at every world of a model file" );
    check_model->add_option( "model", o.file )->required();
    check_model->add_option( "formula", o.formula )->required();

    auto* check_proof_cmd = app.add_subcommand( "check-proof", "check a proof file line by line" );
    check_proof_cmd->add_option( "proof", o.file )->required();

    auto* translate = app.add_subcommand( "translate", "corsi, godel or x-star image" );
    translate->add_option( "translation", o.translation )
            ->required()
            ->check( CLI::IsMember( { "corsi", "godel", "x-star" } ) );
    translate->add_option( "formula", o.formula, "formula, or axiom list for x-star" )->required();

    auto* slash_cmd = app.add_subcommand( "slash", "Aczel slash relative to VF + X" );
    axioms_opt( slash_cmd );
    slash_cmd->add_option( "formula", o.formula )->required();

    auto* dp = app.add_subcommand( "dp-split", "which disjunct of a provable A | B is provable" );
    axioms_opt( dp );
    dp->add_option( "left", o.formula )->required();
    dp->add_option( "right", o.second )->required();

    auto* transfer_cmd = app.add_subcommand( "transfer", "move a model across the translation and compare forcing" );
    transfer_cmd->add_option( "--to", o.to, "modal or prop; must match the input kind" )
            ->check( CLI::IsMember( { "modal", "prop" } ) );
    transfer_cmd->add_option( "model", o.file )->required();
    transfer_cmd->add_option( "formulas", o.formulas, "propositional formulas to compare" )->required();

    auto* frame_check = app.add_subcommand( "frame-check", "frame validity vs first-order condition" );
    frame_check->add_option( "model", o.file, "propositional model file (valuation ignored)" )->required();
    frame_check->add_option( "axiom", o.formula )->required();

    auto* fuzz = app.add_subcommand( "fuzz", "run the property suites over a seeded corpus" );
    fuzz->add_option( "--seed", o.corpus.seed );
    fuzz->add_option( "--samples", o.corpus.samples, "formula pairs per axiom set" );
    fuzz->add_option( "--atoms", o.corpus.atoms );
    fuzz->add_option( "--depth", o.corpus.depth );
    fuzz->add_option( "--axiom-set", o.axiom_sets, "propositional axiom set (repeatable; 'empty' for none)" );
    fuzz->add_option( "--modal-axiom-set", o.modal_axiom_sets, "modal axiom set (repeatable; 'empty' for none)" );
    fuzz->add_option( "--modal-samples", o.corpus.modal_samples );
    fuzz->add_option( "--models", o.corpus.models );
    fuzz->add_option( "--frames", o.corpus.frames );
    fuzz->add_option( "--transfer-pairs", o.corpus.transfer_pairs );
    fuzz->add_option( "--closure-cap", o.corpus.closure_cap );
    fuzz->add_option( "--suite", o.suites, "restrict to these suites (repeatable)" )
            ->check( CLI::IsMember( suite_names ) );
    fuzz->add_flag( "--mutant", o.corpus.mutant, "flip one decision to check that the suites notice" );

    std::vector< std::string > reversed( args.rbegin(), args.rend() );
    try
    {
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? 0 : exit_error;
    }

    try
    {
        if ( *decide )
            return cmd_decide( o, out );
        if ( *countermodel )
            return cmd_countermodel( o, out );
        if ( *check_model )
            return cmd_check_model( o, out );
        if ( *check_proof_cmd )
            return cmd_check_proof( o, out );
        if ( *translate )
            return cmd_translate( o, out );
        if ( *slash_cmd )
            return cmd_slash( o, out );
        if ( *dp )
            return cmd_dp_split( o, out );
        if ( *transfer_cmd )
            return cmd_transfer( o, out );
        if ( *frame_check )
            return cmd_frame_check( o, out );
        if ( *fuzz )
            return cmd_fuzz( o, out );
    }
    catch ( const parse_error& e )
    {
        err << "parse error: " << e.what() << '\n';
    }
    catch ( const model_error& e )
    {
        err << "model error: " << e.what() << '\n';
    }
    catch ( const resource_error& e )
    {
        err << "resource limit: " << e.what() << '\n';
    }
    catch ( const precondition_error& e )
    {
        err << "bad input: " << e.what() << '\n';
    }
    catch ( const std::invalid_argument& e )
    {
        err << "bad argument: " << e.what() << '\n';
    }
    catch ( const invariant_error& e )
    {
        err << "internal error: " << e.what() << '\n';
    }
    return exit_error;
}

} // namespace subint
