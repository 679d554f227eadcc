#include "subint/io.hpp"

#include "subint/errors.hpp"
#include "subint/parser.hpp"

#include <fstream>
#include <sstream>

namespace subint
{

namespace
{

std::string ptr_escape( const std::string& key )
{
    std::string out;
    for ( char c : key )
    {
        if ( c == '~' )
            out += "~0";
        else if ( c == '/' )
            out += "~1";
        else
            out += c;
    }
    return out;
}

const json& field( const json& obj, const std::string& key, const std::string& at )
{
    if ( !obj.is_object() )
        throw model_error{ "expected an object", at };
    auto it = obj.find( key );
    if ( it == obj.end() )
        throw model_error{ "missing field '" + key + "'", at };
    return *it;
}

std::string as_string( const json& j, const std::string& at )
{
    if ( j.is_string() )
        return j.get< std::string >();
    if ( j.is_number_integer() )
        return std::to_string( j.get< long long >() );
    throw model_error{ "expected a string", at };
}

template < language Lang >
basic_formula< Lang > as_formula( const json& j, const std::string& at )
{
    const auto text = as_string( j, at );
    try
    {
        return parse< Lang >( text );
    }
    catch ( const parse_error& e )
    {
        throw model_error{ e.what(), at };
    }
}

world_id world_ref( const std::vector< std::string >& labels, const json& j, const std::string& at )
{
    const auto name = as_string( j, at );
    for ( world_id w = 0; w < labels.size(); ++w )
        if ( labels[ w ] == name )
            return w;
    throw model_error{ "unknown world '" + name + "'", at };
}

relation edges_from( const std::vector< std::string >& labels, const json& j, const std::string& at )
{
    if ( !j.is_array() )
        throw model_error{ "expected an array of edges", at };
    relation r{ labels.size() };
    for ( std::size_t i = 0; i < j.size(); ++i )
    {
        const auto here = at + "/" + std::to_string( i );
        if ( !j[ i ].is_array() || j[ i ].size() != 2 )
            throw model_error{ "an edge is a pair [from, to]", here };
        r.set( world_ref( labels, j[ i ][ 0 ], here + "/0" ), world_ref( labels, j[ i ][ 1 ], here + "/1" ) );
    }
    return r;
}

json edges_to( const std::vector< std::string >& labels, const relation& r )
{
    json out = json::array();
    for ( auto [ a, b ] : r.edges() )
        out.push_back( { labels[ a ], labels[ b ] } );
    return out;
}

template < language Lang >
fmt_model< Lang > read_model( const json& j )
{
    const auto& worlds_j = field( j, "worlds", "" );
    if ( !worlds_j.is_array() || worlds_j.empty() )
        throw model_error{ "expected a non-empty array of world ids", "/worlds" };
    std::vector< std::string > labels;
    for ( std::size_t i = 0; i < worlds_j.size(); ++i )
    {
        auto l = as_string( worlds_j[ i ], "/worlds/" + std::to_string( i ) );
        for ( const auto& seen : labels )
            if ( seen == l )
                throw model_error{ "duplicate world id '" + l + "'", "/worlds/" + std::to_string( i ) };
        labels.push_back( std::move( l ) );
    }
    const auto n = labels.size();

    relation def = relation::total( n );
    if ( auto it = j.find( "default" ); it != j.end() )
    {
        if ( it->is_string() )
        {
            if ( it->get< std::string >() != "total" )
                throw model_error{ "default must be \"total\" or {\"edges\": [...]}", "/default" };
        }
        else
            def = edges_from( labels, field( *it, "edges", "/default" ), "/default/edges" );
    }
    relation_family< Lang > family{ n, std::move( def ) };

    if ( auto it = j.find( "relations" ); it != j.end() )
    {
        if ( !it->is_array() )
            throw model_error{ "expected an array", "/relations" };
        for ( std::size_t i = 0; i < it->size(); ++i )
        {
            const auto at = "/relations/" + std::to_string( i );
            const auto& entry = ( *it )[ i ];
            auto index = as_formula< Lang >( field( entry, "index", at ), at + "/index" );
            if constexpr ( !basic_formula< Lang >::is_modal )
                if ( !index.is( connective::imp ) )
                    throw model_error{ "propositional relations are indexed by implications", at + "/index" };
            if ( family.has_explicit( index ) )
                throw model_error{ "index " + to_string( index ) + " listed twice", at + "/index" };
            family.set( index, edges_from( labels, field( entry, "edges", at ), at + "/edges" ) );
        }
    }

    valuation v( n );
    if ( auto it = j.find( "valuation" ); it != j.end() )
    {
        if ( !it->is_object() )
            throw model_error{ "expected an object from world ids to atom lists", "/valuation" };
        for ( const auto& [ key, atoms_j ] : it->items() )
        {
            const auto at = "/valuation/" + ptr_escape( key );
            const auto w = world_ref( labels, json( key ), at );
            if ( !atoms_j.is_array() )
                throw model_error{ "expected an array of atoms", at };
            for ( std::size_t i = 0; i < atoms_j.size(); ++i )
            {
                const auto a = as_formula< Lang >( atoms_j[ i ], at + "/" + std::to_string( i ) );
                if ( !a.is( connective::atom ) )
                    throw model_error{ "not an atom", at + "/" + std::to_string( i ) };
                v[ w ].insert( a.name() );
            }
        }
    }

    if constexpr ( basic_formula< Lang >::is_modal )
    {
        if ( j.contains( "root" ) )
            throw model_error{ "modal frames have no root", "/root" };
        return { fmt_frame< Lang >{ std::move( labels ), std::move( family ) }, std::move( v ) };
    }
    else
    {
        const auto root = world_ref( labels, field( j, "root", "" ), "/root" );
        if ( auto bad = root_condition_violation( family, root ) )
            throw model_error{ "root condition fails: " + *bad, "/root" };
        return { fmt_frame< Lang >{ std::move( labels ), std::move( family ), root }, std::move( v ) };
    }
}

template < language Lang >
json write_model( const fmt_model< Lang >& m )
{
    const auto& labels = m.frame().labels();
    json j;
    j[ "kind" ] = basic_formula< Lang >::is_modal ? "modal" : "prop";
    j[ "worlds" ] = labels;
    if constexpr ( !basic_formula< Lang >::is_modal )
        j[ "root" ] = labels[ m.frame().root() ];
    json rels = json::array();
    for ( const auto& [ index, r ] : m.frame().relations().explicit_relations() )
        rels.push_back( { { "index", to_string( index ) }, { "edges", edges_to( labels, r ) } } );
    j[ "relations" ] = rels;
    const auto& family = m.frame().relations();
    if ( family.default_is_total() )
        j[ "default" ] = "total";
    else
        j[ "default" ] = { { "edges", edges_to( labels, family.default_relation() ) } };
    json val = json::object();
    for ( world_id w = 0; w < m.size(); ++w )
        if ( !m.val()[ w ].empty() )
            val[ labels[ w ] ] = m.val()[ w ];
    j[ "valuation" ] = val;
    return j;
}

template < language Lang >
basic_proof< Lang > read_proof( const json& j )
{
    basic_proof< Lang > out;
    if ( auto it = j.find( "axioms" ); it != j.end() )
    {
        if ( !it->is_array() )
            throw model_error{ "expected an array of formulas", "/axioms" };
        for ( std::size_t i = 0; i < it->size(); ++i )
            out.axioms.push_back( as_formula< Lang >( ( *it )[ i ], "/axioms/" + std::to_string( i ) ) );
    }

    const auto& lines = field( j, "lines", "" );
    if ( !lines.is_array() )
        throw model_error{ "expected an array", "/lines" };
    for ( std::size_t i = 0; i < lines.size(); ++i )
    {
        const auto at = "/lines/" + std::to_string( i );
        auto f = as_formula< Lang >( field( lines[ i ], "formula", at ), at + "/formula" );
        const auto& by = field( lines[ i ], "by", at );
        const auto by_at = at + "/by";
        if ( !by.is_object() )
            throw model_error{ "expected an object", by_at };

        justification just;
        if ( by.contains( "schema" ) )
        {
            const auto& id = by[ "schema" ];
            if ( !id.is_number_integer() )
                throw model_error{ "schema id must be an integer", by_at + "/schema" };
            schema_instance s{ id.get< int >(), {} };
            if ( auto sub = by.find( "subst" ); sub != by.end() )
            {
                if ( !sub->is_object() )
                    throw model_error{ "expected an object", by_at + "/subst" };
                for ( const auto& [ letter, text ] : sub->items() )
                    s.subst.emplace( letter, as_formula< prop_language >(
                                                 text, by_at + "/subst/" + ptr_escape( letter ) ) );
            }
            just = std::move( s );
        }
        else if ( by.contains( "rule" ) )
        {
            const auto name = as_string( by[ "rule" ], by_at + "/rule" );
            auto rule = parse_rule( name );
            if ( !rule )
                throw model_error{ "unknown rule '" + name + "'", by_at + "/rule" };
            const auto& from = field( by, "from", by_at );
            if ( !from.is_array() )
                throw model_error{ "expected an array of line indices", by_at + "/from" };
            rule_use use{ *rule, {} };
            for ( std::size_t k = 0; k < from.size(); ++k )
            {
                if ( !from[ k ].is_number_unsigned() )
                    throw model_error{ "line index must be a non-negative integer",
                                       by_at + "/from/" + std::to_string( k ) };
                use.from.push_back( from[ k ].get< std::size_t >() );
            }
            just = std::move( use );
        }
        else if ( by.contains( "taut" ) )
            just = tautology{};
        else if ( by.contains( "extra" ) )
        {
            if ( !by[ "extra" ].is_number_unsigned() )
                throw model_error{ "axiom index must be a non-negative integer", by_at + "/extra" };
            just = extra_axiom{ by[ "extra" ].get< std::size_t >() };
        }
        else
            throw model_error{ "justification needs one of schema, rule, taut, extra", by_at };

        out.lines.push_back( { std::move( f ), std::move( just ) } );
    }
    return out;
}

template < language Lang >
json write_proof( const basic_proof< Lang >& p )
{
    json j;
    j[ "logic" ] = basic_formula< Lang >::is_modal ? "n" : "vf";
    json axioms = json::array();
    for ( const auto& a : p.axioms )
        axioms.push_back( to_string( a ) );
    j[ "axioms" ] = axioms;
    json lines = json::array();
    for ( const auto& line : p.lines )
    {
        json by;
        if ( const auto* s = std::get_if< schema_instance >( &line.by ) )
        {
            by[ "schema" ] = s->schema;
            json sub = json::object();
            for ( const auto& [ k, v ] : s->subst )
                sub[ k ] = to_string( v );
            by[ "subst" ] = sub;
        }
        else if ( const auto* e = std::get_if< extra_axiom >( &line.by ) )
            by[ "extra" ] = e->index;
        else if ( std::holds_alternative< tautology >( line.by ) )
            by[ "taut" ] = true;
        else
        {
            const auto& r = std::get< rule_use >( line.by );
            by[ "rule" ] = to_string( r.rule );
            by[ "from" ] = r.from;
        }
        lines.push_back( { { "formula", to_string( line.formula ) }, { "by", by } } );
    }
    j[ "lines" ] = lines;
    return j;
}

std::string dot_quote( const std::string& s )
{
    std::string out = "\"";
    for ( char c : s )
    {
        if ( c == '"' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

template < language Lang >
std::string write_dot( const fmt_model< Lang >& m )
{
    const auto& labels = m.frame().labels();
    std::ostringstream out;
    auto graph = [ & ]( const std::string& name, const relation& r ) {
        out << "digraph " << dot_quote( name ) << " {\n";
        out << "  label=" << dot_quote( name ) << ";\n";
        for ( world_id w = 0; w < m.size(); ++w )
        {
            std::string label = labels[ w ];
            if constexpr ( !basic_formula< Lang >::is_modal )
                if ( w == m.frame().root() )
                    label += " (root)";
            std::string atoms_text;
            for ( const auto& a : m.val()[ w ] )
                atoms_text += ( atoms_text.empty() ? "" : "," ) + a;
            if ( !atoms_text.empty() )
                label += "\\n" + atoms_text;
            out << "  " << dot_quote( labels[ w ] ) << " [label=" << dot_quote( label ) << "];\n";
        }
        for ( auto [ a, b ] : r.edges() )
            out << "  " << dot_quote( labels[ a ] ) << " -> " << dot_quote( labels[ b ] ) << ";\n";
        out << "}\n";
    };

    const auto& family = m.frame().relations();
    for ( const auto& [ index, r ] : family.explicit_relations() )
        graph( "R[" + to_string( index ) + "]", r );
    if ( family.default_is_total() )
        out << "// legend: every index not drawn above relates all worlds (total, edges suppressed)\n";
    else
        graph( "R[default]", family.default_relation() );
    return out.str();
}

} // namespace

any_model model_from_json( const json& j )
{
    const auto kind = as_string( field( j, "kind", "" ), "/kind" );
    if ( kind == "prop" )
        return read_model< prop_language >( j );
    if ( kind == "modal" )
        return read_model< modal_language >( j );
    throw model_error{ "kind must be \"prop\" or \"modal\"", "/kind" };
}

json to_json( const prop_model& m ) { return write_model( m ); }
json to_json( const modal_model& m ) { return write_model( m ); }

any_proof proof_from_json( const json& j )
{
    const auto logic = as_string( field( j, "logic", "" ), "/logic" );
    if ( logic == "vf" )
        return read_proof< prop_language >( j );
    if ( logic == "n" )
        return read_proof< modal_language >( j );
    throw model_error{ "logic must be \"vf\" or \"n\"", "/logic" };
}

json to_json( const vf_proof& p ) { return write_proof( p ); }
json to_json( const n_proof& p ) { return write_proof( p ); }

json load_json( const std::string& path )
{
    std::ifstream in{ path };
    if ( !in )
        throw model_error{ "cannot open " + path };
    try
    {
        return json::parse( in );
    }
    catch ( const json::parse_error& e )
    {
        throw model_error{ path + ": " + e.what() };
    }
}

std::string to_dot( const prop_model& m ) { return write_dot( m ); }
std::string to_dot( const modal_model& m ) { return write_dot( m ); }

} // namespace subint
