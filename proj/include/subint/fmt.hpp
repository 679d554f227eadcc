#pragma once

#include "errors.hpp"
#include "formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subint
{

using world_id = std::size_t;

// Square boolean matrix over world ids.
class relation
{
    std::size_t _n = 0;
    std::vector< bool > _bits;

public:
    relation() = default;
    explicit relation( std::size_t n ) : _n{ n }, _bits( n * n, false ) {}

    static relation total( std::size_t n )
    {
        relation r{ n };
        r._bits.assign( n * n, true );
        return r;
    }

    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] bool contains( world_id a, world_id b ) const { return _bits[ a * _n + b ]; }
    void set( world_id a, world_id b, bool on = true ) { _bits[ a * _n + b ] = on; }

    [[nodiscard]] bool is_total() const
    {
        for ( bool b : _bits )
            if ( !b )
                return false;
        return true;
    }

    [[nodiscard]] std::vector< std::pair< world_id, world_id > > edges() const
    {
        std::vector< std::pair< world_id, world_id > > out;
        for ( world_id a = 0; a < _n; ++a )
            for ( world_id b = 0; b < _n; ++b )
                if ( contains( a, b ) )
                    out.emplace_back( a, b );
        return out;
    }

    friend bool operator==( const relation&, const relation& ) = default;
};

// A formula-indexed family of relations: finitely many explicit indices and
// one default relation for every other index.
template < language Lang >
class relation_family
{
public:
    using formula_type = basic_formula< Lang >;
    using explicit_map = std::map< formula_type, relation, formula_order >;

private:
    std::size_t _worlds;
    explicit_map _explicit;
    relation _default;
    bool _default_total;

public:
    explicit relation_family( std::size_t worlds )
        : _worlds{ worlds }, _default{ relation::total( worlds ) }, _default_total{ true } {}

    relation_family( std::size_t worlds, relation default_relation )
        : _worlds{ worlds }, _default{ std::move( default_relation ) }
    {
        if ( _default.size() != worlds )
            throw model_error{ "default relation has wrong dimension" };
        _default_total = _default.is_total();
    }

    void set( const formula_type& index, relation r )
    {
        if ( r.size() != _worlds )
            throw model_error{ "relation for " + to_string( index ) + " has wrong dimension" };
        _explicit.insert_or_assign( index, std::move( r ) );
    }

    [[nodiscard]] const relation& lookup( const formula_type& index ) const
    {
        if ( auto it = _explicit.find( index ); it != _explicit.end() )
            return it->second;
        return _default;
    }

    [[nodiscard]] bool has_explicit( const formula_type& index ) const { return _explicit.contains( index ); }
    [[nodiscard]] const explicit_map& explicit_relations() const { return _explicit; }
    [[nodiscard]] const relation& default_relation() const { return _default; }
    [[nodiscard]] bool default_is_total() const { return _default_total; }
    [[nodiscard]] std::size_t world_count() const { return _worlds; }
};

using prop_family = relation_family< prop_language >;
using modal_family = relation_family< modal_language >;

/// Describes the first (root, w) edge missing from the family, if any.
template < language Lang >
std::optional< std::string > root_condition_violation( const relation_family< Lang >& family, world_id root )
{
    auto check = [ & ]( const relation& r, const std::string& what ) -> std::optional< std::string > {
        for ( world_id w = 0; w < family.world_count(); ++w )
            if ( !r.contains( root, w ) )
                return "root " + std::to_string( root ) + " does not reach world " + std::to_string( w ) + " under " + what;
        return std::nullopt;
    };
    for ( const auto& [ index, r ] : family.explicit_relations() )
        if ( auto v = check( r, to_string( index ) ) )
            return v;
    return check( family.default_relation(), "the default relation" );
}

// Propositional frames carry a root that reaches every world under every
// index; modal frames have no root.
template < language Lang >
class fmt_frame
{
    std::vector< std::string > _labels;
    relation_family< Lang > _relations;
    std::optional< world_id > _root;

    void check_shape() const
    {
        if ( _labels.empty() )
            throw model_error{ "a frame needs at least one world" };
        if ( _relations.world_count() != _labels.size() )
            throw model_error{ "relation family does not match the world count" };
        std::set< std::string > seen;
        for ( const auto& l : _labels )
            if ( !seen.insert( l ).second )
                throw model_error{ "duplicate world id '" + l + "'" };
    }

public:
    fmt_frame( std::vector< std::string > labels, relation_family< Lang > relations, world_id root )
        requires std::same_as< Lang, prop_language >
        : _labels{ std::move( labels ) }, _relations{ std::move( relations ) }, _root{ root }
    {
        check_shape();
        if ( root >= _labels.size() )
            throw model_error{ "root is not a world" };
        if ( auto v = root_condition_violation( _relations, root ) )
            throw model_error{ "root condition fails: " + *v };
    }

    fmt_frame( std::vector< std::string > labels, relation_family< Lang > relations )
        requires std::same_as< Lang, modal_language >
        : _labels{ std::move( labels ) }, _relations{ std::move( relations ) }
    {
        check_shape();
    }

    [[nodiscard]] std::size_t size() const { return _labels.size(); }
    [[nodiscard]] const std::vector< std::string >& labels() const { return _labels; }
    [[nodiscard]] const std::string& label( world_id w ) const { return _labels.at( w ); }
    [[nodiscard]] const relation_family< Lang >& relations() const { return _relations; }
    [[nodiscard]] world_id root() const requires std::same_as< Lang, prop_language > { return *_root; }

    [[nodiscard]] std::optional< world_id > find( const std::string& label ) const
    {
        for ( world_id w = 0; w < _labels.size(); ++w )
            if ( _labels[ w ] == label )
                return w;
        return std::nullopt;
    }
};

using prop_frame = fmt_frame< prop_language >;
using modal_frame = fmt_frame< modal_language >;

using valuation = std::vector< std::set< std::string > >; // true atoms per world; others are false

template < language Lang >
class fmt_model
{
    fmt_frame< Lang > _frame;
    valuation _valuation;

public:
    fmt_model( fmt_frame< Lang > frame, valuation v ) : _frame{ std::move( frame ) }, _valuation{ std::move( v ) }
    {
        if ( _valuation.size() != _frame.size() )
            throw model_error{ "valuation does not cover exactly the worlds of the frame" };
    }

    [[nodiscard]] const fmt_frame< Lang >& frame() const { return _frame; }
    [[nodiscard]] const valuation& val() const { return _valuation; }
    [[nodiscard]] std::size_t size() const { return _frame.size(); }

    [[nodiscard]] bool true_at( world_id w, const std::string& atom ) const
    {
        return _valuation.at( w ).contains( atom );
    }
};

using prop_model = fmt_model< prop_language >;
using modal_model = fmt_model< modal_language >;

// Computes the set of worlds forcing each subformula once, bottom up. The
// forcing clauses: atoms by valuation, bot nowhere, & and | pointwise,
// A -> B at x when every R_(A -> B)-successor forcing A forces B (modal
// models: pointwise, as in classical logic), and
// []A at x when every R_A-successor forces A.
template < language Lang >
class evaluator
{
    const fmt_model< Lang >& _model;
    std::unordered_map< basic_formula< Lang >, std::vector< bool > > _cache;

public:
    explicit evaluator( const fmt_model< Lang >& model ) : _model{ model } {}

    const std::vector< bool >& extension( const basic_formula< Lang >& f )
    {
        if ( auto it = _cache.find( f ); it != _cache.end() )
            return it->second;

        const auto n = _model.size();
        std::vector< bool > out( n, false );
        switch ( f.op() )
        {
        case connective::atom:
            for ( world_id x = 0; x < n; ++x )
                out[ x ] = _model.true_at( x, f.name() );
            break;
        case connective::falsum:
            break;
        case connective::conj: {
            const auto& a = extension( f.lhs() );
            const auto& b = extension( f.rhs() );
            for ( world_id x = 0; x < n; ++x )
                out[ x ] = a[ x ] && b[ x ];
            break;
        }
        case connective::disj: {
            const auto& a = extension( f.lhs() );
            const auto& b = extension( f.rhs() );
            for ( world_id x = 0; x < n; ++x )
                out[ x ] = a[ x ] || b[ x ];
            break;
        }
        case connective::imp: {
            const auto& a = extension( f.lhs() );
            const auto& b = extension( f.rhs() );
            if constexpr ( basic_formula< Lang >::is_modal )
            {
                for ( world_id x = 0; x < n; ++x )
                    out[ x ] = !a[ x ] || b[ x ];
                break;
            }
            const auto& r = _model.frame().relations().lookup( f );
            for ( world_id x = 0; x < n; ++x )
            {
                bool ok = true;
                for ( world_id y = 0; y < n && ok; ++y )
                    if ( r.contains( x, y ) && a[ y ] && !b[ y ] )
                        ok = false;
                out[ x ] = ok;
            }
            break;
        }
        case connective::box: {
            const auto& a = extension( f.body() );
            const auto& r = _model.frame().relations().lookup( f.body() );
            for ( world_id x = 0; x < n; ++x )
            {
                bool ok = true;
                for ( world_id y = 0; y < n && ok; ++y )
                    if ( r.contains( x, y ) && !a[ y ] )
                        ok = false;
                out[ x ] = ok;
            }
            break;
        }
        }
        return _cache.emplace( f, std::move( out ) ).first->second;
    }

    bool forces( world_id x, const basic_formula< Lang >& f )
    {
        if ( x >= _model.size() )
            throw std::out_of_range{ "unknown world id " + std::to_string( x ) };
        return extension( f )[ x ];
    }

    bool valid( const basic_formula< Lang >& f )
    {
        for ( bool b : extension( f ) )
            if ( !b )
                return false;
        return true;
    }
};

template < language Lang >
bool forces( const fmt_model< Lang >& m, world_id x, const basic_formula< Lang >& f )
{
    return evaluator< Lang >{ m }.forces( x, f );
}

template < language Lang >
bool model_valid( const fmt_model< Lang >& m, const basic_formula< Lang >& f )
{
    return evaluator< Lang >{ m }.valid( f );
}

template < language Lang >
std::vector< world_id > refuting_worlds( const fmt_model< Lang >& m, const basic_formula< Lang >& f )
{
    evaluator< Lang > ev{ m };
    std::vector< world_id > out;
    const auto& ext = ev.extension( f );
    for ( world_id x = 0; x < ext.size(); ++x )
        if ( !ext[ x ] )
            out.push_back( x );
    return out;
}

inline constexpr std::size_t default_frame_valid_cap = 20;

/// Valid under every valuation of the atoms of `f`. Closed formulas need a
/// single evaluation. Refuses when atoms x worlds exceeds `cap`.
template < language Lang >
bool frame_valid( const fmt_frame< Lang >& frame, const basic_formula< Lang >& f,
                  std::size_t cap = default_frame_valid_cap )
{
    const auto letters = atoms( f );
    const std::vector< std::string > names( letters.begin(), letters.end() );
    const auto n = frame.size();
    const auto bits = names.size() * n;
    if ( bits > cap )
        throw resource_error{ "frame validity needs 2^" + std::to_string( bits ) + " valuations (cap " +
                              std::to_string( cap ) + ")" };

    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << bits ); ++mask )
    {
        valuation v( n );
        for ( std::size_t i = 0; i < names.size(); ++i )
            for ( world_id x = 0; x < n; ++x )
                if ( mask >> ( i * n + x ) & 1U )
                    v[ x ].insert( names[ i ] );
        if ( !model_valid( fmt_model< Lang >{ frame, std::move( v ) }, f ) )
            return false;
    }
    return true;
}

/// The three-world model separating VF from WF: root 0, R for
/// top -> (p & q) is {(x, y) : x != 1}, R for top -> (q & p) is
/// {(x, y) : x <= y}, all other indices total, p true only at 2.
prop_model fig1_model();

/// (top -> (p & q)) <-> (top -> (q & p))
prop_formula fig1_formula();

} // namespace subint
