#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subint
{

// Formula trees are shared and immutable. The same node type backs both
// languages; the language tag only restricts which constructors are legal.
//
// Sugar never reaches the tree: ~A is A -> bot, top is bot -> bot and
// A <-> B is (A -> B) & (B -> A). Formulas that index relation families are
// compared structurally on this core syntax.

enum class connective : std::uint8_t
{
    atom,
    falsum,
    conj,
    disj,
    imp,
    box,
};

struct prop_language {};
struct modal_language {};

template < typename Lang >
concept language = std::same_as< Lang, prop_language > || std::same_as< Lang, modal_language >;

namespace detail
{

struct formula_node;
using node_ptr = std::shared_ptr< const formula_node >;

struct formula_node
{
    connective op;
    std::string name;      // atoms only
    node_ptr lhs;          // binary connectives, and the body of a box
    node_ptr rhs;          // binary connectives only
    std::size_t size = 1;  // node count
    std::size_t depth = 0; // connective nesting
    std::size_t box_depth = 0;
    std::size_t hash = 0;
    bool closed = true;    // no atoms below
    std::string text;      // canonical core-syntax rendering
};

node_ptr make_atom( std::string name );
node_ptr make_falsum();
node_ptr make_binary( connective op, node_ptr lhs, node_ptr rhs );
node_ptr make_box( node_ptr body );

} // namespace detail

template < language Lang >
class basic_formula
{
    detail::node_ptr _node;

    template < language > friend class basic_formula;

public:
    static constexpr bool is_modal = std::same_as< Lang, modal_language >;

    explicit basic_formula( detail::node_ptr node ) : _node{ std::move( node ) } {}

    // Defaults to bot so that containers of formulas are easy to work with.
    basic_formula() : _node{ detail::make_falsum() } {}

    static basic_formula atom( std::string name ) { return basic_formula{ detail::make_atom( std::move( name ) ) }; }
    static basic_formula falsum() { return basic_formula{ detail::make_falsum() }; }
    static basic_formula top() { return implies( falsum(), falsum() ); }

    static basic_formula conj( const basic_formula& l, const basic_formula& r )
    {
        return basic_formula{ detail::make_binary( connective::conj, l._node, r._node ) };
    }
    static basic_formula disj( const basic_formula& l, const basic_formula& r )
    {
        return basic_formula{ detail::make_binary( connective::disj, l._node, r._node ) };
    }
    static basic_formula implies( const basic_formula& l, const basic_formula& r )
    {
        return basic_formula{ detail::make_binary( connective::imp, l._node, r._node ) };
    }
    static basic_formula neg( const basic_formula& f ) { return implies( f, falsum() ); }
    static basic_formula iff( const basic_formula& l, const basic_formula& r )
    {
        return conj( implies( l, r ), implies( r, l ) );
    }
    static basic_formula box( const basic_formula& body ) requires is_modal
    {
        return basic_formula{ detail::make_box( body._node ) };
    }

    [[nodiscard]] connective op() const { return _node->op; }
    [[nodiscard]] bool is( connective c ) const { return _node->op == c; }
    [[nodiscard]] const std::string& name() const { return _node->name; }
    [[nodiscard]] basic_formula lhs() const { return basic_formula{ _node->lhs }; }
    [[nodiscard]] basic_formula rhs() const { return basic_formula{ _node->rhs }; }
    [[nodiscard]] basic_formula body() const { return basic_formula{ _node->lhs }; }

    // A -> bot
    [[nodiscard]] bool is_negation() const
    {
        return is( connective::imp ) && _node->rhs->op == connective::falsum;
    }

    [[nodiscard]] std::size_t size() const { return _node->size; }
    [[nodiscard]] std::size_t depth() const { return _node->depth; }
    [[nodiscard]] std::size_t modal_depth() const { return _node->box_depth; }
    [[nodiscard]] bool is_closed() const { return _node->closed; }
    [[nodiscard]] std::size_t hash() const { return _node->hash; }
    [[nodiscard]] const std::string& text() const { return _node->text; }
    [[nodiscard]] const detail::node_ptr& node() const { return _node; }

    friend bool operator==( const basic_formula& a, const basic_formula& b )
    {
        if ( a._node == b._node )
            return true;
        return a._node->hash == b._node->hash && a._node->text == b._node->text;
    }
};

using prop_formula = basic_formula< prop_language >;
using modal_formula = basic_formula< modal_language >;

// Canonical total order: node count first, then the core-syntax rendering.
struct formula_order
{
    template < language Lang >
    bool operator()( const basic_formula< Lang >& a, const basic_formula< Lang >& b ) const
    {
        if ( a.size() != b.size() )
            return a.size() < b.size();
        return a.text() < b.text();
    }
};

template < language Lang >
using formula_set = std::set< basic_formula< Lang >, formula_order >;

using prop_set = formula_set< prop_language >;
using modal_set = formula_set< modal_language >;

struct formula_hash
{
    template < language Lang >
    std::size_t operator()( const basic_formula< Lang >& f ) const { return f.hash(); }
};

// Every propositional formula is also a modal one.
inline modal_formula as_modal( const prop_formula& f ) { return modal_formula{ f.node() }; }

// Box-free modal formulas are propositional.
std::optional< prop_formula > as_propositional( const modal_formula& f );

// Human-facing rendering that folds bot -> bot back into `top` and A -> bot
// into `~A`. Parses back to the same tree.
std::string to_string( const detail::node_ptr& node );

template < language Lang >
std::string to_string( const basic_formula< Lang >& f ) { return to_string( f.node() ); }

template < language Lang >
std::string to_string( const formula_set< Lang >& fs )
{
    std::string out = "{";
    bool first = true;
    for ( const auto& f : fs )
    {
        out += first ? "" : ", ";
        out += to_string( f );
        first = false;
    }
    return out + "}";
}

// Conjunction / disjunction of a finite set, right-nested in canonical
// order. The empty conjunction is top and the empty disjunction is bot.
template < language Lang >
basic_formula< Lang > big_conj( const formula_set< Lang >& fs )
{
    if ( fs.empty() )
        return basic_formula< Lang >::top();
    auto it = fs.rbegin();
    auto acc = *it++;
    for ( ; it != fs.rend(); ++it )
        acc = basic_formula< Lang >::conj( *it, acc );
    return acc;
}

template < language Lang >
basic_formula< Lang > big_disj( const formula_set< Lang >& fs )
{
    if ( fs.empty() )
        return basic_formula< Lang >::falsum();
    auto it = fs.rbegin();
    auto acc = *it++;
    for ( ; it != fs.rend(); ++it )
        acc = basic_formula< Lang >::disj( *it, acc );
    return acc;
}

void collect_atoms( const detail::node_ptr& node, std::set< std::string >& out );

template < language Lang >
std::set< std::string > atoms( const basic_formula< Lang >& f )
{
    std::set< std::string > out;
    collect_atoms( f.node(), out );
    return out;
}

// All subformulas, including f itself.
template < language Lang >
void collect_subformulas( const basic_formula< Lang >& f, formula_set< Lang >& out )
{
    if ( !out.insert( f ).second )
        return;
    switch ( f.op() )
    {
    case connective::atom:
    case connective::falsum:
        return;
    case connective::box:
        collect_subformulas( f.body(), out );
        return;
    default:
        collect_subformulas( f.lhs(), out );
        collect_subformulas( f.rhs(), out );
    }
}

template < language Lang >
formula_set< Lang > subformulas( const basic_formula< Lang >& f )
{
    formula_set< Lang > out;
    collect_subformulas( f, out );
    return out;
}

} // namespace subint

template < subint::language Lang >
struct std::hash< subint::basic_formula< Lang > >
{
    std::size_t operator()( const subint::basic_formula< Lang >& f ) const noexcept { return f.hash(); }
};
