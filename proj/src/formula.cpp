#include "subint/formula.hpp"

#include <algorithm>

namespace subint
{

namespace
{

// Binding strength used by both renderers. `->` is right-associative,
// `&` and `|` are left-associative.
enum prec : int
{
    prec_imp = 1,
    prec_disj = 2,
    prec_conj = 3,
    prec_prefix = 4,
    prec_atomic = 5,
};

int precedence( const detail::formula_node& n )
{
    switch ( n.op )
    {
    case connective::imp: return prec_imp;
    case connective::disj: return prec_disj;
    case connective::conj: return prec_conj;
    case connective::box: return prec_prefix;
    default: return prec_atomic;
    }
}

std::string wrap( const std::string& s, bool parens ) { return parens ? "(" + s + ")" : s; }

std::size_t mix( std::size_t seed, std::size_t v )
{
    return seed ^ ( v + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

std::string render_core( connective op, const detail::formula_node& l, const detail::formula_node* r )
{
    switch ( op )
    {
    case connective::conj:
        return wrap( l.text, precedence( l ) < prec_conj ) + " & " + wrap( r->text, precedence( *r ) < prec_prefix );
    case connective::disj:
        return wrap( l.text, precedence( l ) < prec_disj ) + " | " + wrap( r->text, precedence( *r ) < prec_conj );
    case connective::imp:
        return wrap( l.text, precedence( l ) < prec_disj ) + " -> " + wrap( r->text, precedence( *r ) < prec_imp );
    case connective::box:
        return "[]" + wrap( l.text, precedence( l ) < prec_prefix );
    default:
        throw std::logic_error{ "render_core: not a compound connective" };
    }
}

bool is_top( const detail::formula_node& n )
{
    return n.op == connective::imp && n.lhs->op == connective::falsum && n.rhs->op == connective::falsum;
}

bool is_neg( const detail::formula_node& n )
{
    return n.op == connective::imp && n.rhs->op == connective::falsum && !is_top( n );
}

int pretty_precedence( const detail::formula_node& n )
{
    if ( is_top( n ) )
        return prec_atomic;
    if ( is_neg( n ) )
        return prec_prefix;
    return precedence( n );
}

std::string pretty( const detail::formula_node& n )
{
    auto sub = [ & ]( const detail::node_ptr& c, int need ) {
        return wrap( pretty( *c ), pretty_precedence( *c ) < need );
    };

    if ( is_top( n ) )
        return "top";
    if ( is_neg( n ) )
        return "~" + sub( n.lhs, prec_prefix );

    switch ( n.op )
    {
    case connective::atom: return n.name;
    case connective::falsum: return "bot";
    case connective::conj: return sub( n.lhs, prec_conj ) + " & " + sub( n.rhs, prec_prefix );
    case connective::disj: return sub( n.lhs, prec_disj ) + " | " + sub( n.rhs, prec_conj );
    case connective::imp: return sub( n.lhs, prec_disj ) + " -> " + sub( n.rhs, prec_imp );
    case connective::box: return "[]" + sub( n.lhs, prec_prefix );
    }
    return {};
}

} // namespace

namespace detail
{

node_ptr make_atom( std::string name )
{
    auto n = std::make_shared< formula_node >();
    n->op = connective::atom;
    n->hash = mix( std::hash< std::string >{}( name ), 1 );
    n->closed = false;
    n->text = name;
    n->name = std::move( name );
    return n;
}

node_ptr make_falsum()
{
    // One shared instance; nodes are immutable.
    static const node_ptr falsum = [] {
        auto n = std::make_shared< formula_node >();
        n->op = connective::falsum;
        n->hash = 0x5bd1e995;
        n->text = "bot";
        return n;
    }();
    return falsum;
}

node_ptr make_binary( connective op, node_ptr lhs, node_ptr rhs )
{
    auto n = std::make_shared< formula_node >();
    n->op = op;
    n->size = 1 + lhs->size + rhs->size;
    n->depth = 1 + std::max( lhs->depth, rhs->depth );
    n->box_depth = std::max( lhs->box_depth, rhs->box_depth );
    n->closed = lhs->closed && rhs->closed;
    n->hash = mix( mix( static_cast< std::size_t >( op ) + 17, lhs->hash ), rhs->hash );
    n->text = render_core( op, *lhs, rhs.get() );
    n->lhs = std::move( lhs );
    n->rhs = std::move( rhs );
    return n;
}

node_ptr make_box( node_ptr body )
{
    auto n = std::make_shared< formula_node >();
    n->op = connective::box;
    n->size = 1 + body->size;
    n->depth = 1 + body->depth;
    n->box_depth = 1 + body->box_depth;
    n->closed = body->closed;
    n->hash = mix( 0xb0c5, body->hash );
    n->text = render_core( connective::box, *body, nullptr );
    n->lhs = std::move( body );
    return n;
}

} // namespace detail

std::optional< prop_formula > as_propositional( const modal_formula& f )
{
    if ( f.modal_depth() > 0 )
        return std::nullopt;
    return prop_formula{ f.node() };
}

std::string to_string( const detail::node_ptr& node ) { return pretty( *node ); }

void collect_atoms( const detail::node_ptr& node, std::set< std::string >& out )
{
    if ( node->closed )
        return;
    if ( node->op == connective::atom )
    {
        out.insert( node->name );
        return;
    }
    if ( node->lhs )
        collect_atoms( node->lhs, out );
    if ( node->rhs )
        collect_atoms( node->rhs, out );
}

} // namespace subint
