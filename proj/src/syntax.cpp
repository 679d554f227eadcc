#include "subint/syntax.hpp"

#include "subint/errors.hpp"

#include <deque>

namespace subint
{

prop_set sub_x( const prop_formula& a, std::span< const prop_formula > x )
{
    prop_set out;
    collect_subformulas( a, out );
    for ( const auto& b : x )
        collect_subformulas( b, out );
    out.insert( prop_formula::falsum() );
    out.insert( prop_formula::top() );
    return out;
}

modal_formula tilde( const modal_formula& b )
{
    if ( b.is_negation() )
        return b.lhs();
    return modal_formula::neg( b );
}

modal_set sub_y( const modal_formula& a, std::span< const modal_formula > y )
{
    modal_set out;
    std::deque< modal_formula > todo{ a };
    todo.insert( todo.end(), y.begin(), y.end() );

    // Each rule only ever adds subformulas of members or one extra negation
    // of a member that is not itself a negation, so this terminates.
    while ( !todo.empty() )
    {
        auto f = todo.front();
        todo.pop_front();
        if ( !out.insert( f ).second )
            continue;
        switch ( f.op() )
        {
        case connective::atom:
        case connective::falsum:
            break;
        case connective::box:
            todo.push_back( f.body() );
            break;
        default:
            todo.push_back( f.lhs() );
            todo.push_back( f.rhs() );
        }
        todo.push_back( tilde( f ) );
    }
    return out;
}

namespace
{

template < bool BoxAtoms >
modal_formula translate( const prop_formula& a )
{
    switch ( a.op() )
    {
    case connective::atom:
        if constexpr ( BoxAtoms )
            return modal_formula::box( as_modal( a ) );
        else
            return as_modal( a );
    case connective::falsum:
        return modal_formula::falsum();
    case connective::conj:
        return modal_formula::conj( translate< BoxAtoms >( a.lhs() ), translate< BoxAtoms >( a.rhs() ) );
    case connective::disj:
        return modal_formula::disj( translate< BoxAtoms >( a.lhs() ), translate< BoxAtoms >( a.rhs() ) );
    case connective::imp:
        return modal_formula::box(
                modal_formula::implies( translate< BoxAtoms >( a.lhs() ), translate< BoxAtoms >( a.rhs() ) ) );
    case connective::box:
        break;
    }
    throw std::logic_error{ "translate: box in a propositional formula" };
}

} // namespace

modal_formula corsi( const prop_formula& a ) { return translate< false >( a ); }

modal_formula godel( const prop_formula& a ) { return translate< true >( a ); }

bool evaluate_closed( const prop_formula& a )
{
    switch ( a.op() )
    {
    case connective::falsum: return false;
    case connective::conj: return evaluate_closed( a.lhs() ) && evaluate_closed( a.rhs() );
    case connective::disj: return evaluate_closed( a.lhs() ) || evaluate_closed( a.rhs() );
    case connective::imp: return !evaluate_closed( a.lhs() ) || evaluate_closed( a.rhs() );
    default: break;
    }
    throw precondition_error{ "evaluate_closed: formula has atoms: " + to_string( a ) };
}

bool is_closed_negative_axiom( const prop_formula& b )
{
    return b.is_closed() && b.is_negation() && evaluate_closed( b );
}

void require_closed_negative( std::span< const prop_formula > x )
{
    for ( const auto& b : x )
        if ( !is_closed_negative_axiom( b ) )
            throw precondition_error{ "not a closed negative axiom: " + to_string( b ) };
}

void require_closed( std::span< const modal_formula > y )
{
    for ( const auto& b : y )
        if ( !b.is_closed() )
            throw precondition_error{ "modal axiom is not closed: " + to_string( b ) };
}

std::vector< modal_formula > x_star( std::span< const prop_formula > x )
{
    require_closed_negative( x );
    std::vector< modal_formula > out;
    out.reserve( x.size() );
    for ( const auto& b : x )
        out.push_back( modal_formula::neg( corsi( b.lhs() ) ) );
    return out;
}

modal_formula neg2k_axiom( std::size_t k )
{
    auto inner = modal_formula::falsum();
    for ( std::size_t i = 0; i < 2 * k; ++i )
        inner = modal_formula::neg( inner );
    return modal_formula::neg( modal_formula::box( inner ) );
}

void collect_top_boxes( const modal_formula& f, modal_set& out )
{
    switch ( f.op() )
    {
    case connective::atom:
    case connective::falsum:
        return;
    case connective::box:
        out.insert( f );
        return;
    default:
        collect_top_boxes( f.lhs(), out );
        collect_top_boxes( f.rhs(), out );
    }
}

} // namespace subint
