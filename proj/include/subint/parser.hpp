#pragma once

#include "errors.hpp"
#include "formula.hpp"

#include <string_view>
#include <vector>

namespace subint
{

// Text grammar, loosest binding first:
//
//   iff   := imp ( "<->" imp )*          left-associative
//   imp   := disj ( "->" imp )?          right-associative
//   disj  := conj ( "|" conj )*
//   conj  := unary ( "&" unary )*
//   unary := "~" unary | "[]" unary | "box" unary | atom | "bot" | "top" | "(" iff ")"
//
// Atoms match [a-z][a-z0-9_]*; `bot`, `top` and `box` are reserved. Boxes are
// rejected when parsing the propositional language.

detail::node_ptr parse_node( std::string_view text, bool allow_box );

template < language Lang >
basic_formula< Lang > parse( std::string_view text )
{
    return basic_formula< Lang >{ parse_node( text, basic_formula< Lang >::is_modal ) };
}

inline prop_formula parse_prop( std::string_view text ) { return parse< prop_language >( text ); }
inline modal_formula parse_modal( std::string_view text ) { return parse< modal_language >( text ); }

// Semicolon-separated list, as used for axiom sets on the command line.
// Empty items are skipped.
template < language Lang >
std::vector< basic_formula< Lang > > parse_list( std::string_view text )
{
    std::vector< basic_formula< Lang > > out;
    std::size_t start = 0;
    while ( start <= text.size() )
    {
        auto end = text.find( ';', start );
        if ( end == std::string_view::npos )
            end = text.size();
        auto item = text.substr( start, end - start );
        if ( item.find_first_not_of( " \t\r\n" ) != std::string_view::npos )
        {
            try
            {
                out.push_back( parse< Lang >( item ) );
            }
            catch ( const parse_error& e )
            {
                throw parse_error{ "in list item: " + std::string{ e.what() }, start + e.offset() };
            }
        }
        start = end + 1;
    }
    return out;
}

} // namespace subint
