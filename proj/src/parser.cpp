#include "subint/parser.hpp"

#include <cctype>

namespace subint
{

namespace
{

enum class tok
{
    atom,
    bot,
    top,
    neg,
    box,
    conj,
    disj,
    imp,
    iff,
    lparen,
    rparen,
    end,
};

struct token
{
    tok kind;
    std::string_view text;
    std::size_t offset;
};

class lexer
{
    std::string_view _src;
    std::size_t _pos = 0;

    void skip_space()
    {
        while ( _pos < _src.size() && std::isspace( static_cast< unsigned char >( _src[ _pos ] ) ) )
            ++_pos;
    }

    bool starts_with( std::string_view s ) const { return _src.substr( _pos, s.size() ) == s; }

public:
    explicit lexer( std::string_view src ) : _src{ src } {}

    token next()
    {
        skip_space();
        const auto at = _pos;
        if ( _pos >= _src.size() )
            return { tok::end, {}, at };

        auto fixed = [ & ]( tok k, std::size_t len ) {
            _pos += len;
            return token{ k, _src.substr( at, len ), at };
        };

        if ( starts_with( "<->" ) ) return fixed( tok::iff, 3 );
        if ( starts_with( "->" ) ) return fixed( tok::imp, 2 );
        if ( starts_with( "[]" ) ) return fixed( tok::box, 2 );

        switch ( _src[ _pos ] )
        {
        case '~': return fixed( tok::neg, 1 );
        case '&': return fixed( tok::conj, 1 );
        case '|': return fixed( tok::disj, 1 );
        case '(': return fixed( tok::lparen, 1 );
        case ')': return fixed( tok::rparen, 1 );
        default: break;
        }

        const char c = _src[ _pos ];
        if ( c >= 'a' && c <= 'z' )
        {
            while ( _pos < _src.size() )
            {
                const char d = _src[ _pos ];
                if ( !( ( d >= 'a' && d <= 'z' ) || ( d >= '0' && d <= '9' ) || d == '_' ) )
                    break;
                ++_pos;
            }
            const auto word = _src.substr( at, _pos - at );
            if ( word == "bot" ) return { tok::bot, word, at };
            if ( word == "top" ) return { tok::top, word, at };
            if ( word == "box" ) return { tok::box, word, at };
            return { tok::atom, word, at };
        }

        throw parse_error{ "unexpected character '" + std::string( 1, c ) + "'", at };
    }
};

class parser
{
    lexer _lex;
    token _cur;
    bool _allow_box;

    void advance() { _cur = _lex.next(); }

    void expect( tok k, const char* what )
    {
        if ( _cur.kind != k )
            throw parse_error{ std::string{ "expected " } + what, _cur.offset };
        advance();
    }

    detail::node_ptr parse_iff()
    {
        auto lhs = parse_imp();
        while ( _cur.kind == tok::iff )
        {
            advance();
            auto rhs = parse_imp();
            lhs = detail::make_binary( connective::conj, detail::make_binary( connective::imp, lhs, rhs ),
                                       detail::make_binary( connective::imp, rhs, lhs ) );
        }
        return lhs;
    }

    detail::node_ptr parse_imp()
    {
        auto lhs = parse_disj();
        if ( _cur.kind != tok::imp )
            return lhs;
        advance();
        return detail::make_binary( connective::imp, lhs, parse_imp() );
    }

    detail::node_ptr parse_disj()
    {
        auto lhs = parse_conj();
        while ( _cur.kind == tok::disj )
        {
            advance();
            lhs = detail::make_binary( connective::disj, lhs, parse_conj() );
        }
        return lhs;
    }

    detail::node_ptr parse_conj()
    {
        auto lhs = parse_unary();
        while ( _cur.kind == tok::conj )
        {
            advance();
            lhs = detail::make_binary( connective::conj, lhs, parse_unary() );
        }
        return lhs;
    }

    detail::node_ptr parse_unary()
    {
        const auto t = _cur;
        switch ( t.kind )
        {
        case tok::neg:
            advance();
            return detail::make_binary( connective::imp, parse_unary(), detail::make_falsum() );
        case tok::box:
            if ( !_allow_box )
                throw parse_error{ "box is not allowed in the propositional language", t.offset };
            advance();
            return detail::make_box( parse_unary() );
        case tok::atom:
            advance();
            return detail::make_atom( std::string{ t.text } );
        case tok::bot:
            advance();
            return detail::make_falsum();
        case tok::top:
            advance();
            return detail::make_binary( connective::imp, detail::make_falsum(), detail::make_falsum() );
        case tok::lparen: {
            advance();
            auto inner = parse_iff();
            expect( tok::rparen, "')'" );
            return inner;
        }
        case tok::end:
            throw parse_error{ "unexpected end of input", t.offset };
        default:
            throw parse_error{ "unexpected '" + std::string{ t.text } + "'", t.offset };
        }
    }

public:
    parser( std::string_view src, bool allow_box ) : _lex{ src }, _cur{}, _allow_box{ allow_box } { advance(); }

    detail::node_ptr run()
    {
        auto f = parse_iff();
        if ( _cur.kind != tok::end )
            throw parse_error{ "trailing input '" + std::string{ _cur.text } + "'", _cur.offset };
        return f;
    }
};

} // namespace

detail::node_ptr parse_node( std::string_view text, bool allow_box ) { return parser{ text, allow_box }.run(); }

} // namespace subint
