#include "subint/sat.hpp"

#include "subint/errors.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace subint
{

namespace
{

using literal = int; // +v / -v for variable v >= 1

// Tseitin encoding followed by a DPLL search that branches only on the
// alphabet; every gate variable is then fixed by unit propagation.
class cnf_builder
{
    std::unordered_map< modal_formula, int > _vars;
    std::vector< std::vector< literal > > _clauses;
    std::vector< int > _inputs;
    int _next = 1;
    std::size_t _cap;

    int fresh() { return _next++; }

public:
    explicit cnf_builder( std::size_t cap ) : _cap{ cap } {}

    int encode( const modal_formula& f )
    {
        if ( auto it = _vars.find( f ); it != _vars.end() )
            return it->second;

        int v = 0;
        switch ( f.op() )
        {
        case connective::atom:
        case connective::box:
            v = fresh();
            _inputs.push_back( v );
            if ( _inputs.size() > _cap )
                throw resource_error{ "propositional alphabet exceeds cap of " + std::to_string( _cap ) };
            break;
        case connective::falsum:
            v = fresh();
            _clauses.push_back( { -v } );
            break;
        case connective::conj: {
            const int a = encode( f.lhs() ), b = encode( f.rhs() );
            v = fresh();
            _clauses.push_back( { -v, a } );
            _clauses.push_back( { -v, b } );
            _clauses.push_back( { v, -a, -b } );
            break;
        }
        case connective::disj: {
            const int a = encode( f.lhs() ), b = encode( f.rhs() );
            v = fresh();
            _clauses.push_back( { -v, a, b } );
            _clauses.push_back( { v, -a } );
            _clauses.push_back( { v, -b } );
            break;
        }
        case connective::imp: {
            const int a = encode( f.lhs() ), b = encode( f.rhs() );
            v = fresh();
            _clauses.push_back( { -v, -a, b } );
            _clauses.push_back( { v, a } );
            _clauses.push_back( { v, -b } );
            break;
        }
        }
        _vars.emplace( f, v );
        return v;
    }

    void assert_literal( literal l ) { _clauses.push_back( { l } ); }

    [[nodiscard]] int var_count() const { return _next - 1; }
    [[nodiscard]] const std::vector< std::vector< literal > >& clauses() const { return _clauses; }
    [[nodiscard]] const std::vector< int >& inputs() const { return _inputs; }
};

class dpll
{
    const std::vector< std::vector< literal > >& _clauses;
    const std::vector< int >& _inputs;
    std::vector< std::int8_t > _value; // 0 unassigned, 1 true, -1 false
    std::vector< int > _trail;

    std::int8_t value_of( literal l ) const
    {
        const auto v = _value[ static_cast< std::size_t >( l > 0 ? l : -l ) ];
        return l > 0 ? v : static_cast< std::int8_t >( -v );
    }

    void assign( literal l )
    {
        const auto var = static_cast< std::size_t >( l > 0 ? l : -l );
        _value[ var ] = l > 0 ? 1 : -1;
        _trail.push_back( static_cast< int >( var ) );
    }

    void undo( std::size_t mark )
    {
        while ( _trail.size() > mark )
        {
            _value[ static_cast< std::size_t >( _trail.back() ) ] = 0;
            _trail.pop_back();
        }
    }

    // false on conflict
    bool propagate()
    {
        bool changed = true;
        while ( changed )
        {
            changed = false;
            for ( const auto& clause : _clauses )
            {
                literal unit = 0;
                int open = 0;
                bool sat = false;
                for ( const literal l : clause )
                {
                    const auto val = value_of( l );
                    if ( val > 0 )
                    {
                        sat = true;
                        break;
                    }
                    if ( val == 0 )
                    {
                        ++open;
                        unit = l;
                    }
                }
                if ( sat )
                    continue;
                if ( open == 0 )
                    return false;
                if ( open == 1 )
                {
                    assign( unit );
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search( std::size_t next_input )
    {
        if ( !propagate() )
            return false;
        while ( next_input < _inputs.size() && _value[ static_cast< std::size_t >( _inputs[ next_input ] ) ] != 0 )
            ++next_input;
        if ( next_input == _inputs.size() )
            return true;

        const int var = _inputs[ next_input ];
        for ( const literal l : { var, -var } )
        {
            const auto mark = _trail.size();
            assign( l );
            if ( search( next_input + 1 ) )
                return true;
            undo( mark );
        }
        return false;
    }

public:
    dpll( const cnf_builder& cnf )
        : _clauses{ cnf.clauses() }, _inputs{ cnf.inputs() },
          _value( static_cast< std::size_t >( cnf.var_count() ) + 1, 0 ) {}

    bool run() { return search( 0 ); }
};

} // namespace

bool satisfiable( std::span< const modal_formula > formulas, std::size_t atom_cap )
{
    cnf_builder cnf{ atom_cap };
    for ( const auto& f : formulas )
        cnf.assert_literal( cnf.encode( f ) );
    return dpll{ cnf }.run();
}

bool taut_consequence( std::span< const modal_formula > premises, const modal_formula& goal, std::size_t atom_cap )
{
    cnf_builder cnf{ atom_cap };
    for ( const auto& f : premises )
        cnf.assert_literal( cnf.encode( f ) );
    cnf.assert_literal( -cnf.encode( goal ) );
    return !dpll{ cnf }.run();
}

} // namespace subint
