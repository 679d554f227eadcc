#pragma once

#include "fmt.hpp"

#include <string>

namespace subint
{

// Both sides of the first-order characterization of a closed negative
// axiom on a finite frame. `validity` is frame validity of the axiom;
// `condition` is the matching first-order condition, evaluated directly on
// the relations:
//
//   ~~top        every world has an R_(~top)-successor
//   ~(top->~top) every x has y, z with x R_(top->~top) y and y R_(~top) z
//   ~~C          every x has y with x R_(~C) y and y forcing C
//   ~(C -> D)    every x has y with x R_(C->D) y, y forcing C, not forcing D
//   ~(C | D)     both ~C and ~D satisfy their conditions
//   ~C           no world forces C
//
// The first matching row is used.
struct frame_condition_check
{
    bool validity;
    bool condition;
    std::string clause;
};

frame_condition_check check_frame_condition( const prop_frame& frame, const prop_formula& axiom );

/// Every world has at least one successor under the index.
bool is_serial( const prop_frame& frame, const prop_formula& index );

} // namespace subint
