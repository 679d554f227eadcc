#pragma once

#include "formula.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace subint
{

/// Sub(A) together with Sub(B) for every B in X, plus bot and top.
prop_set sub_x( const prop_formula& a, std::span< const prop_formula > x );

/// The complement used by maximal consistent sets: ~(C -> bot) is C,
/// anything else B becomes B -> bot.
modal_formula tilde( const modal_formula& b );

/// Smallest set containing A and every member of Y that is closed under
/// subformulas and under `tilde`.
modal_set sub_y( const modal_formula& a, std::span< const modal_formula > y );

/// Corsi's translation: atoms stay, implications become boxed implications.
modal_formula corsi( const prop_formula& a );

/// Goedel translation: atoms and implications are boxed. Syntax only.
modal_formula godel( const prop_formula& a );

/// Two-valued value of a closed formula.
bool evaluate_closed( const prop_formula& a );

/// Closed, of the shape C -> bot, and Int-provable. Int-provability of a
/// closed formula coincides with classical truth (the Heyting algebra on no
/// generators is {0, 1}), so a truth-value check suffices.
bool is_closed_negative_axiom( const prop_formula& b );

/// Throws precondition_error naming the first member that is not a closed
/// negative axiom.
void require_closed_negative( std::span< const prop_formula > x );

/// Throws precondition_error when some member of Y has atoms.
void require_closed( std::span< const modal_formula > y );

/// For every ~C in X, the modal axiom ~(C^corsi). Only the body is
/// translated; the outer negation stays a plain implication into bot.
std::vector< modal_formula > x_star( std::span< const prop_formula > x );

/// ~[](~^(2k) bot)
modal_formula neg2k_axiom( std::size_t k );

/// Boxed subformulas of f that are not themselves under a box.
void collect_top_boxes( const modal_formula& f, modal_set& out );

} // namespace subint
