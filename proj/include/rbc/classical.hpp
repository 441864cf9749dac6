#pragma once

// Probability-space quantities for an instance whose operator has a single
// block: the coordinates form a finite sample space with point masses given
// by the weights, and each carrier is an event A_n. Computed directly from the
// events, without going through the lattice or operator code.

#include "rbc/borel_cantelli.hpp"
#include "rbc/check_result.hpp"

#include <optional>

namespace rbc {

struct ClassicalQuantities {
    Rational liminf_prob;          // liminf P(A_n)
    Rational limsup_prob;          // limsup P(A_n); lim P(A_n) = 0 iff this is 0
    std::optional<Rational> sum_prob;       // sum P(A_n), nullopt when infinite
    std::optional<Rational> sum_drop_prob;  // sum P(A_n cap A^c_{n+1})
    std::optional<Rational> sum_gap_prob;   // sum P(A^c_n cap ... cap A^c_{n+m-1} cap A_{n+m})
    Rational limsup_event_prob;    // P(limsup A_n) = P(A_n i.o.)
};

// Throws InputError unless inst.t has exactly one block.
ClassicalQuantities classical_quantities(const Instance& inst);

// Compares every hypothesis and conclusion quantity reported by bc_check,
// bn_check and bs_check with the classical values (as constant vectors).
CheckResult classical_bridge_check(const Instance& inst);

}  // namespace rbc
