#pragma once

// Text format for instances. Canonical form, one field per line:
//
//   {
//     "dim": 1,
//     "weights": ["1/1"],
//     "partition": [[0]],
//     "prefix": [],
//     "cycle": [[0], []],
//     "m": 2
//   }
//
// Weights are "p/q" strings (a bare integer is accepted on input). Carriers
// are index arrays; cycle must be nonempty.

#include "rbc/borel_cantelli.hpp"

#include <string>
#include <string_view>

namespace rbc {

std::string serialize_instance(const Instance& inst);

// Throws InputError naming the line and field of the problem.
Instance parse_instance(std::string_view text);

}  // namespace rbc
