#pragma once

#include <string>
#include <vector>

namespace rbc {

// One exact comparison together with the values that were compared.
struct Clause {
    std::string label;
    std::string lhs;
    std::string relation;  // "<=", ">=", "=="
    std::string rhs;
    bool holds = false;
    // The bound was a divergent series, so the comparison holds trivially.
    bool vacuous = false;
};

struct CheckResult {
    std::string name;
    std::vector<Clause> clauses;

    bool passed() const {
        for (const auto& c : clauses) {
            if (!c.holds) return false;
        }
        return true;
    }

    // Some non-vacuous clause held with unequal sides.
    bool any_strict() const {
        for (const auto& c : clauses) {
            if (c.holds && !c.vacuous && c.lhs != c.rhs) return true;
        }
        return false;
    }
};

}  // namespace rbc
