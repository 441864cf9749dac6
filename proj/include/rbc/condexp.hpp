#pragma once

// Conditional expectation operators on the model space: weighted averaging
// over the blocks of a partition of the coordinates.

#include "rbc/check_result.hpp"
#include "rbc/core.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rbc {

// Block label of each coordinate, in order of the blocks. Throws InputError
// when a block is empty, an index is out of range or repeated ("partition not
// disjoint"), or some index is missing.
std::vector<std::size_t> validate_partition(std::size_t dim, const std::vector<std::vector<std::size_t>>& partition);

// Throws InputError unless there are dim weights, all > 0, summing to 1.
void validate_weights(std::size_t dim, const std::vector<Rational>& weights);

class CondExpOp {
public:
    // Validates the partition (disjoint, nonempty, covering) and the weights
    // (one per coordinate, all > 0, summing to 1). Throws InputError naming
    // the violated clause.
    CondExpOp(std::size_t dim, std::vector<std::vector<std::size_t>> partition, std::vector<Rational> weights);

    // One block, uniform weights: the unconditional expectation.
    static CondExpOp expectation(std::size_t dim);
    // Singleton blocks: T = I.
    static CondExpOp identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<std::size_t>>& partition() const { return partition_; }
    const std::vector<Rational>& weights() const { return weights_; }
    // Block of each coordinate, as an index into partition().
    std::size_t block_of(std::size_t i) const { return block_of_[i]; }

    friend bool operator==(const CondExpOp& a, const CondExpOp& b) {
        return a.dim_ == b.dim_ && a.partition_ == b.partition_ && a.weights_ == b.weights_;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<std::size_t>> partition_;
    std::vector<Rational> weights_;
    std::vector<std::size_t> block_of_;
    std::vector<Rational> block_mass_;

    friend Element condexp_apply(const CondExpOp& t, const Element& f);
};

// On each block B every coordinate becomes sum_{i in B} w_i f_i / sum_{i in B} w_i.
Element condexp_apply(const CondExpOp& t, const Element& f);

// T(P e): the conditional measure of P's carrier.
Element condexp_measure(const CondExpOp& t, const BandProjection& p);

struct ValidationReport {
    bool positivity = false;
    bool idempotence = false;
    bool unit_preserved = false;
    bool strictly_positive = false;
    bool range_is_sublattice = false;
    std::vector<std::string> failures;

    bool ok() const {
        return positivity && idempotence && unit_preserved && strictly_positive && range_is_sublattice;
    }
};

// Checks the conditional expectation axioms on a spanning set: coordinate
// indicators, the unit, and block indicators.
ValidationReport condexp_validate(const CondExpOp& t);

// T(liminf f_n) <= liminf T f_n.
CheckResult fatou_check(const CondExpOp& t, const ElemSequence& s);

// T(limsup f_n) >= limsup T f_n for 0 <= f_n <= g. Throws InputError when the
// domination hypothesis fails.
CheckResult reverse_fatou_check(const CondExpOp& t, const ElemSequence& s, const Element& g);

}  // namespace rbc
