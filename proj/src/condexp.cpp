#include "rbc/condexp.hpp"

#include <sstream>

namespace rbc {

std::vector<std::size_t> validate_partition(std::size_t dim, const std::vector<std::vector<std::size_t>>& partition) {
    require_dim(dim);
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(dim, kUnassigned);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) {
            throw InputError("partition block " + std::to_string(b) + " is empty");
        }
        for (std::size_t i : partition[b]) {
            if (i >= dim) {
                throw InputError("partition index " + std::to_string(i) + " out of range");
            }
            if (block_of[i] != kUnassigned) {
                throw InputError("partition not disjoint (index " + std::to_string(i) + ")");
            }
            block_of[i] = b;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (block_of[i] == kUnassigned) {
            throw InputError("partition does not cover index " + std::to_string(i));
        }
    }
    return block_of;
}

void validate_weights(std::size_t dim, const std::vector<Rational>& weights) {
    if (weights.size() != dim) {
        throw InputError("weights: expected " + std::to_string(dim) + " entries, got " + std::to_string(weights.size()));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(weights[i]) <= 0) {
            throw InputError("weight " + std::to_string(i) + " is not strictly positive (" + to_string(weights[i]) +
                             ")");
        }
        total += weights[i];
    }
    if (total != 1) {
        throw InputError("weights do not sum to 1 (sum " + to_string(total) + ")");
    }
}

CondExpOp::CondExpOp(std::size_t dim, std::vector<std::vector<std::size_t>> partition, std::vector<Rational> weights)
    : dim_(dim), partition_(std::move(partition)), weights_(std::move(weights)) {
    block_of_ = validate_partition(dim_, partition_);
    validate_weights(dim_, weights_);
    block_mass_.assign(partition_.size(), Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) block_mass_[block_of_[i]] += weights_[i];
}

CondExpOp CondExpOp::expectation(std::size_t dim) {
    require_dim(dim);
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    return {dim, {all}, std::vector<Rational>(dim, Rational(1, static_cast<unsigned long>(dim)))};
}

CondExpOp CondExpOp::identity(std::size_t dim) {
    require_dim(dim);
    std::vector<std::vector<std::size_t>> blocks(dim);
    for (std::size_t i = 0; i < dim; ++i) blocks[i] = {i};
    return {dim, std::move(blocks), std::vector<Rational>(dim, Rational(1, static_cast<unsigned long>(dim)))};
}

Element condexp_apply(const CondExpOp& t, const Element& f) {
    if (f.dim() != t.dim_) {
        throw InputError("condexp_apply: dimension mismatch (" + std::to_string(t.dim_) + " vs " +
                         std::to_string(f.dim()) + ")");
    }
    std::vector<Rational> block_total(t.partition_.size(), Rational(0));
    for (std::size_t i = 0; i < t.dim_; ++i) block_total[t.block_of_[i]] += t.weights_[i] * f[i];
    std::vector<Rational> out(t.dim_);
    for (std::size_t i = 0; i < t.dim_; ++i) {
        const std::size_t b = t.block_of_[i];
        out[i] = block_total[b] / t.block_mass_[b];
    }
    return Element(std::move(out));
}

Element condexp_measure(const CondExpOp& t, const BandProjection& p) {
    return condexp_apply(t, Element::indicator(p));
}

ValidationReport condexp_validate(const CondExpOp& t) {
    ValidationReport r;
    const std::size_t n = t.dim();
    const Element e = Element::unit(n);

    std::vector<Element> indicators;
    for (std::size_t i = 0; i < n; ++i) indicators.push_back(Element::indicator(BandProjection(n, std::uint64_t{1} << i)));

    r.positivity = true;
    r.idempotence = true;
    r.strictly_positive = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Element ti = condexp_apply(t, indicators[i]);
        if (!ti.is_positive()) {
            r.positivity = false;
            r.failures.push_back("positivity fails on indicator " + std::to_string(i));
        }
        if (condexp_apply(t, ti) != ti) {
            r.idempotence = false;
            r.failures.push_back("idempotence fails on indicator " + std::to_string(i));
        }
        // T e_i >= 0 for all i, so T f = sum f_i T e_i vanishes for some
        // nonzero f >= 0 exactly when some T e_i vanishes.
        if (ti.is_zero()) {
            r.strictly_positive = false;
            r.failures.push_back("T maps indicator " + std::to_string(i) + " to 0");
        }
    }

    r.unit_preserved = condexp_apply(t, e) == e;
    if (!r.unit_preserved) r.failures.push_back("T e != e");

    std::vector<Element> block_indicators;
    for (const auto& block : t.partition()) {
        block_indicators.push_back(Element::indicator(BandProjection::from_indices(n, block)));
    }
    r.range_is_sublattice = true;
    for (const auto& g : block_indicators) {
        if (condexp_apply(t, g) != g) {
            r.range_is_sublattice = false;
            r.failures.push_back("block indicator " + to_string(g) + " not in range");
        }
    }
    for (std::size_t a = 0; a < block_indicators.size(); ++a) {
        for (std::size_t b = a + 1; b < block_indicators.size(); ++b) {
            for (const Element& h : {lattice_sup(block_indicators[a], block_indicators[b]),
                                     lattice_inf(block_indicators[a], block_indicators[b])}) {
                if (condexp_apply(t, h) != h) {
                    r.range_is_sublattice = false;
                    r.failures.push_back("range not closed under sup/inf at " + to_string(h));
                }
            }
        }
    }
    return r;
}

CheckResult fatou_check(const CondExpOp& t, const ElemSequence& s) {
    const Element lhs = condexp_apply(t, elem_liminf(s));
    const auto images = map_terms(s, [&t](const Element& f) { return condexp_apply(t, f); });
    const Element rhs = elem_liminf(images);
    CheckResult r{"fatou", {}};
    r.clauses.push_back({"T(liminf f_n) <= liminf T f_n", to_string(lhs), "<=", to_string(rhs), leq(lhs, rhs), false});
    return r;
}

CheckResult reverse_fatou_check(const CondExpOp& t, const ElemSequence& s, const Element& g) {
    if (!g.is_positive()) {
        throw InputError("reverse_fatou_check: bound g must be >= 0");
    }
    const auto dominated = [&g](const Element& f) {
        if (!f.is_positive() || !leq(f, g)) {
            throw InputError("reverse_fatou_check: term " + to_string(f) + " not within [0, g]");
        }
    };
    for (const auto& f : s.prefix()) dominated(f);
    for (const auto& f : s.cycle()) dominated(f);

    const Element lhs = condexp_apply(t, elem_limsup(s));
    const auto images = map_terms(s, [&t](const Element& f) { return condexp_apply(t, f); });
    const Element rhs = elem_limsup(images);
    CheckResult r{"reverse-fatou", {}};
    r.clauses.push_back({"T(limsup f_n) >= limsup T f_n", to_string(lhs), ">=", to_string(rhs), leq(rhs, lhs), false});
    return r;
}

}  // namespace rbc
