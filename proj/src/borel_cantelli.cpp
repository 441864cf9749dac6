#include "rbc/borel_cantelli.hpp"

#include "rbc/parallel.hpp"
#include "rbc/projection_calculus.hpp"
#include "rbc/rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace rbc {

Instance::Instance(CondExpOp t_, ProjSequence seq_, std::size_t m_)
    : t(std::move(t_)), seq(std::move(seq_)), m(m_) {
    if (seq.dim() != t.dim()) {
        throw InputError("instance: sequence dimension " + std::to_string(seq.dim()) +
                         " differs from operator dimension " + std::to_string(t.dim()));
    }
    if (m == 0) {
        throw InputError("instance: m must be >= 1");
    }
}

bool TheoremVerdict::hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisResult& h) { return h.holds; });
}

std::string to_string(const TheoremVerdict& v) {
    std::ostringstream os;
    os << v.theorem << ":";
    for (const auto& h : v.hypotheses) {
        os << " [" << h.name << " " << (h.holds ? "holds" : "fails") << ", value " << to_string(h.value) << "]";
    }
    os << " conclusion limsup P_n = " << to_string(v.limsup) << " (" << (v.conclusion_holds ? "zero" : "nonzero")
       << ")";
    if (v.liminf) os << " liminf P_n = " << to_string(*v.liminf);
    os << " implication " << (v.implication_respected() ? "respected" : "VIOLATED");
    return os.str();
}

ElemSequence measure_sequence(const Instance& inst) {
    return map_terms(inst.seq, [&inst](const BandProjection& p) { return condexp_measure(inst.t, p); });
}

ElemSequence drop_measure_sequence(const Instance& inst) {
    return map_terms(successor_drop_sequence(inst.seq),
                     [&inst](const BandProjection& p) { return condexp_measure(inst.t, p); });
}

ElemSequence gap_measure_sequence(const Instance& inst) {
    const ProjSequence& s = inst.seq;
    const std::size_t m = inst.m;
    return derive_sequence(s, [&](std::size_t n) {
        return condexp_measure(inst.t, proj_meet(s.term(n + m), complement_product(s, n, n + m - 1)));
    });
}

namespace {

TheoremVerdict conclusion_only(const Instance& inst, std::string theorem) {
    const BandProjection sup = proj_limsup(inst.seq);
    return TheoremVerdict{std::move(theorem), {}, sup.is_zero(), sup, condexp_measure(inst.t, sup), std::nullopt};
}

HypothesisResult series_converges(std::string name, const ElemSequence& terms) {
    ExtendedElement sum = positive_series_sum(terms);
    const bool ok = sum.is_finite();
    return {std::move(name), ok, std::move(sum)};
}

HypothesisResult liminf_zero(std::string name, const ElemSequence& terms) {
    Element inf = elem_liminf(terms);
    const bool ok = inf.is_zero();
    return {std::move(name), ok, std::move(inf)};
}

// For a positive sequence, order convergence to 0 is limsup = 0.
HypothesisResult converges_to_zero(std::string name, const ElemSequence& terms) {
    Element sup = elem_limsup(terms);
    const bool ok = sup.is_zero();
    return {std::move(name), ok, std::move(sup)};
}

}  // namespace

TheoremVerdict bc_check(const Instance& inst) {
    TheoremVerdict v = conclusion_only(inst, "bc");
    v.hypotheses.push_back(series_converges("sum T(P_n e) converges", measure_sequence(inst)));
    return v;
}

TheoremVerdict bn_check(const Instance& inst) {
    TheoremVerdict v = conclusion_only(inst, "bn");
    v.hypotheses.push_back(liminf_zero("liminf T(P_n e) = 0", measure_sequence(inst)));
    v.hypotheses.push_back(series_converges("sum T(P_n(I-P_{n+1}) e) converges", drop_measure_sequence(inst)));
    v.liminf = proj_liminf(inst.seq);
    return v;
}

TheoremVerdict bs_check(const Instance& inst) {
    TheoremVerdict v = conclusion_only(inst, "bs");
    v.hypotheses.push_back(converges_to_zero("T(P_n e) -> 0", measure_sequence(inst)));
    v.hypotheses.push_back(
        series_converges("sum T(P_{n+m} prod_{j=n}^{n+m-1}(I-P_j) e) converges", gap_measure_sequence(inst)));
    return v;
}

TheoremVerdict bs_liminf_variant_check(const Instance& inst) {
    TheoremVerdict v = conclusion_only(inst, "bs-liminf");
    v.hypotheses.push_back(liminf_zero("liminf T(P_n e) = 0", measure_sequence(inst)));
    v.hypotheses.push_back(
        series_converges("sum T(P_{n+m} prod_{j=n}^{n+m-1}(I-P_j) e) converges", gap_measure_sequence(inst)));
    return v;
}

std::size_t proof_chain_horizon(const Instance& inst) {
    return inst.seq.prefix().size() + 2 * inst.seq.cycle().size();
}

namespace {

// sum_{n >= start} fn(n), where fn(n) is periodic with `period` for n > stable.
ExtendedElement tail_series(std::size_t start, std::size_t stable, std::size_t period,
                            const std::function<Element(std::size_t)>& fn) {
    const std::size_t last_prefix = std::max(start, stable + 1) - 1;
    std::vector<Element> prefix;
    std::vector<Element> cycle;
    for (std::size_t n = start; n <= last_prefix; ++n) prefix.push_back(fn(n));
    for (std::size_t n = last_prefix + 1; n <= last_prefix + period; ++n) cycle.push_back(fn(n));
    return positive_series_sum(ElemSequence(std::move(prefix), std::move(cycle)));
}

Clause extended_clause(std::string label, const ExtendedElement& lhs, const char* rel, const ExtendedElement& rhs) {
    const std::string r = rel;
    Clause c{std::move(label), to_string(lhs), r, to_string(rhs), false, false};
    if (r == "==") {
        c.holds = lhs == rhs;
    } else {
        c.vacuous = rhs.is_divergent();
        c.holds = leq(lhs, rhs);
    }
    return c;
}

}  // namespace

CheckResult proof_chain_check(const Instance& inst, std::size_t k) {
    const std::size_t m = inst.m;
    const std::size_t horizon = proof_chain_horizon(inst);
    if (k < m + 1 || k > horizon) {
        throw InputError("proof_chain_check: k=" + std::to_string(k) + " outside [" + std::to_string(m + 1) + ", " +
                         std::to_string(horizon) + "]");
    }
    const ProjSequence& s = inst.seq;
    const CondExpOp& t = inst.t;
    const std::size_t p = s.prefix().size();
    const std::size_t c = s.cycle().size();

    // From index `settled` on, prod_{j=k}^{n-1}(I-P_j) no longer changes: one
    // full cycle has been absorbed.
    const std::size_t settled = std::max(k, p + 1) + c;

    const Element limsup_measure = condexp_measure(t, proj_limsup(s));
    const Element tail_sup_measure = condexp_measure(t, finite_sup(s, k, settled - 1));

    // S_n = P_n prod_{j=k}^{n-1}(I-P_j)
    const auto piece = [&](std::size_t n) { return proj_meet(s.term(n), complement_product(s, k, n - 1)); };
    const auto piece_measure = [&](std::size_t n) { return condexp_measure(t, piece(n)); };

    const ExtendedElement full = tail_series(k, settled, c, piece_measure);

    Element head = Element::zero(s.dim());
    Element head_bound = Element::zero(s.dim());
    for (std::size_t n = k; n <= k + m - 1; ++n) {
        head = head + piece_measure(n);
        head_bound = head_bound + condexp_measure(t, s.term(n));
    }
    const ExtendedElement shifted_tail =
        tail_series(k, settled, c, [&](std::size_t n) { return piece_measure(n + m); });
    const ExtendedElement gap_tail = tail_series(k, p, c, [&](std::size_t n) {
        return condexp_measure(t, proj_meet(s.term(n + m), complement_product(s, n, n + m - 1)));
    });

    CheckResult r{"proof-chain", {}};
    r.clauses.push_back(extended_clause("(a) T(limsup P_n e) <= T(sup_{n>=k} P_n e)", limsup_measure, "<=",
                                        tail_sup_measure));
    r.clauses.push_back(
        extended_clause("(b) T(limsup P_n e) <= sum_{n>=k} T(P_n prod_{j=k}^{n-1}(I-P_j) e)", limsup_measure, "<=",
                        full));
    r.clauses.push_back(extended_clause("(c) full sum == head + shifted tail", full, "==", head + shifted_tail));

    // Both products are eventually periodic in n; two periods past the point
    // where the left one settles cover every case.
    const std::size_t last_n = std::max(settled, p + 1) + 2 * c;
    std::string first_bad;
    for (std::size_t n = k; n <= last_n && first_bad.empty(); ++n) {
        if (!proj_leq(complement_product(s, k, n + m - 1), complement_product(s, n, n + m - 1))) {
            first_bad = std::to_string(n);
        }
    }
    r.clauses.push_back({"(d) prod_{j=k}^{n+m-1}(I-P_j) <= prod_{j=n}^{n+m-1}(I-P_j) for n >= k",
                         "n=" + std::to_string(k) + ".." + std::to_string(last_n), "<=",
                         first_bad.empty() ? "all" : "fails at n=" + first_bad, first_bad.empty(), false});
    r.clauses.push_back(extended_clause("(d) shifted tail <= sum_{n>=k} T(P_{n+m} prod_{j=n}^{n+m-1}(I-P_j) e)",
                                        shifted_tail, "<=", gap_tail));
    r.clauses.push_back(extended_clause("(e) head <= sum_{n=k}^{k+m-1} T(P_n e)", head, "<=", head_bound));
    return r;
}

// ---- remark search ----

std::string RemarkSearchResult::summary() const {
    std::ostringstream os;
    if (witnesses.empty()) {
        os << "none found in budget (" << examined << " instances examined)";
    } else {
        os << witnesses.size() << " witness(es) in " << examined << " instances examined";
    }
    os << (exhaustive ? ", exhaustive" : ", sampled");
    return os.str();
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

// Set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (std::size_t label = 0; label <= max_label + 1; ++label) {
            a[i] = label;
            self(self, i + 1, std::max(max_label, label));
        }
    };
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
}

std::uint64_t bell_saturated(std::size_t n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row) next.push_back(sat_add(next.back(), x));
        row = std::move(next);
    }
    return row.back();
}

CondExpOp uniform_op(std::size_t dim, const std::vector<std::size_t>& labels) {
    const std::size_t blocks = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<std::size_t>> partition(blocks);
    for (std::size_t i = 0; i < dim; ++i) partition[labels[i]].push_back(i);
    return {dim, std::move(partition), std::vector<Rational>(dim, Rational(1, static_cast<unsigned long>(dim)))};
}

struct Shape {
    std::size_t dim;
    std::size_t cycle_len;
    std::size_t m;
    std::uint64_t cycles;  // (2^dim)^cycle_len
};

}  // namespace

RemarkSearchResult remark_search(std::size_t max_dim, std::size_t max_cycle, std::size_t max_m,
                                 std::uint64_t budget, std::uint64_t seed, unsigned workers) {
    if (max_dim == 0 || max_cycle == 0 || max_m == 0) {
        throw InputError("remark_search: bounds must be positive");
    }
    if (max_dim > kMaxDim) {
        throw InputError("remark_search: max_dim exceeds " + std::to_string(kMaxDim));
    }
    RemarkSearchResult result;
    if (budget == 0) {
        result.exhaustive = false;
        return result;
    }

    std::uint64_t total = 0;
    for (std::size_t d = 1; d <= max_dim; ++d) {
        const std::uint64_t per_term = d >= 64 ? kSaturated : (std::uint64_t{1} << d);
        std::uint64_t cycles = 1;
        for (std::size_t c = 1; c <= max_cycle; ++c) {
            cycles = sat_mul(cycles, per_term);
            total = sat_add(total, sat_mul(sat_mul(bell_saturated(d), cycles), max_m));
        }
    }
    result.exhaustive = total <= budget;
    const std::uint64_t count = result.exhaustive ? total : budget;
    result.examined = count;

    std::vector<std::optional<Instance>> found(count);

    if (result.exhaustive) {
        // Every count here fits in 64 bits because total <= budget.
        std::vector<std::vector<std::vector<std::size_t>>> partitions(max_dim + 1);
        std::vector<Shape> shapes;
        std::vector<std::uint64_t> offsets;  // start index of each (shape, partition) block
        std::vector<std::size_t> shape_partition;
        std::vector<std::size_t> shape_of_block;
        std::uint64_t offset = 0;
        for (std::size_t d = 1; d <= max_dim; ++d) {
            partitions[d] = restricted_growth_strings(d);
            std::uint64_t cycles = 1;
            for (std::size_t c = 1; c <= max_cycle; ++c) {
                cycles *= std::uint64_t{1} << d;
                for (std::size_t m = 1; m <= max_m; ++m) {
                    shapes.push_back({d, c, m, cycles});
                    for (std::size_t pi = 0; pi < partitions[d].size(); ++pi) {
                        offsets.push_back(offset);
                        shape_of_block.push_back(shapes.size() - 1);
                        shape_partition.push_back(pi);
                        offset += cycles;
                    }
                }
            }
        }
        parallel_for(count, workers, [&](std::size_t idx) {
            const auto it = std::upper_bound(offsets.begin(), offsets.end(), static_cast<std::uint64_t>(idx));
            const auto block = static_cast<std::size_t>(std::distance(offsets.begin(), it)) - 1;
            const Shape& sh = shapes[shape_of_block[block]];
            std::uint64_t code = idx - offsets[block];
            std::vector<BandProjection> cycle;
            for (std::size_t j = 0; j < sh.cycle_len; ++j) {
                const std::uint64_t mask = full_mask(sh.dim);
                cycle.emplace_back(sh.dim, code & mask);
                code = sh.dim >= 64 ? 0 : code >> sh.dim;
            }
            Instance inst(uniform_op(sh.dim, partitions[sh.dim][shape_partition[block]]),
                          ProjSequence({}, std::move(cycle)), sh.m);
            if (!bs_liminf_variant_check(inst).implication_respected()) found[idx] = std::move(inst);
        });
    } else {
        parallel_for(count, workers, [&](std::size_t idx) {
            Rng rng = Rng::stream(seed, idx);
            const auto d = static_cast<std::size_t>(rng.between(1, max_dim));
            const auto c = static_cast<std::size_t>(rng.between(1, max_cycle));
            const auto m = static_cast<std::size_t>(rng.between(1, max_m));
            std::vector<std::size_t> raw(d);
            for (auto& l : raw) l = static_cast<std::size_t>(rng.below(d));
            // Relabel to a restricted growth string.
            std::vector<std::size_t> relabel(d, d);
            std::vector<std::size_t> labels(d);
            std::size_t next = 0;
            for (std::size_t i = 0; i < d; ++i) {
                if (relabel[raw[i]] == d) relabel[raw[i]] = next++;
                labels[i] = relabel[raw[i]];
            }
            std::vector<BandProjection> cycle;
            for (std::size_t j = 0; j < c; ++j) cycle.emplace_back(d, rng.next() & full_mask(d));
            Instance inst(uniform_op(d, labels), ProjSequence({}, std::move(cycle)), m);
            if (!bs_liminf_variant_check(inst).implication_respected()) found[idx] = std::move(inst);
        });
    }

    for (auto& f : found) {
        if (f) result.witnesses.push_back(std::move(*f));
    }
    return result;
}

}  // namespace rbc
