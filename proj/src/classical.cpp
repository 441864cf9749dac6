#include "rbc/classical.hpp"

#include <algorithm>
#include <functional>

namespace rbc {

namespace {

using Event = std::vector<bool>;

struct EventSequence {
    std::vector<Event> prefix;
    std::vector<Event> cycle;

    const Event& at(std::size_t n) const {
        return n <= prefix.size() ? prefix[n - 1] : cycle[(n - prefix.size() - 1) % cycle.size()];
    }
};

Event to_event(const BandProjection& p) {
    Event a(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) a[i] = p.contains(i);
    return a;
}

// sum_{n>=1} term(n) where term(n) depends on events n.. only, so it is
// periodic once n passes the prefix.
std::optional<Rational> event_series(const EventSequence& ev, const std::function<Rational(std::size_t)>& term) {
    const std::size_t p = ev.prefix.size();
    for (std::size_t n = p + 1; n <= p + ev.cycle.size(); ++n) {
        if (term(n) != 0) return std::nullopt;
    }
    Rational sum = 0;
    for (std::size_t n = 1; n <= p; ++n) sum += term(n);
    return sum;
}

Element constant(std::size_t dim, const Rational& q) { return Element(std::vector<Rational>(dim, q)); }

ExtendedElement constant(std::size_t dim, const std::optional<Rational>& q) {
    if (!q) return ExtendedElement::divergent();
    return constant(dim, *q);
}

}  // namespace

ClassicalQuantities classical_quantities(const Instance& inst) {
    if (inst.t.partition().size() != 1) {
        throw InputError("classical quantities need a one-block operator");
    }
    const std::vector<Rational>& w = inst.t.weights();
    const std::size_t dim = inst.dim();
    const auto prob = [&](const std::function<bool(std::size_t)>& in_event) {
        Rational q = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            if (in_event(i)) q += w[i];
        }
        return q;
    };

    EventSequence ev;
    for (const auto& p : inst.seq.prefix()) ev.prefix.push_back(to_event(p));
    for (const auto& p : inst.seq.cycle()) ev.cycle.push_back(to_event(p));

    ClassicalQuantities q;
    std::vector<Rational> cycle_probs;
    for (const auto& a : ev.cycle) cycle_probs.push_back(prob([&](std::size_t i) { return a[i]; }));
    q.liminf_prob = *std::min_element(cycle_probs.begin(), cycle_probs.end());
    q.limsup_prob = *std::max_element(cycle_probs.begin(), cycle_probs.end());

    q.sum_prob = event_series(ev, [&](std::size_t n) {
        return prob([&](std::size_t i) { return ev.at(n)[i]; });
    });
    q.sum_drop_prob = event_series(ev, [&](std::size_t n) {
        return prob([&](std::size_t i) { return ev.at(n)[i] && !ev.at(n + 1)[i]; });
    });
    const std::size_t m = inst.m;
    q.sum_gap_prob = event_series(ev, [&](std::size_t n) {
        return prob([&](std::size_t i) {
            for (std::size_t j = n; j < n + m; ++j) {
                if (ev.at(j)[i]) return false;
            }
            return static_cast<bool>(ev.at(n + m)[i]);
        });
    });
    // A point lies in infinitely many A_n iff it lies in some cycle event.
    q.limsup_event_prob = prob([&](std::size_t i) {
        return std::any_of(ev.cycle.begin(), ev.cycle.end(), [i](const Event& a) { return static_cast<bool>(a[i]); });
    });
    return q;
}

CheckResult classical_bridge_check(const Instance& inst) {
    const ClassicalQuantities q = classical_quantities(inst);
    const std::size_t dim = inst.dim();
    const TheoremVerdict bc = bc_check(inst);
    const TheoremVerdict bn = bn_check(inst);
    const TheoremVerdict bs = bs_check(inst);

    CheckResult r{"classical-bridge", {}};
    const auto same = [&r](std::string label, const ExtendedElement& model, const ExtendedElement& classical) {
        r.clauses.push_back({std::move(label), to_string(model), "==", to_string(classical), model == classical, false});
    };
    same("bc: sum T(P_n e) vs sum P(A_n)", bc.hypotheses[0].value, constant(dim, q.sum_prob));
    same("bn: liminf T(P_n e) vs liminf P(A_n)", bn.hypotheses[0].value, constant(dim, q.liminf_prob));
    same("bn: sum T(P_n(I-P_{n+1})e) vs sum P(A_n cap A^c_{n+1})", bn.hypotheses[1].value,
         constant(dim, q.sum_drop_prob));
    same("bs: limsup T(P_n e) vs limsup P(A_n)", bs.hypotheses[0].value, constant(dim, q.limsup_prob));
    same("bs: gap series vs sum P(A^c_n ... A_{n+m})", bs.hypotheses[1].value, constant(dim, q.sum_gap_prob));
    same("T(limsup P_n e) vs P(limsup A_n)", bc.limsup_measure, constant(dim, q.limsup_event_prob));

    // The verdicts themselves must agree with the classical statements.
    const auto flag = [&r](std::string label, bool model, bool classical) {
        r.clauses.push_back({std::move(label), model ? "true" : "false", "==", classical ? "true" : "false",
                             model == classical, false});
    };
    flag("bc hypothesis vs sum P(A_n) < inf", bc.hypotheses_hold(), q.sum_prob.has_value());
    flag("bn hypotheses vs classical", bn.hypotheses_hold(), q.liminf_prob == 0 && q.sum_drop_prob.has_value());
    flag("bs hypotheses vs classical", bs.hypotheses_hold(), q.limsup_prob == 0 && q.sum_gap_prob.has_value());
    flag("conclusion vs P(limsup A_n) = 0", bc.conclusion_holds, q.limsup_event_prob == 0);
    return r;
}

}  // namespace rbc
