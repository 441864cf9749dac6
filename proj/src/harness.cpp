#include "rbc/harness.hpp"

#include "rbc/condexp.hpp"
#include "rbc/instance_io.hpp"
#include "rbc/parallel.hpp"
#include "rbc/projection_calculus.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace rbc {

namespace {

constexpr std::array<std::string_view, 10> kCheckNames = {"core", "fatou", "lemma31", "lemma32", "identity33",
                                                          "bc",   "bn",    "bs",      "proof-chain", "remark"};

// Every (n, m) with m up to this is decomposed by the lemma31 check.
constexpr std::size_t kDecomposeMaxGap = 5;

Rational small_rational(Rng& rng) {
    Rational q(static_cast<long>(rng.between(0, 6)), static_cast<unsigned long>(rng.between(1, 4)));
    q.canonicalize();
    return q;
}

std::string first_failed_clause(const CheckResult& r) {
    for (const auto& c : r.clauses) {
        if (!c.holds) return r.name + ": " + c.label + " failed: " + c.lhs + " " + c.relation + " " + c.rhs;
    }
    return {};
}

// Each law returns an empty string on success, else a description.
std::string core_laws(const Instance& inst, const FatouInput& fatou) {
    const ProjSequence& s = inst.seq;
    const std::size_t dim = s.dim();
    const std::size_t horizon = proof_chain_horizon(inst);

    std::vector<BandProjection> terms;
    for (std::size_t n = 1; n <= horizon; ++n) terms.push_back(s.term(n));

    // Finite infimum of projections equals their composition.
    Element composed = Element::unit(dim);
    for (std::size_t len = 1; len <= terms.size(); ++len) {
        composed = proj_apply(terms[len - 1], composed);
        const BandProjection meet = proj_chain_meet(std::span<const BandProjection>(terms.data(), len));
        if (composed != Element::indicator(meet)) {
            return "chain meet " + to_string(meet) + " differs from composition " + to_string(composed);
        }
    }

    // Disjoint positive parts: sum equals supremum.
    const Element& f = fatou.bound;
    Element sum = Element::zero(dim);
    Element sup = Element::zero(dim);
    for (const auto& piece : disjointify(s, 1, horizon).pieces) {
        const Element part = proj_apply(piece, f);
        sum = sum + part;
        sup = lattice_sup(sup, part);
    }
    if (sum != sup) return "disjoint sum " + to_string(sum) + " differs from supremum " + to_string(sup);

    // Tail invariance under a longer prefix and a rotated cycle.
    std::vector<BandProjection> prefix = s.prefix();
    prefix.insert(prefix.begin(), proj_complement(s.term(1)));
    std::vector<BandProjection> cycle = s.cycle();
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    const ProjSequence moved(std::move(prefix), std::move(cycle));
    if (proj_limsup(moved) != proj_limsup(s) || proj_liminf(moved) != proj_liminf(s)) {
        return "limits changed under prefix extension and cycle rotation";
    }

    if (!proj_leq(proj_liminf(s), proj_limsup(s))) return "liminf not below limsup";

    // Convergence criterion.
    const ElemSequence& fs = fatou.seq;
    const bool constant_cycle =
        std::all_of(fs.cycle().begin(), fs.cycle().end(), [&fs](const Element& x) { return x == fs.cycle().front(); });
    const Element hi = elem_limsup(fs);
    const Element lo = elem_liminf(fs);
    if ((hi == lo) != constant_cycle) return "limsup == liminf does not match a constant cycle";
    if (constant_cycle && hi != fs.cycle().front()) return "limit of a constant tail is not the constant";
    return {};
}

std::string condexp_laws(const Instance& inst, const FatouInput& fatou) {
    const CondExpOp& t = inst.t;
    const ValidationReport v = condexp_validate(t);
    if (!v.ok()) return "axiom check failed: " + v.failures.front();

    const auto weighted_total = [&t](const Element& f) {
        Rational q = 0;
        for (std::size_t i = 0; i < f.dim(); ++i) q += t.weights()[i] * f[i];
        return q;
    };
    const Element* previous = nullptr;
    for (const auto* part : {&fatou.seq.prefix(), &fatou.seq.cycle()}) {
        for (const Element& f : *part) {
            const Element tf = condexp_apply(t, f);
            if (weighted_total(tf) != weighted_total(f)) return "weighted total not preserved at " + to_string(f);
            if (condexp_apply(t, tf) != tf) return "T not idempotent at " + to_string(f);
            if (!tf.is_positive()) return "T not positive at " + to_string(f);
            if (previous != nullptr) {
                const Rational a(3, 2);
                if (condexp_apply(t, a * f + *previous) != a * tf + condexp_apply(t, *previous)) {
                    return "T not linear at " + to_string(f);
                }
            }
            previous = &f;
        }
    }

    std::string bad = first_failed_clause(fatou_check(t, fatou.seq));
    if (bad.empty()) bad = first_failed_clause(reverse_fatou_check(t, fatou.seq, fatou.bound));
    return bad;
}

std::string lemma31_laws(const Instance& inst) {
    const std::size_t horizon = proof_chain_horizon(inst);
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (std::size_t m = 1; m <= kDecomposeMaxGap; ++m) decompose(inst.seq, n, m);
    }
    return {};
}

std::string lemma32_laws(const Instance& inst) {
    const ProjSequence& s = inst.seq;
    const std::size_t horizon = proof_chain_horizon(inst);
    for (std::size_t k = 1; k <= horizon; ++k) {
        for (std::size_t last = k; last <= horizon; ++last) {
            disjointify(s, k, last);
            if (complement_product(s, k, last) != proj_complement(finite_sup(s, k, last))) {
                return "complement identity fails for k=" + std::to_string(k) + " N=" + std::to_string(last);
            }
        }
    }
    return {};
}

CheckOutcome theorem_outcome(Check c, const TheoremVerdict& v) {
    if (!v.implication_respected()) return {c, Status::fail, to_string(v)};
    return {c, v.vacuous() ? Status::vacuous : Status::pass, {}};
}

CheckOutcome evaluate_one(Check c, const Instance& inst, const FatouInput& fatou) {
    const auto from_laws = [c](const std::string& bad) {
        return CheckOutcome{c, bad.empty() ? Status::pass : Status::fail, bad};
    };
    switch (c) {
        case Check::core: return from_laws(core_laws(inst, fatou));
        case Check::fatou: return from_laws(condexp_laws(inst, fatou));
        case Check::lemma31: return from_laws(lemma31_laws(inst));
        case Check::lemma32: return from_laws(lemma32_laws(inst));
        case Check::identity33: {
            std::string bad = first_failed_clause(limsup_identity_check(inst.seq));
            if (bad.empty()) bad = first_failed_clause(limsup_identity_bounds(inst.seq));
            return from_laws(bad);
        }
        case Check::bc: return theorem_outcome(c, bc_check(inst));
        case Check::bn: return theorem_outcome(c, bn_check(inst));
        case Check::bs: {
            const TheoremVerdict v = bs_check(inst);
            if (v.hypotheses_hold() && !bn_check(inst).conclusion_holds) {
                return {c, Status::fail, "bs hypotheses hold but bn conclusion fails"};
            }
            return theorem_outcome(c, v);
        }
        case Check::proof_chain: {
            const std::size_t horizon = proof_chain_horizon(inst);
            if (horizon < inst.m + 1) return {c, Status::vacuous, {}};
            for (std::size_t k = inst.m + 1; k <= horizon; ++k) {
                const std::string bad = first_failed_clause(proof_chain_check(inst, k));
                if (!bad.empty()) return {c, Status::fail, "k=" + std::to_string(k) + " " + bad};
            }
            return {c, Status::pass, {}};
        }
        case Check::remark: {
            const TheoremVerdict v = bs_liminf_variant_check(inst);
            CheckOutcome out{c, v.vacuous() ? Status::vacuous : Status::pass, {}};
            if (!v.implication_respected()) {
                out.remark_witness = true;
                out.detail = to_string(v);
            }
            return out;
        }
    }
    return {c, Status::fail, "unknown check"};
}

}  // namespace

std::string_view check_name(Check c) { return kCheckNames[static_cast<std::size_t>(c)]; }

std::optional<Check> parse_check(std::string_view name) {
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        if (kCheckNames[i] == name) return kAllChecks[i];
    }
    return std::nullopt;
}

void SuiteConfig::validate() const {
    const auto positive = [](std::size_t v, const char* what) {
        if (v < 1) throw InputError(std::string(what) + " must be >= 1");
    };
    positive(bounds.dim_max, "dim-max");
    positive(bounds.prefix_max, "prefix-max");
    positive(bounds.cycle_max, "cycle-max");
    positive(bounds.m_max, "m-max");
    if (bounds.dim_max > kMaxDim) {
        throw InputError("dim-max must be <= " + std::to_string(kMaxDim));
    }
    if (checks.empty()) {
        throw InputError("no checks selected");
    }
}

Instance generate_instance(Rng& rng, const Bounds& bounds) {
    const auto dim = static_cast<std::size_t>(rng.between(1, bounds.dim_max));

    std::vector<std::size_t> relabel(dim, dim);
    std::vector<std::vector<std::size_t>> partition;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto raw = static_cast<std::size_t>(rng.below(dim));
        if (relabel[raw] == dim) {
            relabel[raw] = partition.size();
            partition.emplace_back();
        }
        partition[relabel[raw]].push_back(i);
    }

    std::vector<Rational> weights(dim);
    Rational total = 0;
    for (auto& w : weights) {
        w = static_cast<long>(rng.between(1, 8));
        total += w;
    }
    for (auto& w : weights) w /= total;

    const std::uint64_t mask = full_mask(dim);
    std::vector<BandProjection> prefix;
    const auto p = rng.between(0, bounds.prefix_max);
    for (std::uint64_t i = 0; i < p; ++i) prefix.emplace_back(dim, rng.next() & mask);
    std::vector<BandProjection> cycle;
    const auto c = rng.between(1, bounds.cycle_max);
    const bool empty_tail = rng.coin();
    for (std::uint64_t i = 0; i < c; ++i) cycle.emplace_back(dim, empty_tail ? 0 : rng.next() & mask);

    const auto m = static_cast<std::size_t>(rng.between(1, bounds.m_max));
    return {CondExpOp(dim, std::move(partition), std::move(weights)), ProjSequence(std::move(prefix), std::move(cycle)),
            m};
}

FatouInput generate_fatou_input(Rng& rng, std::size_t dim, const Bounds& bounds) {
    const auto draw = [&rng, dim] {
        std::vector<Rational> c(dim);
        for (auto& q : c) q = small_rational(rng);
        return Element(std::move(c));
    };
    std::vector<Element> prefix;
    const auto p = rng.between(0, bounds.prefix_max);
    for (std::uint64_t i = 0; i < p; ++i) prefix.push_back(draw());
    std::vector<Element> cycle;
    const auto c = rng.between(1, bounds.cycle_max);
    const bool constant = rng.below(4) == 0;
    for (std::uint64_t i = 0; i < c; ++i) cycle.push_back(constant && i > 0 ? cycle.front() : draw());

    Element bound = draw();
    for (const auto* part : {&prefix, &cycle}) {
        for (const auto& f : *part) bound = lattice_sup(bound, f);
    }
    return {ElemSequence(std::move(prefix), std::move(cycle)), std::move(bound)};
}

FatouInput carrier_fatou_input(const Instance& inst) {
    std::vector<Rational> c(inst.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i + 1);
    const Element weights(std::move(c));
    return {map_terms(inst.seq, [&weights](const BandProjection& p) { return proj_apply(p, weights); }), weights};
}

std::vector<CheckOutcome> evaluate_instance(const Instance& inst, const FatouInput& fatou,
                                            const std::vector<Check>& checks) {
    std::vector<CheckOutcome> out;
    out.reserve(checks.size());
    for (Check c : checks) {
        try {
            out.push_back(evaluate_one(c, inst, fatou));
        } catch (const std::exception& e) {
            out.push_back({c, Status::fail, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::uint64_t RunReport::total_failures() const {
    std::uint64_t n = 0;
    for (const auto& [c, k] : counts) n += k.fail;
    return n;
}

const Counts& RunReport::counts_for(Check c) const {
    for (const auto& [check, k] : counts) {
        if (check == c) return k;
    }
    throw InputError("check " + std::string(check_name(c)) + " was not run");
}

RunReport run_suite(const SuiteConfig& config, unsigned workers) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.config = config;
    report.workers = workers;
    for (Check c : config.checks) report.counts.emplace_back(c, Counts{});

    std::vector<std::vector<CheckOutcome>> outcomes(config.count);
    std::vector<std::string> serialized(config.count);
    parallel_for(config.count, workers, [&](std::size_t i) {
        Rng rng = Rng::stream(config.seed, i);
        const Instance inst = generate_instance(rng, config.bounds);
        const FatouInput fatou = generate_fatou_input(rng, inst.dim(), config.bounds);
        outcomes[i] = evaluate_instance(inst, fatou, config.checks);
        const bool failed = std::any_of(outcomes[i].begin(), outcomes[i].end(),
                                        [](const CheckOutcome& o) { return o.status == Status::fail; });
        if (failed) serialized[i] = serialize_instance(inst);
    });

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (std::size_t j = 0; j < outcomes[i].size(); ++j) {
            const CheckOutcome& o = outcomes[i][j];
            Counts& k = report.counts[j].second;
            if (o.status == Status::fail) {
                ++k.fail;
                report.failures.push_back({o.check, i, serialized[i], o.detail});
            } else if (o.remark_witness) {
                ++k.witness;
            } else if (o.status == Status::vacuous) {
                ++k.vacuous;
            } else {
                ++k.pass;
            }
        }
    }

    const bool wants_remark = std::find(config.checks.begin(), config.checks.end(), Check::remark) != config.checks.end();
    if (wants_remark && config.count > 0) {
        report.remark = remark_search(config.bounds.dim_max, config.bounds.cycle_max, config.bounds.m_max,
                                      config.remark_budget, config.seed, workers);
    }

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

// Witnesses listed in the report; the count is always complete.
constexpr std::size_t kReportedWitnesses = 8;

}  // namespace

std::string report_json(const RunReport& report) {
    using nlohmann::ordered_json;
    const SuiteConfig& cfg = report.config;
    ordered_json j;
    j["seed"] = cfg.seed;
    j["count"] = cfg.count;
    j["bounds"] = {{"dim_max", cfg.bounds.dim_max},
                   {"prefix_max", cfg.bounds.prefix_max},
                   {"cycle_max", cfg.bounds.cycle_max},
                   {"m_max", cfg.bounds.m_max}};
    j["checks"] = ordered_json::array();
    for (Check c : cfg.checks) j["checks"].push_back(check_name(c));

    ordered_json results = ordered_json::object();
    for (const auto& [c, k] : report.counts) {
        ordered_json entry = {{"pass", k.pass}, {"fail", k.fail}, {"vacuous", k.vacuous}};
        if (c == Check::remark) entry["witness"] = k.witness;
        results[std::string(check_name(c))] = entry;
    }
    j["results"] = results;

    j["failures"] = ordered_json::array();
    for (const auto& f : report.failures) {
        j["failures"].push_back({{"check", check_name(f.check)},
                                 {"index", f.index},
                                 {"instance", ordered_json::parse(f.instance)},
                                 {"detail", f.detail}});
    }

    if (report.remark) {
        const RemarkSearchResult& r = *report.remark;
        ordered_json witnesses = ordered_json::array();
        for (std::size_t i = 0; i < std::min(r.witnesses.size(), kReportedWitnesses); ++i) {
            witnesses.push_back(ordered_json::parse(serialize_instance(r.witnesses[i])));
        }
        j["remark_search"] = {{"budget", cfg.remark_budget},
                              {"examined", r.examined},
                              {"exhaustive", r.exhaustive},
                              {"witness_count", r.witnesses.size()},
                              {"summary", r.summary()},
                              {"witnesses", witnesses}};
    }
    j["status"] = report.ok() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string report_summary(const RunReport& report) {
    std::ostringstream os;
    os << "seed " << report.config.seed << ", " << report.config.count << " instances, " << report.workers
       << " worker(s), " << report.wall_seconds << " s\n";
    for (const auto& [c, k] : report.counts) {
        os << "  " << check_name(c) << ": " << k.pass << " pass, " << k.fail << " fail, " << k.vacuous << " vacuous";
        if (c == Check::remark) os << ", " << k.witness << " witness";
        os << "\n";
    }
    if (report.remark) os << "  remark search: " << report.remark->summary() << "\n";
    os << (report.ok() ? "all checks passed" : "SOUNDNESS FAILURES: " + std::to_string(report.total_failures()))
       << "\n";
    return os.str();
}

}  // namespace rbc
