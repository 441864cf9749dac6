#pragma once

// Borel-Cantelli type statements for band projections under a conditional
// expectation operator T with e = Te the all-ones vector:
//
//   bc  : sum T(P_n e) convergent                                  => limsup P_n = 0
//   bn  : liminf T(P_n e) = 0, sum T(P_n (I-P_{n+1}) e) convergent => limsup P_n = 0
//   bs  : T(P_n e) -> 0, sum T(P_{n+m} prod_{j=n}^{n+m-1}(I-P_j) e)
//         convergent for some m >= 1                               => limsup P_n = 0
//
// Each checker decides the hypotheses and the conclusion exactly and reports
// whether the implication held on the instance.

#include "rbc/check_result.hpp"
#include "rbc/condexp.hpp"
#include "rbc/core.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rbc {

struct Instance {
    Instance(CondExpOp t, ProjSequence seq, std::size_t m);

    std::size_t dim() const { return t.dim(); }

    CondExpOp t;
    ProjSequence seq;
    std::size_t m;

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct HypothesisResult {
    std::string name;
    bool holds = false;
    ExtendedElement value;  // the quantity the hypothesis is about
};

struct TheoremVerdict {
    std::string theorem;
    std::vector<HypothesisResult> hypotheses;
    bool conclusion_holds = false;
    BandProjection limsup;                 // limsup P_n
    Element limsup_measure;                // T(limsup P_n e)
    std::optional<BandProjection> liminf;  // recorded by bn_check

    bool hypotheses_hold() const;
    bool implication_respected() const { return !hypotheses_hold() || conclusion_holds; }
    bool vacuous() const { return !hypotheses_hold(); }
};

std::string to_string(const TheoremVerdict& v);

// n -> T(P_n e)
ElemSequence measure_sequence(const Instance& inst);
// n -> T(P_n (I - P_{n+1}) e)
ElemSequence drop_measure_sequence(const Instance& inst);
// n -> T(P_{n+m} prod_{j=n}^{n+m-1} (I - P_j) e)
ElemSequence gap_measure_sequence(const Instance& inst);

TheoremVerdict bc_check(const Instance& inst);
TheoremVerdict bn_check(const Instance& inst);
TheoremVerdict bs_check(const Instance& inst);
// bs_check with the first hypothesis weakened to liminf T(P_n e) = 0. This
// implication is false on some instances.
TheoremVerdict bs_liminf_variant_check(const Instance& inst);

// Largest k accepted by proof_chain_check: |prefix| + 2 |cycle|.
std::size_t proof_chain_horizon(const Instance& inst);

// The inequalities used to derive the bs conclusion, for a fixed k with
// m + 1 <= k <= proof_chain_horizon(inst):
//   (a)  T(limsup P_n e) <= T(sup_{n>=k} P_n e)
//   (b)  T(limsup P_n e) <= sum_{n>=k} T(P_n prod_{j=k}^{n-1}(I-P_j) e)
//   (c)  that sum splits into its first m terms plus the shifted tail
//   (d)  prod_{j=k}^{n+m-1}(I-P_j) <= prod_{j=n}^{n+m-1}(I-P_j) for n >= k,
//        and the resulting bound on the tail sum
//   (e)  the first m terms are below sum_{n=k}^{k+m-1} T(P_n e)
// Divergent right-hand sides make a clause vacuous.
CheckResult proof_chain_check(const Instance& inst, std::size_t k);

struct RemarkSearchResult {
    std::vector<Instance> witnesses;
    std::uint64_t examined = 0;
    bool exhaustive = false;

    std::string summary() const;
};

// Looks for instances where the liminf-weakened bs implication fails.
// Instances have an empty prefix, dim <= max_dim, cycle length <= max_cycle
// and gap m <= max_m; T ranges over all partitions with uniform weights. The
// space is enumerated in a fixed order when it has at most `budget` members,
// otherwise `budget` instances are sampled from `seed`. Witnesses come back in
// examination order regardless of the worker count.
RemarkSearchResult remark_search(std::size_t max_dim, std::size_t max_cycle, std::size_t max_m,
                                 std::uint64_t budget, std::uint64_t seed = 0, unsigned workers = 1);

}  // namespace rbc
