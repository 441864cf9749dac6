#pragma once

// Seeded instance generation and suite orchestration. A run is a pure
// function of (seed, config): instance i is drawn from its own RNG stream, so
// the report does not depend on how instances are spread over workers.

#include "rbc/borel_cantelli.hpp"
#include "rbc/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbc {

enum class Check { core, fatou, lemma31, lemma32, identity33, bc, bn, bs, proof_chain, remark };

inline constexpr std::array kAllChecks = {Check::core,       Check::fatou, Check::lemma31, Check::lemma32,
                                          Check::identity33, Check::bc,    Check::bn,      Check::bs,
                                          Check::proof_chain, Check::remark};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

struct Bounds {
    std::size_t dim_max = 8;
    std::size_t prefix_max = 4;
    std::size_t cycle_max = 4;
    std::size_t m_max = 3;
};

struct SuiteConfig {
    std::uint64_t seed = 1;
    std::uint64_t count = 10000;
    Bounds bounds;
    std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
    // Instances examined by the remark search that accompanies the remark check.
    std::uint64_t remark_budget = 20000;

    // Throws InputError for bounds < 1, dim_max > 64 or an empty check list.
    void validate() const;
};

// Deterministic given the RNG state. With probability 1/2 the cycle is all
// empty carriers, which makes the theorem hypotheses hold often enough to be
// worth checking.
Instance generate_instance(Rng& rng, const Bounds& bounds);

// Inputs for the Fatou checks: a sequence 0 <= f_n <= g.
struct FatouInput {
    ElemSequence seq;
    Element bound;
};

FatouInput generate_fatou_input(Rng& rng, std::size_t dim, const Bounds& bounds);
// f_n = P_n c with c = (1, 2, ..., n), bounded by c. Used when verifying a
// single instance read from a file.
FatouInput carrier_fatou_input(const Instance& inst);

enum class Status { pass, fail, vacuous };

struct CheckOutcome {
    Check check;
    Status status;
    std::string detail;  // populated on failure, or with the remark witness
    bool remark_witness = false;
};

// Runs the selected checks on one instance.
std::vector<CheckOutcome> evaluate_instance(const Instance& inst, const FatouInput& fatou,
                                            const std::vector<Check>& checks);

struct Counts {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t witness = 0;  // remark only: weakened implication false
};

struct Failure {
    Check check;
    std::uint64_t index;
    std::string instance;  // serialized
    std::string detail;
};

struct RunReport {
    SuiteConfig config;
    std::vector<std::pair<Check, Counts>> counts;
    std::vector<Failure> failures;
    std::optional<RemarkSearchResult> remark;
    double wall_seconds = 0;  // not part of the machine-readable report
    unsigned workers = 1;     // ditto

    std::uint64_t total_failures() const;
    bool ok() const { return total_failures() == 0; }
    const Counts& counts_for(Check c) const;
};

RunReport run_suite(const SuiteConfig& config, unsigned workers);

// Machine-readable report (stdout). Byte-identical for equal (seed, config).
std::string report_json(const RunReport& report);
// Human summary (stderr).
std::string report_summary(const RunReport& report);

}  // namespace rbc
