#pragma once

// Identities for sequences of band projections: the decomposition of a single
// term against its successors, disjointification of finite suprema, and the
// limsup - liminf identity.

#include "rbc/check_result.hpp"
#include "rbc/core.hpp"

#include <cstddef>
#include <vector>

namespace rbc {

// P_n = base + sum parts, with
//   base    = P_n P_{n+1} ... P_{n+m}
//   part_i  = P_n ... P_{n+i-1} (I - P_{n+i}),  i = 1..m.
struct Decomposition {
    BandProjection base;
    std::vector<BandProjection> parts;
};

// Throws InputError unless n, m >= 1. The result is verified (sum identity and
// pairwise orthogonality) before returning; a failure throws InvariantViolation.
Decomposition decompose(const ProjSequence& s, std::size_t n, std::size_t m);

// Pieces Q_j = P_j (I - P_k) ... (I - P_{j-1}) for j = k..N; Q_k = P_k.
struct DisjointCover {
    std::vector<BandProjection> pieces;
};

// Throws InputError unless 1 <= k <= N. Verifies pairwise disjointness and
// that the join of the pieces is sup_{j=k..N} P_j.
DisjointCover disjointify(const ProjSequence& s, std::size_t k, std::size_t last);

// sup_{j=k..N} P_j by direct union.
BandProjection finite_sup(const ProjSequence& s, std::size_t k, std::size_t last);

// prod_{j=k..N} (I - P_j); the identity I when N < k.
BandProjection complement_product(const ProjSequence& s, std::size_t k, std::size_t last);

// D(n) = P_n (I - P_{n+1}), materialized with a one-term seam in the prefix.
ProjSequence successor_drop_sequence(const ProjSequence& s);

// limsup P_n - liminf P_n == limsup P_n (I - P_{n+1}).
CheckResult limsup_identity_check(const ProjSequence& s);

// limsup D <= limsup P_n and limsup D <= I - liminf P_n.
CheckResult limsup_identity_bounds(const ProjSequence& s);

}  // namespace rbc
