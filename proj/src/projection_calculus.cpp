#include "rbc/projection_calculus.hpp"

#include <string>

namespace rbc {

namespace {

std::string position(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Clause carrier_clause(std::string label, const BandProjection& lhs, const char* rel, const BandProjection& rhs) {
    const std::string r = rel;
    bool holds = false;
    if (r == "==") holds = lhs == rhs;
    else if (r == "<=") holds = proj_leq(lhs, rhs);
    else holds = proj_leq(rhs, lhs);
    return {std::move(label), to_string(lhs), r, to_string(rhs), holds, false};
}

}  // namespace

Decomposition decompose(const ProjSequence& s, std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
        throw InputError("decompose: n and m must be >= 1");
    }
    const std::size_t dim = s.dim();
    Decomposition d{BandProjection::identity(dim), {}};

    // running = P_n ... P_{n+i-1}
    BandProjection running = s.term(n);
    for (std::size_t i = 1; i <= m; ++i) {
        d.parts.push_back(proj_meet(running, proj_complement(s.term(n + i))));
        running = proj_meet(running, s.term(n + i));
    }
    d.base = running;

    BandProjection total = d.base;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (!proj_meet(d.base, d.parts[i]).is_zero()) {
            throw InvariantViolation("decompose: base and part " + std::to_string(i + 1) + " overlap at " +
                                     position(n, m));
        }
        for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
            if (!proj_meet(d.parts[i], d.parts[j]).is_zero()) {
                throw InvariantViolation("decompose: parts " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " overlap at " + position(n, m));
            }
        }
        total = proj_join(total, d.parts[i]);
    }
    if (total != s.term(n)) {
        throw InvariantViolation("decompose: base + parts = " + to_string(total) + " but P_n = " +
                                 to_string(s.term(n)));
    }
    return d;
}

BandProjection finite_sup(const ProjSequence& s, std::size_t k, std::size_t last) {
    BandProjection acc = BandProjection::zero(s.dim());
    for (std::size_t j = k; j <= last; ++j) acc = proj_join(acc, s.term(j));
    return acc;
}

BandProjection complement_product(const ProjSequence& s, std::size_t k, std::size_t last) {
    BandProjection acc = BandProjection::identity(s.dim());
    for (std::size_t j = k; j <= last; ++j) acc = proj_meet(acc, proj_complement(s.term(j)));
    return acc;
}

DisjointCover disjointify(const ProjSequence& s, std::size_t k, std::size_t last) {
    if (k == 0 || k > last) {
        throw InputError("disjointify: need 1 <= k <= N, got k=" + std::to_string(k) + " N=" + std::to_string(last));
    }
    DisjointCover cover;
    BandProjection outside = BandProjection::identity(s.dim());  // prod_{j=k}^{n-1} (I - P_j)
    for (std::size_t n = k; n <= last; ++n) {
        cover.pieces.push_back(proj_meet(s.term(n), outside));
        outside = proj_meet(outside, proj_complement(s.term(n)));
    }

    BandProjection join = BandProjection::zero(s.dim());
    for (std::size_t a = 0; a < cover.pieces.size(); ++a) {
        for (std::size_t b = a + 1; b < cover.pieces.size(); ++b) {
            if (!proj_meet(cover.pieces[a], cover.pieces[b]).is_zero()) {
                throw InvariantViolation("disjointify: pieces " + std::to_string(k + a) + " and " +
                                         std::to_string(k + b) + " overlap");
            }
        }
        join = proj_join(join, cover.pieces[a]);
    }
    const BandProjection direct = finite_sup(s, k, last);
    if (join != direct) {
        throw InvariantViolation("disjointify: join " + to_string(join) + " differs from sup " + to_string(direct));
    }
    return cover;
}

ProjSequence successor_drop_sequence(const ProjSequence& s) {
    return derive_sequence(s, [&s](std::size_t n) { return proj_meet(s.term(n), proj_complement(s.term(n + 1))); });
}

CheckResult limsup_identity_check(const ProjSequence& s) {
    const BandProjection sup = proj_limsup(s);
    const BandProjection inf = proj_liminf(s);
    if (!proj_leq(inf, sup)) {
        throw InvariantViolation("liminf " + to_string(inf) + " not below limsup " + to_string(sup));
    }
    // Carrier difference is the projection difference since inf <= sup.
    const BandProjection lhs = proj_meet(sup, proj_complement(inf));
    const BandProjection rhs = proj_limsup(successor_drop_sequence(s));
    CheckResult r{"identity33", {}};
    r.clauses.push_back(carrier_clause("limsup P_n - liminf P_n == limsup P_n(I-P_{n+1})", lhs, "==", rhs));
    return r;
}

CheckResult limsup_identity_bounds(const ProjSequence& s) {
    const BandProjection d = proj_limsup(successor_drop_sequence(s));
    CheckResult r{"identity33-bounds", {}};
    r.clauses.push_back(carrier_clause("limsup D <= limsup P_n", d, "<=", proj_limsup(s)));
    r.clauses.push_back(carrier_clause("limsup D <= I - liminf P_n", d, "<=", proj_complement(proj_liminf(s))));
    return r;
}

}  // namespace rbc
