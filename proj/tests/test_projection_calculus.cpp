#include "doctest.h"

#include "rbc/projection_calculus.hpp"
#include "test_support.hpp"

using namespace rbc;
using namespace rbc::test;

namespace {

struct SetDecomposition {
    IndexSet base;
    std::vector<IndexSet> parts;
};

SetDecomposition decompose_oracle(const ProjSequence& s, std::size_t n, std::size_t m) {
    SetDecomposition d;
    d.base = term_set(s, n);
    for (std::size_t k = n + 1; k <= n + m; ++k) d.base = set_intersection(d.base, term_set(s, k));
    for (std::size_t i = 1; i <= m; ++i) {
        IndexSet run = term_set(s, n);
        for (std::size_t k = 1; k <= i - 1; ++k) run = set_intersection(run, term_set(s, n + k));
        d.parts.push_back(set_minus(run, term_set(s, n + i)));
    }
    return d;
}

IndexSet sup_oracle(const ProjSequence& s, std::size_t k, std::size_t last) {
    IndexSet acc;
    for (std::size_t n = k; n <= last; ++n) acc = set_union(acc, term_set(s, n));
    return acc;
}

// limsup of term(n) \ term(n+1) by the meet/join definition.
IndexSet drop_limsup_oracle(const ProjSequence& s) {
    const std::size_t c = s.cycle().size();
    const std::size_t big_k = s.prefix().size() + 1 + 2 * c;
    IndexSet acc = full_set(s.dim());
    for (std::size_t k = 1; k <= big_k; ++k) {
        IndexSet tail;
        for (std::size_t n = k; n <= big_k + c; ++n) tail = set_union(tail, set_minus(term_set(s, n), term_set(s, n + 1)));
        acc = set_intersection(acc, tail);
    }
    return acc;
}

void check_all_laws(const ProjSequence& s) {
    const std::size_t horizon = s.prefix().size() + 2 * s.cycle().size();
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (std::size_t m = 1; m <= 5; ++m) {
            const Decomposition d = decompose(s, n, m);
            const SetDecomposition o = decompose_oracle(s, n, m);
            REQUIRE(to_set(d.base) == o.base);
            REQUIRE(d.parts.size() == m);
            IndexSet total = o.base;
            for (std::size_t i = 0; i < m; ++i) {
                REQUIRE(to_set(d.parts[i]) == o.parts[i]);
                REQUIRE(set_intersection(o.base, o.parts[i]).empty());
                for (std::size_t j = i + 1; j < m; ++j) REQUIRE(set_intersection(o.parts[i], o.parts[j]).empty());
                total = set_union(total, o.parts[i]);
            }
            REQUIRE(total == term_set(s, n));
        }
    }
    for (std::size_t k = 1; k <= horizon; ++k) {
        for (std::size_t last = k; last <= horizon; ++last) {
            const DisjointCover cover = disjointify(s, k, last);
            REQUIRE(cover.pieces.size() == last - k + 1);
            IndexSet join;
            for (const auto& piece : cover.pieces) join = set_union(join, to_set(piece));
            const IndexSet sup = sup_oracle(s, k, last);
            REQUIRE(join == sup);
            REQUIRE(to_set(complement_product(s, k, last)) == set_minus(full_set(s.dim()), sup));
        }
    }
    const CheckResult id = limsup_identity_check(s);
    REQUIRE(id.passed());
    REQUIRE(limsup_identity_bounds(s).passed());
    REQUIRE(set_minus(brute_limsup(s), brute_liminf(s)) == drop_limsup_oracle(s));
    REQUIRE(to_set(proj_limsup(successor_drop_sequence(s))) == drop_limsup_oracle(s));
}

}  // namespace

TEST_CASE("decompose examples") {
    const ProjSequence two({}, {proj(3, {0, 1}), proj(3, {1, 2})});
    const Decomposition d = decompose(two, 1, 1);
    CHECK(d.base == proj(3, {1}));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0] == proj(3, {0}));

    const BandProjection a = proj(4, {0, 3});
    const ProjSequence constant({}, {a});
    for (std::size_t m = 1; m <= 4; ++m) {
        const Decomposition c = decompose(constant, 2, m);
        CHECK(c.base == a);
        for (const auto& part : c.parts) CHECK(part.is_zero());
    }

    const ProjSequence three({proj(3, {0, 1}), proj(3, {1, 2}), proj(3, {2})}, {BandProjection::zero(3)});
    const Decomposition e = decompose(three, 1, 2);
    CHECK(e.base.is_zero());
    REQUIRE(e.parts.size() == 2);
    CHECK(e.parts[0] == proj(3, {0}));
    CHECK(e.parts[1] == proj(3, {1}));

    CHECK_THROWS_AS(decompose(three, 0, 1), InputError);
    CHECK_THROWS_AS(decompose(three, 1, 0), InputError);
}

TEST_CASE("disjointify examples") {
    const ProjSequence s({proj(2, {0}), proj(2, {0, 1})}, {BandProjection::zero(2)});
    const DisjointCover cover = disjointify(s, 1, 2);
    REQUIRE(cover.pieces.size() == 2);
    CHECK(cover.pieces[0] == proj(2, {0}));
    CHECK(cover.pieces[1] == proj(2, {1}));
    CHECK(finite_sup(s, 1, 2) == proj(2, {0, 1}));

    const DisjointCover single = disjointify(s, 2, 2);
    REQUIRE(single.pieces.size() == 1);
    CHECK(single.pieces[0] == s.term(2));
    CHECK(complement_product(s, 2, 1) == BandProjection::identity(2));

    const ProjSequence empty({}, {BandProjection::zero(3)});
    const DisjointCover none = disjointify(empty, 1, 4);
    for (const auto& piece : none.pieces) CHECK(piece.is_zero());
    CHECK(finite_sup(empty, 1, 4).is_zero());

    CHECK_THROWS_AS(disjointify(s, 0, 1), InputError);
    CHECK_THROWS_AS(disjointify(s, 3, 2), InputError);
}

TEST_CASE("limsup identity examples") {
    const ProjSequence alt({}, {proj(2, {0}), proj(2, {1})});
    const CheckResult r = limsup_identity_check(alt);
    CHECK(r.passed());
    CHECK(r.clauses[0].lhs == "{0,1}");
    CHECK(r.clauses[0].rhs == "{0,1}");

    const ProjSequence constant({proj(2, {1})}, {proj(2, {0})});
    const CheckResult c = limsup_identity_check(constant);
    CHECK(c.passed());
    CHECK(c.clauses[0].lhs == "{}");
    CHECK(c.clauses[0].rhs == "{}");

    const ProjSequence nested({}, {proj(2, {0, 1}), proj(2, {1})});
    const CheckResult n = limsup_identity_check(nested);
    CHECK(n.passed());
    CHECK(n.clauses[0].lhs == "{0}");
    CHECK(n.clauses[0].rhs == "{0}");
}

TEST_CASE("seam term of the derived sequence straddles prefix and cycle") {
    // term(2) is the last prefix entry, term(3) the first cycle entry.
    const ProjSequence s({proj(2, {1}), proj(2, {0, 1})}, {proj(2, {1}), proj(2, {0})});
    const ProjSequence d = successor_drop_sequence(s);
    CHECK(d.term(2) == proj(2, {0}));  // {0,1} \ {1}
    CHECK(d.term(3) == proj(2, {1}));  // {1} \ {0}
    CHECK(d.term(4) == proj(2, {0}));  // {0} \ {1}
    CHECK(d.term(5) == proj(2, {1}));
}

TEST_CASE("lemma and identity laws, exhaustive over dim<=2, prefix<=2, cycle<=2") {
    std::size_t count = 0;
    for_each_sequence(2, 2, 2, [&](const ProjSequence& s) {
        ++count;
        check_all_laws(s);
    });
    CHECK(count == (1 + 2 + 4) * (2 + 4) + (1 + 4 + 16) * (4 + 16));
}

TEST_CASE("lemma and identity laws, random over dim<=12, prefix<=8, cycle<=6") {
    Rng rng(53);
    for (int trial = 0; trial < 400; ++trial) check_all_laws(random_sequence(rng, 12, 8, 6));
}
