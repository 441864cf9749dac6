#include "doctest.h"

#include "rbc/core.hpp"
#include "rbc/projection_calculus.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace rbc;
using namespace rbc::test;

TEST_CASE("rationals parse to canonical form") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("+2/3") == Rational(2, 3));
    CHECK_THROWS_WITH_AS(parse_rational("1/0"), doctest::Contains("zero denominator"), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(parse_rational("a/2"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("lattice operations are coordinatewise") {
    CHECK(lattice_sup(elem({1, 3}), elem({2, 2})) == elem({2, 3}));
    CHECK(lattice_inf(elem({1, 3}), elem({2, 2})) == elem({1, 2}));
    const Element f = elem_q({Rational(1, 3), Rational(-2, 5)});
    CHECK(lattice_sup(f, f) == f);
    CHECK(lattice_inf(f, f) == f);
    CHECK_THROWS_AS(lattice_sup(elem({1}), elem({1, 2})), InputError);
    CHECK_THROWS_AS(lattice_inf(elem({1}), elem({1, 2})), InputError);
}

TEST_CASE("elements reject bad dimensions") {
    CHECK_THROWS_AS(Element(std::vector<Rational>{}), InputError);
    CHECK_THROWS_AS(Element::zero(kMaxDim + 1), InputError);
    CHECK_THROWS_AS(BandProjection(2, 0b100), InputError);
    CHECK_THROWS_AS(proj(2, {2}), InputError);
    CHECK_NOTHROW(BandProjection(64, ~std::uint64_t{0}));
}

TEST_CASE("proj_apply masks coordinates") {
    CHECK(proj_apply(proj(2, {0}), elem({3, 5})) == elem({3, 0}));
    const Element f = elem({7, -1, 4});
    CHECK(proj_apply(BandProjection::identity(3), f) == f);
    CHECK(proj_apply(BandProjection::zero(3), f) == Element::zero(3));
    CHECK_THROWS_AS(proj_apply(proj(2, {0}), f), InputError);
}

TEST_CASE("projection algebra") {
    CHECK(proj_meet(proj(3, {0, 1}), proj(3, {1, 2})) == proj(3, {1}));
    CHECK(proj_complement(proj(2, {0})) == proj(2, {1}));
    CHECK(proj_join(BandProjection::zero(2), BandProjection::zero(2)) == BandProjection::zero(2));
    CHECK(proj_join(proj(3, {0}), proj(3, {2})) == proj(3, {0, 2}));
    CHECK(proj_leq(proj(3, {1}), proj(3, {0, 1})));
    CHECK_FALSE(proj_leq(proj(3, {0, 1}), proj(3, {1})));
    CHECK_THROWS_AS(proj_meet(proj(2, {0}), proj(3, {0})), InputError);
    CHECK_THROWS_AS(proj_join(proj(2, {0}), proj(3, {0})), InputError);
    CHECK_THROWS_AS(proj_leq(proj(2, {0}), proj(3, {0})), InputError);
}

TEST_CASE("proj_chain_meet") {
    const std::vector<BandProjection> three{proj(3, {0, 1}), proj(3, {1, 2}), proj(3, {1})};
    CHECK(proj_chain_meet(three) == proj(3, {1}));
    const std::vector<BandProjection> one{proj(3, {0, 2})};
    CHECK(proj_chain_meet(one) == proj(3, {0, 2}));
    const std::vector<BandProjection> disjoint{proj(2, {0}), proj(2, {1})};
    CHECK(proj_chain_meet(disjoint).is_zero());
    CHECK_THROWS_AS(proj_chain_meet({}), InputError);
}

TEST_CASE("seq_term follows prefix then cycle") {
    const ProjSequence s({proj(3, {0})}, {proj(3, {1}), proj(3, {2})});
    CHECK(seq_term(s, 1) == proj(3, {0}));
    CHECK(seq_term(s, 2) == proj(3, {1}));
    CHECK(seq_term(s, 3) == proj(3, {2}));
    CHECK(seq_term(s, 4) == proj(3, {1}));
    const ProjSequence constant({}, {proj(2, {1})});
    for (std::size_t k = 1; k < 10; ++k) CHECK(seq_term(constant, k) == proj(2, {1}));
    CHECK_THROWS_AS(seq_term(s, 0), InputError);
    CHECK_THROWS_AS(ProjSequence({proj(2, {0})}, {}), InputError);
    CHECK_THROWS_AS(ProjSequence({proj(2, {0})}, {proj(3, {0})}), InputError);
}

TEST_CASE("proj_limsup and proj_liminf") {
    const ProjSequence alt({}, {proj(2, {0}), proj(2, {1})});
    CHECK(proj_limsup(alt) == proj(2, {0, 1}));
    CHECK(proj_liminf(alt).is_zero());
    // Independent oracle agrees.
    CHECK(to_set(proj_limsup(alt)) == brute_limsup(alt));
    CHECK(to_set(proj_liminf(alt)) == brute_liminf(alt));

    const BandProjection a = proj(3, {0, 2});
    const ProjSequence constant({proj(3, {1})}, {a});
    CHECK(proj_limsup(constant) == a);
    CHECK(proj_liminf(constant) == a);

    const ProjSequence vanishing({proj(2, {0, 1})}, {BandProjection::zero(2)});
    CHECK(proj_limsup(vanishing).is_zero());
}

TEST_CASE("elem_limsup and elem_liminf") {
    const ElemSequence alt({}, {elem({1, 0}), elem({0, 1})});
    CHECK(elem_limsup(alt) == elem({1, 1}));
    CHECK(elem_liminf(alt) == elem({0, 0}));
    const ElemSequence constant({elem({9, 9})}, {elem({2, -1})});
    CHECK(elem_limsup(constant) == elem({2, -1}));
    CHECK(elem_liminf(constant) == elem({2, -1}));
    const ElemSequence zero({elem({5, 5}), elem({-3, 1})}, {elem({0, 0})});
    CHECK(elem_limsup(zero) == elem({0, 0}));
    CHECK(elem_liminf(zero) == elem({0, 0}));
}

TEST_CASE("positive_series_sum") {
    const ElemSequence finite({elem({1, 0}), elem({0, 2})}, {elem({0, 0})});
    const ExtendedElement s = positive_series_sum(finite);
    REQUIRE(s.is_finite());
    CHECK(s.value() == elem({1, 2}));

    CHECK(positive_series_sum(ElemSequence({}, {elem({1, 0})})).is_divergent());
    CHECK(positive_series_sum(ElemSequence({}, {elem({0, 0})})) == ExtendedElement(elem({0, 0})));
    CHECK_THROWS_AS(positive_series_sum(ElemSequence({elem({-1, 0})}, {elem({0, 0})})), InputError);
    CHECK_THROWS_AS(ExtendedElement::divergent().value(), InputError);
}

TEST_CASE("extended order treats divergent as top") {
    const ExtendedElement inf = ExtendedElement::divergent();
    const ExtendedElement one = elem({1});
    CHECK(leq(one, inf));
    CHECK(leq(inf, inf));
    CHECK_FALSE(leq(inf, one));
    CHECK((one + inf).is_divergent());
    CHECK((one + one) == ExtendedElement(elem({2})));
}

TEST_CASE("derive_sequence keeps a one-term seam") {
    const ProjSequence s({proj(3, {0}), proj(3, {0, 1})}, {proj(3, {2}), proj(3, {1, 2}), BandProjection::zero(3)});
    const ProjSequence d = successor_drop_sequence(s);
    CHECK(d.prefix().size() == s.prefix().size() + 1);
    CHECK(d.cycle().size() == s.cycle().size());
    for (std::size_t n = 1; n <= 20; ++n) {
        const IndexSet expected = set_minus(term_set(s, n), term_set(s, n + 1));
        CHECK(to_set(d.term(n)) == expected);
    }
}

TEST_CASE("projection-infimum law: chain meet equals composition and set intersection") {
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.between(1, 12));
        const auto len = static_cast<std::size_t>(rng.between(1, 6));
        std::vector<BandProjection> ps;
        for (std::size_t i = 0; i < len; ++i) ps.emplace_back(dim, rng.next() & full_mask(dim));

        Element composed = Element::unit(dim);
        IndexSet inter = full_set(dim);
        for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
            composed = proj_apply(*it, composed);
            inter = set_intersection(inter, to_set(*it));
        }
        const BandProjection meet = proj_chain_meet(ps);
        REQUIRE(to_set(meet) == inter);
        REQUIRE(Element::indicator(meet) == composed);
    }
}

TEST_CASE("band projections are idempotent and complements partition the space") {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.between(1, 12));
        const BandProjection p(dim, rng.next() & full_mask(dim));
        std::vector<Rational> c(dim);
        for (auto& q : c) q = Rational(static_cast<long>(rng.below(11)) - 5, static_cast<unsigned long>(rng.between(1, 3)));
        for (auto& q : c) q.canonicalize();
        const Element f(std::move(c));
        REQUIRE(proj_apply(p, proj_apply(p, f)) == proj_apply(p, f));
        REQUIRE(proj_apply(p, f) + proj_apply(proj_complement(p), f) == f);
        REQUIRE(to_set(proj_complement(p)) == set_minus(full_set(dim), to_set(p)));
    }
}

TEST_CASE("disjoint-sum law") {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.between(1, 12));
        // Random pairwise disjoint carriers: assign coordinates to pieces or to nothing.
        const auto pieces = static_cast<std::size_t>(rng.between(1, 5));
        std::vector<std::vector<std::size_t>> owned(pieces);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto who = rng.below(pieces + 1);
            if (who < pieces) owned[who].push_back(i);
        }
        std::vector<Rational> c(dim);
        for (auto& q : c) q = Rational(static_cast<long>(rng.below(7)), 2UL);
        for (auto& q : c) q.canonicalize();
        const Element g(std::move(c));

        Element sum = Element::zero(dim);
        Element sup = Element::zero(dim);
        std::vector<Element> parts;
        for (const auto& idx : owned) parts.push_back(proj_apply(BandProjection::from_indices(dim, idx), g));
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = a + 1; b < parts.size(); ++b) REQUIRE(lattice_inf(parts[a], parts[b]).is_zero());
        }
        for (const auto& part : parts) {
            sum = sum + part;
            sup = lattice_sup(sup, part);
        }
        REQUIRE(sum == sup);
    }
}

TEST_CASE("order limits match the brute-force meet/join oracle (exhaustive small range)") {
    std::size_t seen = 0;
    for_each_sequence(2, 2, 3, [&](const ProjSequence& s) {
        ++seen;
        REQUIRE(to_set(proj_limsup(s)) == brute_limsup(s));
        REQUIRE(to_set(proj_liminf(s)) == brute_liminf(s));
        REQUIRE(proj_leq(proj_liminf(s), proj_limsup(s)));
    });
    CHECK(seen > 1000);
}

TEST_CASE("order limits match the brute-force oracle (random)") {
    Rng rng(23);
    for (int trial = 0; trial < 3000; ++trial) {
        const ProjSequence s = random_sequence(rng, 12, 8, 6);
        REQUIRE(to_set(proj_limsup(s)) == brute_limsup(s));
        REQUIRE(to_set(proj_liminf(s)) == brute_liminf(s));
        REQUIRE(proj_leq(proj_liminf(s), proj_limsup(s)));
    }
}

TEST_CASE("tail invariance under prefix extension and cycle rotation") {
    Rng rng(29);
    for (int trial = 0; trial < 2000; ++trial) {
        const ProjSequence s = random_sequence(rng, 10, 5, 6);
        std::vector<BandProjection> prefix = s.prefix();
        const auto extra = rng.between(1, 3);
        for (std::uint64_t i = 0; i < extra; ++i) {
            prefix.insert(prefix.begin(), BandProjection(s.dim(), rng.next() & full_mask(s.dim())));
        }
        std::vector<BandProjection> cycle = s.cycle();
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(rng.below(cycle.size())), cycle.end());
        const ProjSequence moved(prefix, cycle);
        REQUIRE(proj_limsup(moved) == proj_limsup(s));
        REQUIRE(proj_liminf(moved) == proj_liminf(s));
    }
}

TEST_CASE("convergence criterion: limsup == liminf iff the cycle is constant") {
    Rng rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.between(1, 4));
        const auto c = static_cast<std::size_t>(rng.between(1, 4));
        const bool force_constant = rng.coin();
        std::vector<Element> cycle;
        for (std::size_t i = 0; i < c; ++i) {
            if (force_constant && i > 0) {
                cycle.push_back(cycle.front());
                continue;
            }
            std::vector<Rational> v(dim);
            for (auto& q : v) q = static_cast<long>(rng.below(3));
            cycle.emplace_back(std::move(v));
        }
        const bool constant =
            std::all_of(cycle.begin(), cycle.end(), [&](const Element& x) { return x == cycle.front(); });
        const ElemSequence s({Element::unit(dim)}, cycle);
        REQUIRE((elem_limsup(s) == elem_liminf(s)) == constant);
        if (constant) REQUIRE(elem_limsup(s) == cycle.front());
    }
}
