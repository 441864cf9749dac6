#pragma once

// Test-only oracles and generators. Oracles work on std::set carriers and
// explicit index loops so they share no code path with the bitmask library.

#include "rbc/borel_cantelli.hpp"
#include "rbc/condexp.hpp"
#include "rbc/core.hpp"
#include "rbc/rng.hpp"

#include <functional>
#include <set>
#include <vector>

namespace rbc::test {

using IndexSet = std::set<std::size_t>;

inline IndexSet to_set(const BandProjection& p) {
    IndexSet s;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p.contains(i)) s.insert(i);
    }
    return s;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    for (std::size_t i : a) {
        if (b.count(i) != 0) out.insert(i);
    }
    return out;
}

inline IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    for (std::size_t i : a) {
        if (b.count(i) == 0) out.insert(i);
    }
    return out;
}

inline IndexSet full_set(std::size_t dim) {
    IndexSet s;
    for (std::size_t i = 0; i < dim; ++i) s.insert(i);
    return s;
}

// Term n (1-based) read straight from the prefix/cycle vectors.
inline IndexSet term_set(const ProjSequence& s, std::size_t n) {
    const std::size_t p = s.prefix().size();
    return to_set(n <= p ? s.prefix()[n - 1] : s.cycle()[(n - p - 1) % s.cycle().size()]);
}

// limsup = meet_{k=1..K} join_{n=k..K+|cycle|} term(n), K = |prefix| + 2|cycle|.
inline IndexSet brute_limsup(const ProjSequence& s) {
    const std::size_t c = s.cycle().size();
    const std::size_t big_k = s.prefix().size() + 2 * c;
    IndexSet acc = full_set(s.dim());
    for (std::size_t k = 1; k <= big_k; ++k) {
        IndexSet tail;
        for (std::size_t n = k; n <= big_k + c; ++n) tail = set_union(tail, term_set(s, n));
        acc = set_intersection(acc, tail);
    }
    return acc;
}

// liminf = join_{k=1..K} meet_{n=k..K+|cycle|} term(n).
inline IndexSet brute_liminf(const ProjSequence& s) {
    const std::size_t c = s.cycle().size();
    const std::size_t big_k = s.prefix().size() + 2 * c;
    IndexSet acc;
    for (std::size_t k = 1; k <= big_k; ++k) {
        IndexSet tail = full_set(s.dim());
        for (std::size_t n = k; n <= big_k + c; ++n) tail = set_intersection(tail, term_set(s, n));
        acc = set_union(acc, tail);
    }
    return acc;
}

inline BandProjection from_set(std::size_t dim, const IndexSet& s) {
    std::vector<std::size_t> idx(s.begin(), s.end());
    return BandProjection::from_indices(dim, idx);
}

// All carriers of dimension dim.
inline std::vector<BandProjection> all_carriers(std::size_t dim) {
    std::vector<BandProjection> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) out.emplace_back(dim, bits);
    return out;
}

// All sequences of carriers of the given length.
inline void for_each_word(std::size_t dim, std::size_t len,
                          const std::function<void(const std::vector<BandProjection>&)>& fn) {
    const auto carriers = all_carriers(dim);
    std::vector<std::size_t> digits(len, 0);
    std::vector<BandProjection> word(len, carriers.front());
    while (true) {
        for (std::size_t i = 0; i < len; ++i) word[i] = carriers[digits[i]];
        fn(word);
        std::size_t i = 0;
        while (i < len && ++digits[i] == carriers.size()) digits[i++] = 0;
        if (i == len) return;
    }
}

// Every ProjSequence with dim <= max_dim, |prefix| <= max_prefix, 1 <= |cycle| <= max_cycle.
inline void for_each_sequence(std::size_t max_dim, std::size_t max_prefix, std::size_t max_cycle,
                              const std::function<void(const ProjSequence&)>& fn) {
    for (std::size_t dim = 1; dim <= max_dim; ++dim) {
        for (std::size_t p = 0; p <= max_prefix; ++p) {
            for (std::size_t c = 1; c <= max_cycle; ++c) {
                for_each_word(dim, p, [&](const std::vector<BandProjection>& prefix) {
                    for_each_word(dim, c, [&](const std::vector<BandProjection>& cycle) {
                        fn(ProjSequence(prefix, cycle));
                    });
                });
            }
        }
    }
}

inline ProjSequence random_sequence(Rng& rng, std::size_t max_dim, std::size_t max_prefix, std::size_t max_cycle) {
    const auto dim = static_cast<std::size_t>(rng.between(1, max_dim));
    const std::uint64_t mask = full_mask(dim);
    std::vector<BandProjection> prefix;
    std::vector<BandProjection> cycle;
    const auto p = rng.between(0, max_prefix);
    const auto c = rng.between(1, max_cycle);
    // Sparse carriers now and then so products and sums are not always trivial.
    const bool sparse = rng.coin();
    const auto draw = [&] { return sparse ? (rng.next() & rng.next() & mask) : (rng.next() & mask); };
    for (std::uint64_t i = 0; i < p; ++i) prefix.emplace_back(dim, draw());
    for (std::uint64_t i = 0; i < c; ++i) cycle.emplace_back(dim, draw());
    return {std::move(prefix), std::move(cycle)};
}

// Random partition (labels drawn then compacted) and random positive weights.
inline CondExpOp random_op(Rng& rng, std::size_t dim, bool one_block = false) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> label_of(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto raw = one_block ? 0 : static_cast<std::size_t>(rng.below(dim));
        if (label_of[raw] == dim) {
            label_of[raw] = blocks.size();
            blocks.emplace_back();
        }
        blocks[label_of[raw]].push_back(i);
    }
    std::vector<Rational> w(dim);
    Rational total = 0;
    for (auto& q : w) {
        q = static_cast<long>(rng.between(1, 9));
        total += q;
    }
    for (auto& q : w) q /= total;
    return {dim, std::move(blocks), std::move(w)};
}

inline Element random_element(Rng& rng, std::size_t dim, long lo, long hi) {
    std::vector<Rational> c(dim);
    for (auto& q : c) {
        q = Rational(lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))),
                     static_cast<unsigned long>(rng.between(1, 4)));
        q.canonicalize();
    }
    return Element(std::move(c));
}

inline Element elem(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return Element(std::move(c));
}

inline Element elem_q(std::initializer_list<Rational> xs) { return Element(std::vector<Rational>(xs)); }

inline BandProjection proj(std::size_t dim, std::initializer_list<std::size_t> idx) {
    return BandProjection::from_indices(dim, idx);
}

}  // namespace rbc::test
