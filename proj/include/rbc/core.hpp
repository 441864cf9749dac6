#pragma once

// Finite-dimensional model of a Dedekind complete Riesz space: E = Q^n with
// the coordinatewise order, band projections as coordinate masks, and
// eventually periodic sequences with their order limits.

#include "rbc/errors.hpp"
#include "rbc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rbc {

// Upper bound on the model dimension; carriers are 64-bit masks.
inline constexpr std::size_t kMaxDim = 64;

void require_dim(std::size_t dim);

inline std::uint64_t full_mask(std::size_t dim) {
    return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

// Band projection onto the coordinates in its carrier.
class BandProjection {
public:
    BandProjection(std::size_t dim, std::uint64_t carrier);

    static BandProjection from_indices(std::size_t dim, std::span<const std::size_t> indices);
    static BandProjection from_indices(std::size_t dim, std::initializer_list<std::size_t> indices) {
        return from_indices(dim, std::span<const std::size_t>(indices.begin(), indices.size()));
    }
    static BandProjection zero(std::size_t dim) { return {dim, 0}; }
    static BandProjection identity(std::size_t dim) { return {dim, full_mask(dim)}; }

    std::size_t dim() const { return dim_; }
    std::uint64_t carrier() const { return carrier_; }
    bool contains(std::size_t i) const { return i < dim_ && ((carrier_ >> i) & 1U) != 0; }
    bool is_zero() const { return carrier_ == 0; }
    std::vector<std::size_t> indices() const;

    friend bool operator==(const BandProjection&, const BandProjection&) = default;

private:
    std::size_t dim_;
    std::uint64_t carrier_;
};

// "{0,2}" style rendering of the carrier.
std::string to_string(const BandProjection& p);

class Element {
public:
    explicit Element(std::vector<Rational> coords);

    static Element zero(std::size_t dim);
    // The weak order unit e = (1, ..., 1).
    static Element unit(std::size_t dim);
    // P e, the indicator of P's carrier.
    static Element indicator(const BandProjection& p);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const;
    bool is_positive() const;  // every coordinate >= 0

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<Rational> coords_;
};

std::string to_string(const Element& f);

Element operator+(const Element& f, const Element& g);
Element operator-(const Element& f, const Element& g);
Element operator*(const Rational& a, const Element& f);

// Coordinatewise partial order.
bool leq(const Element& f, const Element& g);

Element lattice_sup(const Element& f, const Element& g);
Element lattice_inf(const Element& f, const Element& g);

Element proj_apply(const BandProjection& p, const Element& f);

BandProjection proj_meet(const BandProjection& p, const BandProjection& q);
BandProjection proj_join(const BandProjection& p, const BandProjection& q);
BandProjection proj_complement(const BandProjection& p);
bool proj_leq(const BandProjection& p, const BandProjection& q);

// Infimum of a nonempty finite family; equals the composition p_1 p_2 ... p_k.
BandProjection proj_chain_meet(std::span<const BandProjection> ps);

// Infinite sequence given by a finite prefix followed by a repeating cycle.
// Terms are indexed from 1.
template <class T>
class EventuallyPeriodic {
public:
    EventuallyPeriodic(std::vector<T> prefix, std::vector<T> cycle)
        : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
        if (cycle_.empty()) {
            throw InputError("sequence cycle must be nonempty");
        }
        dim_ = cycle_.front().dim();
        for (const auto& t : prefix_) check_dim(t);
        for (const auto& t : cycle_) check_dim(t);
    }

    std::size_t dim() const { return dim_; }
    const std::vector<T>& prefix() const { return prefix_; }
    const std::vector<T>& cycle() const { return cycle_; }

    // k >= 1.
    const T& term(std::size_t k) const {
        if (k == 0) {
            throw InputError("sequence index must be >= 1");
        }
        if (k <= prefix_.size()) {
            return prefix_[k - 1];
        }
        return cycle_[(k - prefix_.size() - 1) % cycle_.size()];
    }

    // Every index at or beyond this one lies in the periodic part.
    std::size_t periodic_from() const { return prefix_.size() + 1; }

    friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;

private:
    void check_dim(const T& t) const {
        if (t.dim() != dim_) {
            throw InputError("sequence entries must share one dimension");
        }
    }

    std::size_t dim_ = 0;
    std::vector<T> prefix_;
    std::vector<T> cycle_;
};

using ProjSequence = EventuallyPeriodic<BandProjection>;
using ElemSequence = EventuallyPeriodic<Element>;

template <class T>
const T& seq_term(const EventuallyPeriodic<T>& s, std::size_t k) {
    return s.term(k);
}

// Builds n -> fn(n) for n >= 1 as an eventually periodic sequence. fn(n) may
// read any terms of index >= n of an underlying sequence whose periodic part
// starts after `prefix_len` terms with period `period`. The prefix is
// materialized with one extra seam term, so it has length prefix_len + 1.
template <class F>
auto derive_sequence(std::size_t prefix_len, std::size_t period, F&& fn)
    -> EventuallyPeriodic<decltype(fn(std::size_t{1}))> {
    using T = decltype(fn(std::size_t{1}));
    std::vector<T> prefix;
    std::vector<T> cycle;
    prefix.reserve(prefix_len + 1);
    cycle.reserve(period);
    for (std::size_t n = 1; n <= prefix_len + 1; ++n) prefix.push_back(fn(n));
    for (std::size_t n = prefix_len + 2; n <= prefix_len + 1 + period; ++n) cycle.push_back(fn(n));
    return {std::move(prefix), std::move(cycle)};
}

template <class S, class F>
auto derive_sequence(const S& s, F&& fn) {
    return derive_sequence(s.prefix().size(), s.cycle().size(), std::forward<F>(fn));
}

// Termwise image; the result keeps the prefix/cycle split of s.
template <class T, class F>
auto map_terms(const EventuallyPeriodic<T>& s, F&& fn)
    -> EventuallyPeriodic<decltype(fn(s.term(1)))> {
    using U = decltype(fn(s.term(1)));
    std::vector<U> prefix;
    std::vector<U> cycle;
    for (const auto& t : s.prefix()) prefix.push_back(fn(t));
    for (const auto& t : s.cycle()) cycle.push_back(fn(t));
    return {std::move(prefix), std::move(cycle)};
}

// Order limits are tail-determined: the union / intersection over one cycle.
BandProjection proj_limsup(const ProjSequence& s);
BandProjection proj_liminf(const ProjSequence& s);

Element elem_limsup(const ElemSequence& s);
Element elem_liminf(const ElemSequence& s);

// Value of a positive series: finite or divergent.
class ExtendedElement {
public:
    ExtendedElement(Element value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    static ExtendedElement divergent() { return ExtendedElement(); }

    bool is_divergent() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    // Throws InputError when divergent.
    const Element& value() const;

    friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;

private:
    ExtendedElement() = default;
    std::optional<Element> value_;
};

std::string to_string(const ExtendedElement& x);

// a <= b with divergent as top. A divergent a is only below a divergent b.
bool leq(const ExtendedElement& a, const ExtendedElement& b);

ExtendedElement operator+(const ExtendedElement& a, const ExtendedElement& b);

// Exact sum of a series with nonnegative terms. Converges iff every cycle
// entry is zero; otherwise some coordinate of the partial sums is unbounded.
ExtendedElement positive_series_sum(const ElemSequence& s);

}  // namespace rbc
