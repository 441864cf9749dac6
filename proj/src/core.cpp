#include "rbc/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace rbc {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        std::ostringstream os;
        os << op << ": dimension mismatch (" << a << " vs " << b << ")";
        throw InputError(os.str());
    }
}

}  // namespace

void require_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw InputError("dimension must be in 1.." + std::to_string(kMaxDim) + ", got " + std::to_string(dim));
    }
}

BandProjection::BandProjection(std::size_t dim, std::uint64_t carrier) : dim_(dim), carrier_(carrier) {
    require_dim(dim);
    if ((carrier & ~full_mask(dim)) != 0) {
        throw InputError("carrier index out of range for dimension " + std::to_string(dim));
    }
}

BandProjection BandProjection::from_indices(std::size_t dim, std::span<const std::size_t> indices) {
    require_dim(dim);
    std::uint64_t bits = 0;
    for (std::size_t i : indices) {
        if (i >= dim) {
            throw InputError("carrier index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(dim));
        }
        bits |= std::uint64_t{1} << i;
    }
    return {dim, bits};
}

std::vector<std::size_t> BandProjection::indices() const {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(std::popcount(carrier_)));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string to_string(const BandProjection& p) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : p.indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

Element::Element(std::vector<Rational> coords) : coords_(std::move(coords)) { require_dim(coords_.size()); }

Element Element::zero(std::size_t dim) {
    require_dim(dim);
    return Element(std::vector<Rational>(dim, Rational(0)));
}

Element Element::unit(std::size_t dim) {
    require_dim(dim);
    return Element(std::vector<Rational>(dim, Rational(1)));
}

Element Element::indicator(const BandProjection& p) {
    std::vector<Rational> c(p.dim(), Rational(0));
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p.contains(i)) c[i] = 1;
    }
    return Element(std::move(c));
}

bool Element::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Element::is_positive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

std::string to_string(const Element& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (i != 0) out += ",";
        out += to_string(f[i]);
    }
    return out + ")";
}

Element operator+(const Element& f, const Element& g) {
    require_same_dim(f.dim(), g.dim(), "add");
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) c[i] = f[i] + g[i];
    return Element(std::move(c));
}

Element operator-(const Element& f, const Element& g) {
    require_same_dim(f.dim(), g.dim(), "subtract");
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) c[i] = f[i] - g[i];
    return Element(std::move(c));
}

Element operator*(const Rational& a, const Element& f) {
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) c[i] = a * f[i];
    return Element(std::move(c));
}

bool leq(const Element& f, const Element& g) {
    require_same_dim(f.dim(), g.dim(), "leq");
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (f[i] > g[i]) return false;
    }
    return true;
}

Element lattice_sup(const Element& f, const Element& g) {
    require_same_dim(f.dim(), g.dim(), "lattice_sup");
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) c[i] = f[i] < g[i] ? g[i] : f[i];
    return Element(std::move(c));
}

Element lattice_inf(const Element& f, const Element& g) {
    require_same_dim(f.dim(), g.dim(), "lattice_inf");
    std::vector<Rational> c(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) c[i] = g[i] < f[i] ? g[i] : f[i];
    return Element(std::move(c));
}

Element proj_apply(const BandProjection& p, const Element& f) {
    require_same_dim(p.dim(), f.dim(), "proj_apply");
    std::vector<Rational> c(f.dim(), Rational(0));
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (p.contains(i)) c[i] = f[i];
    }
    return Element(std::move(c));
}

BandProjection proj_meet(const BandProjection& p, const BandProjection& q) {
    require_same_dim(p.dim(), q.dim(), "proj_meet");
    return {p.dim(), p.carrier() & q.carrier()};
}

BandProjection proj_join(const BandProjection& p, const BandProjection& q) {
    require_same_dim(p.dim(), q.dim(), "proj_join");
    return {p.dim(), p.carrier() | q.carrier()};
}

BandProjection proj_complement(const BandProjection& p) { return {p.dim(), ~p.carrier() & full_mask(p.dim())}; }

bool proj_leq(const BandProjection& p, const BandProjection& q) {
    require_same_dim(p.dim(), q.dim(), "proj_leq");
    return (p.carrier() & ~q.carrier()) == 0;
}

BandProjection proj_chain_meet(std::span<const BandProjection> ps) {
    if (ps.empty()) {
        throw InputError("proj_chain_meet: empty list");
    }
    BandProjection acc = ps.front();
    for (const auto& p : ps.subspan(1)) acc = proj_meet(acc, p);
    return acc;
}

BandProjection proj_limsup(const ProjSequence& s) {
    std::uint64_t bits = 0;
    for (const auto& p : s.cycle()) bits |= p.carrier();
    return {s.dim(), bits};
}

BandProjection proj_liminf(const ProjSequence& s) {
    std::uint64_t bits = full_mask(s.dim());
    for (const auto& p : s.cycle()) bits &= p.carrier();
    return {s.dim(), bits};
}

Element elem_limsup(const ElemSequence& s) {
    Element acc = s.cycle().front();
    for (const auto& f : s.cycle()) acc = lattice_sup(acc, f);
    return acc;
}

Element elem_liminf(const ElemSequence& s) {
    Element acc = s.cycle().front();
    for (const auto& f : s.cycle()) acc = lattice_inf(acc, f);
    return acc;
}

const Element& ExtendedElement::value() const {
    if (!value_) {
        throw InputError("divergent series has no finite value");
    }
    return *value_;
}

std::string to_string(const ExtendedElement& x) { return x.is_divergent() ? "divergent" : to_string(x.value()); }

bool leq(const ExtendedElement& a, const ExtendedElement& b) {
    if (b.is_divergent()) return true;
    if (a.is_divergent()) return false;
    return leq(a.value(), b.value());
}

ExtendedElement operator+(const ExtendedElement& a, const ExtendedElement& b) {
    if (a.is_divergent() || b.is_divergent()) return ExtendedElement::divergent();
    return a.value() + b.value();
}

ExtendedElement positive_series_sum(const ElemSequence& s) {
    const auto check = [](const Element& f) {
        if (!f.is_positive()) {
            throw InputError("positive_series_sum: negative term " + to_string(f));
        }
    };
    for (const auto& f : s.prefix()) check(f);
    for (const auto& f : s.cycle()) check(f);

    const bool tail_vanishes = std::all_of(s.cycle().begin(), s.cycle().end(), [](const Element& f) { return f.is_zero(); });
    if (!tail_vanishes) return ExtendedElement::divergent();

    Element sum = Element::zero(s.dim());
    for (const auto& f : s.prefix()) sum = sum + f;
    return sum;
}

}  // namespace rbc
