#include "mukai/vectors.hpp"

#include "mukai/error.hpp"

namespace mukai {

PolarizedSurface::PolarizedSurface(long long h2, std::shared_ptr<const GramLattice> ns)
    : h2_(h2), ns_(std::move(ns)) {
    if (h2_ < 2 || h2_ % 2 != 0)
        throw DomainError(errkind::invalid_argument, "H^2 must be a positive even integer >= 2");
    if (ns_ && ns_->h_square() != h2_)
        throw DomainError(errkind::invalid_lattice,
                          "lattice h^2 = " + std::to_string(ns_->h_square()) +
                              " disagrees with surface H^2 = " + std::to_string(h2_));
}

NumDivisorClass NumDivisorClass::pure_h(Rational c) {
    NumDivisorClass d;
    d.kind_ = Kind::pure_h;
    d.c_ = std::move(c);
    return d;
}

NumDivisorClass NumDivisorClass::h_plus_ortho(Rational c, Rational omega_sq) {
    if (sgn(omega_sq) > 0)
        throw DomainError(errkind::invalid_argument,
                          "Omega^2 must be <= 0 (negative definite on H-perp)");
    NumDivisorClass d;
    d.kind_ = Kind::h_plus_ortho;
    d.c_ = std::move(c);
    d.omega_sq_ = std::move(omega_sq);
    if (sgn(d.omega_sq_) != 0) {
        d.tag_ = std::make_shared<const OrthoTag>(OrthoTag{d.omega_sq_});
        d.tag_scale_ = 1;
    }
    return d;
}

NumDivisorClass NumDivisorClass::lattice_coords(std::shared_ptr<const GramLattice> lattice,
                                                std::vector<long long> coords) {
    if (!lattice) throw DomainError(errkind::invalid_lattice, "null lattice");
    if (static_cast<int>(coords.size()) != lattice->rank())
        throw DomainError(errkind::dimension_mismatch, "coords length != lattice rank");
    NumDivisorClass d;
    d.kind_ = Kind::lattice_coords;
    d.lattice_ = std::move(lattice);
    d.coords_ = std::move(coords);
    return d;
}

namespace {

void check_lattice_context(const NumDivisorClass& d, const PolarizedSurface& surface) {
    if (surface.ns() && surface.ns().get() != d.lattice().get())
        throw DomainError(errkind::invalid_lattice, "class lives on a different lattice");
    if (d.lattice()->h_square() != surface.h2())
        throw DomainError(errkind::invalid_lattice, "lattice h^2 disagrees with surface H^2");
}

} // namespace

Rational NumDivisorClass::h_degree(const PolarizedSurface& surface) const {
    switch (kind_) {
    case Kind::pure_h:
    case Kind::h_plus_ortho: return c_ * rat(surface.h2());
    case Kind::lattice_coords:
        check_lattice_context(*this, surface);
        return Rational(static_cast<long>(lattice_->h_degree(coords_)));
    }
    throw DomainError(errkind::invalid_argument, "bad kind");
}

Rational NumDivisorClass::self_int(const PolarizedSurface& surface) const {
    switch (kind_) {
    case Kind::pure_h: return c_ * c_ * rat(surface.h2());
    case Kind::h_plus_ortho: return c_ * c_ * rat(surface.h2()) + omega_sq_;
    case Kind::lattice_coords:
        check_lattice_context(*this, surface);
        return Rational(static_cast<long>(lattice_->square(coords_)));
    }
    throw DomainError(errkind::invalid_argument, "bad kind");
}

NumDivisorClass NumDivisorClass::complement_in(const Rational& m) const {
    NumDivisorClass d;
    switch (kind_) {
    case Kind::pure_h:
        return pure_h(m - c_);
    case Kind::h_plus_ortho:
        d.kind_ = Kind::h_plus_ortho;
        d.c_ = m - c_;
        d.omega_sq_ = omega_sq_;
        d.tag_ = tag_;
        d.tag_scale_ = -tag_scale_;
        return d;
    case Kind::lattice_coords: {
        if (!is_integer(m))
            throw DomainError(errkind::non_integral_input,
                              "lattice complement needs an integral H-multiple");
        const long long mi = to_integer(m);
        std::vector<long long> x(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i)
            x[i] = mi * lattice_->h()[i] - coords_[i];
        return lattice_coords(lattice_, std::move(x));
    }
    }
    throw DomainError(errkind::invalid_argument, "bad kind");
}

NumDivisorClass NumDivisorClass::plus_h_multiple(const Rational& t) const {
    NumDivisorClass d = *this;
    switch (kind_) {
    case Kind::pure_h:
    case Kind::h_plus_ortho:
        d.c_ = c_ + t;
        return d;
    case Kind::lattice_coords: {
        if (!is_integer(t))
            throw DomainError(errkind::non_integral_input,
                              "lattice translate needs an integral H-multiple");
        const long long ti = to_integer(t);
        for (std::size_t i = 0; i < d.coords_.size(); ++i) d.coords_[i] += ti * lattice_->h()[i];
        return d;
    }
    }
    throw DomainError(errkind::invalid_argument, "bad kind");
}

bool NumDivisorClass::operator==(const NumDivisorClass& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case Kind::pure_h: return c_ == other.c_;
    case Kind::h_plus_ortho:
        return c_ == other.c_ && omega_sq_ == other.omega_sq_ && tag_ == other.tag_ &&
               tag_scale_ == other.tag_scale_;
    case Kind::lattice_coords: return lattice_ == other.lattice_ && coords_ == other.coords_;
    }
    return false;
}

namespace {

// Is the lattice class an exact rational multiple of h? Returns the multiple.
bool h_multiple_of(const NumDivisorClass& d, Rational& t_out) {
    const auto& h = d.lattice()->h();
    const auto& x = d.coords();
    int pivot = -1;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) return false;
    Rational t = make_rational(x[static_cast<std::size_t>(pivot)], h[static_cast<std::size_t>(pivot)]);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (Rational(static_cast<long>(x[i])) != t * static_cast<long>(h[i])) return false;
    t_out = t;
    return true;
}

} // namespace

Rational NumDivisorClass::product(const NumDivisorClass& a, const NumDivisorClass& b,
                                  const PolarizedSurface& surface) {
    using K = Kind;
    // Self products are handled by self_int; this is the mixed case.
    if (a.kind_ == K::pure_h || (a.kind_ == K::h_plus_ortho && sgn(a.omega_sq_) == 0))
        return a.c_ * b.h_degree(surface);
    if (b.kind_ == K::pure_h || (b.kind_ == K::h_plus_ortho && sgn(b.omega_sq_) == 0))
        return b.c_ * a.h_degree(surface);
    if (a.kind_ == K::lattice_coords && b.kind_ == K::lattice_coords) {
        if (a.lattice_.get() != b.lattice_.get())
            throw DomainError(errkind::undetermined_pairing,
                              "lattice classes over different lattices");
        check_lattice_context(a, surface);
        return Rational(static_cast<long>(a.lattice_->bilinear(a.coords_, b.coords_)));
    }
    if (a.kind_ == K::h_plus_ortho && b.kind_ == K::h_plus_ortho) {
        if (a.tag_ && a.tag_ == b.tag_) {
            // Omega_a = s_a * base, Omega_b = s_b * base with known base square
            return a.c_ * b.c_ * rat(surface.h2()) + a.tag_scale_ * b.tag_scale_ * a.tag_->base_sq;
        }
        throw DomainError(errkind::undetermined_pairing,
                          "both classes carry unknown orthogonal parts");
    }
    // h_plus_ortho (nonzero Omega) against lattice coords: determined only if
    // the lattice class is a rational multiple of H.
    const NumDivisorClass& latc = (a.kind_ == K::lattice_coords) ? a : b;
    const NumDivisorClass& orth = (a.kind_ == K::lattice_coords) ? b : a;
    check_lattice_context(latc, surface);
    Rational t;
    if (h_multiple_of(latc, t)) return orth.c_ * t * rat(surface.h2());
    throw DomainError(errkind::undetermined_pairing,
                      "orthogonal part against a general lattice class");
}

MukaiVector structure_sheaf_vector() {
    return MukaiVector{1, NumDivisorClass::pure_h(Rational(0)), Rational(1)};
}

Rational pairing(const MukaiVector& v, const MukaiVector& w, const PolarizedSurface& surface) {
    Rational dd = (&v == &w || v.delta == w.delta)
                      ? v.delta.self_int(surface)
                      : NumDivisorClass::product(v.delta, w.delta, surface);
    return dd - Rational(static_cast<long>(v.r)) * w.s - Rational(static_cast<long>(w.r)) * v.s;
}

Rational square(const MukaiVector& v, const PolarizedSurface& surface) {
    return v.delta.self_int(surface) - 2 * Rational(static_cast<long>(v.r)) * v.s;
}

Rational chi(const MukaiVector& v) { return Rational(static_cast<long>(v.r)) + v.s; }

MukaiVector twist_h(const MukaiVector& v, long long m, const PolarizedSurface& surface) {
    const Rational mr(static_cast<long>(m));
    const Rational d = v.delta.h_degree(surface);
    MukaiVector out;
    out.r = v.r;
    out.delta = v.delta.plus_h_multiple(mr * static_cast<long>(v.r));
    out.s = v.s + mr * d + rat(v.r) * mr * mr * rat(surface.h2()) / 2;
    return out;
}

MukaiVector shift(const MukaiVector& v) {
    MukaiVector out;
    out.r = -v.r;
    out.s = -v.s;
    switch (v.delta.kind()) {
    case NumDivisorClass::Kind::pure_h:
    case NumDivisorClass::Kind::h_plus_ortho:
        out.delta = v.delta.complement_in(Rational(0)); // -Delta, sharing the tag
        break;
    case NumDivisorClass::Kind::lattice_coords: {
        std::vector<long long> x(v.delta.coords().size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = -v.delta.coords()[i];
        out.delta = NumDivisorClass::lattice_coords(v.delta.lattice(), std::move(x));
        break;
    }
    }
    return out;
}

Rational jh_square_lower_bound(long long n) {
    if (n < 1) throw DomainError(errkind::invalid_argument, "n must be >= 1");
    return Rational(static_cast<long>(-2 * n * n));
}

bool satisfies_jh_bound(const MukaiVector& v, long long n, const PolarizedSurface& surface) {
    return square(v, surface) >= jh_square_lower_bound(n);
}

namespace {

// Extract c with Delta = cH, else throw NonPureClass.
Rational pure_coefficient(const NumDivisorClass& d, const PolarizedSurface& surface) {
    switch (d.kind()) {
    case NumDivisorClass::Kind::pure_h: return d.c();
    case NumDivisorClass::Kind::h_plus_ortho:
        if (sgn(d.omega_sq()) == 0) return d.c();
        throw DomainError(errkind::non_pure_class, "class has a nonzero orthogonal part");
    case NumDivisorClass::Kind::lattice_coords: {
        Rational deg = d.h_degree(surface);
        Rational c = deg / rat(surface.h2());
        if (d.self_int(surface) == c * c * rat(surface.h2())) return c;
        throw DomainError(errkind::non_pure_class, "lattice class is not a multiple of H");
    }
    }
    throw DomainError(errkind::invalid_argument, "bad kind");
}

} // namespace

H0Bound h0_upper_bound(const MukaiVector& v, const PolarizedSurface& surface,
                       H0BoundVersion version) {
    const Rational c = pure_coefficient(v.delta, surface);
    const Rational rs = Rational(static_cast<long>(v.r)) - v.s;
    const long long mult = (version == H0BoundVersion::proof) ? 2 * surface.h2() + 4
                                                              : surface.h2() + 4;
    H0Bound b;
    b.chi_half = chi(v) / 2;
    b.radicand = rs * rs + c * c * static_cast<long>(mult);
    return b;
}

long long h0_max(const MukaiVector& v, const PolarizedSurface& surface, H0BoundVersion version) {
    const H0Bound b = h0_upper_bound(v, surface, version);
    // greatest n with n <= chi/2 + sqrt(R)/2, i.e. 2n - chi <= sqrt(R)
    const Rational chi_v = 2 * b.chi_half;
    long long n = floor_to_int(b.chi_half); // sqrt term >= 0, so this n always qualifies
    while (cmp_rational_sqrt(Rational(2) * static_cast<long>(n + 1) - chi_v, b.radicand) <= 0)
        ++n;
    return n < 0 ? 0 : n;
}

} // namespace mukai
