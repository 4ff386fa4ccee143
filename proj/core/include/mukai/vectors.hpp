#pragma once

#include "mukai/nslattice.hpp"
#include "mukai/rational.hpp"

#include <memory>
#include <vector>

namespace mukai {

// H^2 plus an optional NS Gram lattice; the context object for everything.
class PolarizedSurface {
public:
    explicit PolarizedSurface(long long h2, std::shared_ptr<const GramLattice> ns = nullptr);

    long long h2() const { return h2_; }
    const std::shared_ptr<const GramLattice>& ns() const { return ns_; }

private:
    long long h2_;
    std::shared_ptr<const GramLattice> ns_;
};

// Identity tag for an H-orthogonal class known only through its square.
// Classes built by complement_in share the tag of the class they complement,
// which is what makes pairings like <v(A), v(H - A)> determined.
struct OrthoTag {
    Rational base_sq;
};

// A divisor class known either as a rational multiple of H, as cH + Omega
// with Omega orthogonal to H of known square, or through full lattice
// coordinates.
class NumDivisorClass {
public:
    enum class Kind { pure_h, h_plus_ortho, lattice_coords };

    NumDivisorClass() = default; // the zero class, pure_h(0)

    static NumDivisorClass pure_h(Rational c);
    // omega_sq <= 0 (the pairing is negative definite on H-perp).
    static NumDivisorClass h_plus_ortho(Rational c, Rational omega_sq);
    static NumDivisorClass lattice_coords(std::shared_ptr<const GramLattice> lattice,
                                          std::vector<long long> coords);

    Kind kind() const { return kind_; }

    Rational h_degree(const PolarizedSurface& surface) const; // Delta . H
    Rational self_int(const PolarizedSurface& surface) const; // Delta^2

    // m*H - Delta. For h_plus_ortho the result carries the negated orthogonal
    // part of *this, so cross-pairings against *this stay determined.
    NumDivisorClass complement_in(const Rational& m) const;

    // Delta + t*H (t integral for lattice classes).
    NumDivisorClass plus_h_multiple(const Rational& t) const;

    const Rational& c() const { return c_; }                // pure_h / h_plus_ortho
    const Rational& omega_sq() const { return omega_sq_; }  // h_plus_ortho
    const std::shared_ptr<const GramLattice>& lattice() const { return lattice_; }
    const std::vector<long long>& coords() const { return coords_; }

    // Delta1 . Delta2 when determined; throws DomainError(UndeterminedPairing)
    // when both orthogonal parts are unknown and unrelated.
    static Rational product(const NumDivisorClass& a, const NumDivisorClass& b,
                            const PolarizedSurface& surface);

    bool operator==(const NumDivisorClass& other) const;

private:
    Kind kind_ = Kind::pure_h;
    Rational c_{0};
    Rational omega_sq_{0};
    std::shared_ptr<const OrthoTag> tag_; // h_plus_ortho with omega_sq != 0
    Rational tag_scale_{0};               // Omega = tag_scale * (tagged base class)
    std::shared_ptr<const GramLattice> lattice_;
    std::vector<long long> coords_;
};

// Mukai vector (r, Delta, s). r may be negative (shifted objects); s may be
// rational in intermediates.
struct MukaiVector {
    long long r = 0;
    NumDivisorClass delta;
    Rational s{0};

    bool operator==(const MukaiVector& other) const {
        return r == other.r && s == other.s && delta == other.delta;
    }
};

MukaiVector structure_sheaf_vector(); // v(O_X) = (1, 0, 1)

// <v, w> = Delta1.Delta2 - r1 s2 - r2 s1
Rational pairing(const MukaiVector& v, const MukaiVector& w, const PolarizedSurface& surface);

// v^2 = Delta^2 - 2 r s (self pairing is always determined)
Rational square(const MukaiVector& v, const PolarizedSurface& surface);

// chi = r + s = -<v(O_X), v>
Rational chi(const MukaiVector& v);

// Exponential twist by m*H: (r, Delta + m r H, s + m Delta.H + r m^2 H^2/2).
MukaiVector twist_h(const MukaiVector& v, long long m, const PolarizedSurface& surface);

// v(E[1]) = -v(E)
MukaiVector shift(const MukaiVector& v);

// Lower bound -2n^2 for the square of a semistable object with a length-n
// Jordan-Hoelder filtration.
Rational jh_square_lower_bound(long long n);
bool satisfies_jh_bound(const MukaiVector& v, long long n, const PolarizedSurface& surface);

enum class H0BoundVersion {
    proof,     // radicand (r-s)^2 + c^2 (2H^2+4); reproduces the s+2 section counts
    statement, // radicand (r-s)^2 + c^2 (H^2+4); alternate form kept for comparison
};

struct H0Bound {
    Rational chi_half;
    Rational radicand; // bound = chi_half + sqrt(radicand)/2
};

// Global-section bound for v = (r, cH, s). Throws DomainError(NonPureClass)
// if Delta is not a rational multiple of H.
H0Bound h0_upper_bound(const MukaiVector& v, const PolarizedSurface& surface,
                       H0BoundVersion version = H0BoundVersion::proof);

// Greatest integer <= the bound, clamped at 0; decided by exact
// rational-vs-sqrt comparison.
long long h0_max(const MukaiVector& v, const PolarizedSurface& surface,
                 H0BoundVersion version = H0BoundVersion::proof);

} // namespace mukai
