#pragma once

#include "mukai/vectors.hpp"

#include <compare>

namespace mukai {

// A point sigma_{bH, aH} of the (b,a)-slice, a > 0.
struct StabilityPoint {
    Rational b;
    Rational a;
};

// Working validity proxy a^2 H^2 > 2. Exact on the vertical ray b = 0; used
// as a hypothesis elsewhere (the full spherical-class criterion is out of
// scope).
bool is_valid(const StabilityPoint& p, const PolarizedSurface& surface);

struct ChargeValue {
    Rational re;
    Rational im;
};

// Z_{bH,aH}(v): re = b d - s - r (b^2 - a^2) H^2 / 2, im = a (d - r b H^2),
// with d = Delta.H. Additive in v.
ChargeValue central_charge(const StabilityPoint& p, const MukaiVector& v,
                           const PolarizedSurface& surface);

// Ordering of phases in (0, 1]: the closed upper half-plane minus the
// non-negative real ray. Phase 1 is the negative real ray (maximal). Equality
// means real-proportional with positive ratio. Throws
// DomainError(PhaseUndefined) for 0, the positive real ray, or the lower
// half-plane.
std::strong_ordering phase_compare(const ChargeValue& z1, const ChargeValue& z2);

enum class SlopeKind { finite, plus_infinity, undefined };

struct SlopeValue {
    SlopeKind kind;
    Rational value; // meaningful only for finite

    bool operator==(const SlopeValue&) const = default;
};

// mu_H = (Delta.H)/r; +infinity for torsion classes of positive degree;
// tagged undefined for r = 0 with Delta.H <= 0 (never a crash).
SlopeValue slope_h(const MukaiVector& v, const PolarizedSurface& surface);

enum class GiesekerLimit {
    half, // rank 0, positive degree: lim phase = 1/2
    zero, // positive rank: lim phase = 0
};

Rational gieseker_limit_value(GiesekerLimit g);

// Large-volume limit of the phase along omega = lambda H. Throws
// DomainError(Unsupported) for other sign patterns.
GiesekerLimit gieseker_limit_phase(const MukaiVector& v, const PolarizedSurface& surface);

struct DominanceThreshold {
    bool always_dominant; // v0 outranks v1 at every a > 0 on the line
    Rational a2;          // threshold in a^2 when !always_dominant
};

// On the vertical line at b: the unique a^2 where the rank-0 class v0 and the
// positive-rank class v1 have equal phase; above it v0 strictly outranks v1.
// The same-phase equation is linear in a^2 because Re Z of a rank-0 class is
// constant in a.
DominanceThreshold phase_dominance_threshold(const MukaiVector& v0, const MukaiVector& v1,
                                             const Rational& b, const PolarizedSurface& surface);

// Re Z_{beta0, aH}(v) with beta0 = Delta/r: Delta^2/(2r) - s + r a^2 H^2 / 2.
// Im Z vanishes there by construction; a positive value witnesses that v sits
// on the phase-0 ray (so v[1] has phase 1).
Rational charge_on_slope_kernel(const MukaiVector& v, const Rational& a,
                                const PolarizedSurface& surface);

} // namespace mukai
