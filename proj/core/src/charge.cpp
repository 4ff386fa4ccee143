#include "mukai/charge.hpp"

#include "mukai/error.hpp"

namespace mukai {

bool is_valid(const StabilityPoint& p, const PolarizedSurface& surface) {
    return sgn(p.a) > 0 && p.a * p.a * rat(surface.h2()) > 2;
}

ChargeValue central_charge(const StabilityPoint& p, const MukaiVector& v,
                           const PolarizedSurface& surface) {
    const Rational d = v.delta.h_degree(surface);
    const Rational r(static_cast<long>(v.r));
    const long long h2 = surface.h2();
    ChargeValue z;
    z.re = p.b * d - v.s - r * (p.b * p.b - p.a * p.a) * static_cast<long>(h2) / 2;
    z.im = p.a * (d - r * p.b * static_cast<long>(h2));
    return z;
}

namespace {

// 0: open upper half-plane; 1: negative real ray (phase 1)
int phase_class(const ChargeValue& z) {
    const int si = sgn(z.im);
    if (si > 0) return 0;
    if (si == 0 && sgn(z.re) < 0) return 1;
    throw DomainError(errkind::phase_undefined,
                      "charge not in the phase cone (0,1]: re=" + fraction_str(z.re) +
                          " im=" + fraction_str(z.im));
}

} // namespace

std::strong_ordering phase_compare(const ChargeValue& z1, const ChargeValue& z2) {
    const int c1 = phase_class(z1);
    const int c2 = phase_class(z2);
    if (c1 != c2) return c1 <=> c2; // the negative real ray is maximal
    if (c1 == 1) return std::strong_ordering::equal;
    // both in the open upper half-plane: arg z1 < arg z2 iff re1 im2 - re2 im1 > 0
    const Rational cross = z1.re * z2.im - z2.re * z1.im;
    const int s = sgn(cross);
    if (s > 0) return std::strong_ordering::less;
    if (s < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

SlopeValue slope_h(const MukaiVector& v, const PolarizedSurface& surface) {
    const Rational d = v.delta.h_degree(surface);
    if (v.r != 0) return {SlopeKind::finite, d / static_cast<long>(v.r)};
    if (sgn(d) > 0) return {SlopeKind::plus_infinity, Rational(0)};
    return {SlopeKind::undefined, Rational(0)};
}

Rational gieseker_limit_value(GiesekerLimit g) {
    return g == GiesekerLimit::half ? make_rational(1, 2) : Rational(0);
}

GiesekerLimit gieseker_limit_phase(const MukaiVector& v, const PolarizedSurface& surface) {
    if (v.r > 0) return GiesekerLimit::zero;
    if (v.r == 0 && sgn(v.delta.h_degree(surface)) > 0) return GiesekerLimit::half;
    throw DomainError(errkind::unsupported,
                      "large-volume phase limit needs r > 0, or r = 0 with Delta.H > 0");
}

DominanceThreshold phase_dominance_threshold(const MukaiVector& v0, const MukaiVector& v1,
                                             const Rational& b, const PolarizedSurface& surface) {
    if (v0.r != 0) throw DomainError(errkind::invalid_argument, "v0 must have rank 0");
    const Rational d0 = v0.delta.h_degree(surface);
    if (sgn(d0) <= 0) throw DomainError(errkind::invalid_argument, "v0 must have Delta.H > 0");
    if (v1.r <= 0) throw DomainError(errkind::invalid_argument, "v1 must have positive rank");
    const Rational d1 = v1.delta.h_degree(surface);
    const Rational h2(static_cast<long>(surface.h2()));
    const Rational r1(static_cast<long>(v1.r));

    // Same phase on the line: (b d0 - s0)(d1 - r1 b H^2)
    //                       = (b d1 - s1 - r1 b^2 H^2/2) d0 + (r1 H^2 d0 / 2) a^2
    const Rational lhs = (b * d0 - v0.s) * (d1 - r1 * b * h2);
    const Rational rhs_const = (b * d1 - v1.s - r1 * b * b * h2 / 2) * d0;
    const Rational slope = r1 * h2 * d0 / 2;
    if (sgn(slope) == 0)
        throw DomainError(errkind::degenerate_pair, "charges proportional for every a");
    const Rational root = (lhs - rhs_const) / slope;
    if (sgn(root) <= 0) return {true, Rational(0)};
    return {false, root};
}

Rational charge_on_slope_kernel(const MukaiVector& v, const Rational& a,
                                const PolarizedSurface& surface) {
    if (v.r <= 0) throw DomainError(errkind::invalid_argument, "positive rank required");
    if (sgn(a) <= 0) throw DomainError(errkind::invalid_argument, "a must be positive");
    const Rational d2 = v.delta.self_int(surface);
    const Rational r(static_cast<long>(v.r));
    return d2 / (2 * r) - v.s + r * a * a * static_cast<long>(surface.h2()) / 2;
}

} // namespace mukai
