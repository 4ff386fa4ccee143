#pragma once

#include "mukai/charge.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mukai {

enum class WallKind { semicircle, vertical_line, everywhere, empty };

// Locus in the (b,a)-half-plane where the charges of two Mukai vectors are
// real-proportional: zero set of P(b,a) = k2 (a^2 + b^2) + k1 b + k0, the
// a-quotient of re(Z_v) im(Z_w) - re(Z_w) im(Z_v).
struct Wall {
    MukaiVector v;
    MukaiVector w;
    WallKind kind = WallKind::empty;
    Rational k2, k1, k0;
    Rational center_b;  // semicircle
    Rational radius_sq; // semicircle
    Rational line_b;    // vertical_line
};

// Closed-form coefficients (with d = Delta.H):
//   k2 = (H^2/2)(r_v d_w - r_w d_v)
//   k1 = H^2 (s_v r_w - s_w r_v)
//   k0 = s_w d_v - s_v d_w
// Degenerate cases classify as Everywhere/Empty; radius_sq <= 0 is Empty.
Wall numerical_wall(const MukaiVector& v, const MukaiVector& w, const PolarizedSurface& surface);

// The unique a^2 > 0 with (b, a) on the wall of the pair, when it exists.
// Nullopt when the wall misses the vertical line, is Everywhere, or is a
// vertical line (no unique intersection).
std::optional<Rational> ray_wall_a2(const MukaiVector& v, const MukaiVector& w,
                                    const PolarizedSurface& surface,
                                    const Rational& b = Rational(0));

// n exact rational (b, a^2) points on the wall, sorted by b then a^2. For a
// semicircle the points cluster around the apex, which is always included for
// n = 1. Throws DomainError(EmptyWall) unless the wall is a semicircle or a
// vertical line.
std::vector<std::pair<Rational, Rational>> sample_wall(const Wall& wall, int n);

} // namespace mukai
