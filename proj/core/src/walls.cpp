#include "mukai/walls.hpp"

#include "mukai/error.hpp"

#include <algorithm>

namespace mukai {

Wall numerical_wall(const MukaiVector& v, const MukaiVector& w, const PolarizedSurface& surface) {
    const Rational dv = v.delta.h_degree(surface);
    const Rational dw = w.delta.h_degree(surface);
    const Rational rv(static_cast<long>(v.r));
    const Rational rw(static_cast<long>(w.r));
    const Rational h2(static_cast<long>(surface.h2()));

    Wall wall;
    wall.v = v;
    wall.w = w;
    wall.k2 = h2 / 2 * (rv * dw - rw * dv);
    wall.k1 = h2 * (v.s * rw - w.s * rv);
    wall.k0 = w.s * dv - v.s * dw;
    wall.center_b = wall.radius_sq = wall.line_b = Rational(0);

    if (sgn(wall.k2) != 0) {
        wall.center_b = -wall.k1 / (2 * wall.k2);
        wall.radius_sq = wall.center_b * wall.center_b - wall.k0 / wall.k2;
        wall.kind = sgn(wall.radius_sq) > 0 ? WallKind::semicircle : WallKind::empty;
    } else if (sgn(wall.k1) != 0) {
        wall.kind = WallKind::vertical_line;
        wall.line_b = -wall.k0 / wall.k1;
    } else {
        wall.kind = sgn(wall.k0) == 0 ? WallKind::everywhere : WallKind::empty;
    }
    return wall;
}

std::optional<Rational> ray_wall_a2(const MukaiVector& v, const MukaiVector& w,
                                    const PolarizedSurface& surface, const Rational& b) {
    const Wall wall = numerical_wall(v, w, surface);
    if (sgn(wall.k2) == 0) return std::nullopt; // vertical line or degenerate: no unique a^2
    const Rational a2 = -(wall.k2 * b * b + wall.k1 * b + wall.k0) / wall.k2;
    if (sgn(a2) <= 0) return std::nullopt;
    return a2;
}

std::vector<std::pair<Rational, Rational>> sample_wall(const Wall& wall, int n) {
    if (n < 1) throw DomainError(errkind::invalid_argument, "n must be >= 1");
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    switch (wall.kind) {
    case WallKind::vertical_line:
        for (int k = 1; k <= n; ++k)
            pts.emplace_back(wall.line_b, Rational(static_cast<long>(k)) * static_cast<long>(k));
        return pts;
    case WallKind::semicircle: {
        // b = center + delta with delta^2 < radius_sq keeps a^2 = R - delta^2
        // rational and positive. w0 = isqrt(pq)/q <= sqrt(p/q) bounds the
        // usable half-width; offsets stay strictly inside for n >= 2.
        const mpz_class p = wall.radius_sq.get_num();
        const mpz_class q = wall.radius_sq.get_den();
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), mpz_class(p * q).get_mpz_t());
        Rational w0(root, q);
        w0.canonicalize();
        for (int k = 0; k < n; ++k) {
            const Rational offset =
                (n == 1) ? Rational(0)
                         : w0 * make_rational(2 * k - (n - 1), n);
            const Rational b = wall.center_b + offset;
            const Rational a2 = wall.radius_sq - offset * offset;
            pts.emplace_back(b, a2);
        }
        std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
        return pts;
    }
    case WallKind::everywhere:
    case WallKind::empty:
        throw DomainError(errkind::empty_wall, "wall has no curve to sample");
    }
    throw DomainError(errkind::invalid_argument, "bad wall kind");
}

} // namespace mukai
