#include "svg.hpp"

#include <sstream>

namespace mukai {

namespace {

// floor(sqrt(q) * 10^6) / 10^6: deterministic rational approximation, enough
// for drawing.
Rational approx_sqrt(const Rational& q) {
    if (sgn(q) <= 0) return Rational(0);
    const mpz_class scale("1000000");
    mpz_class num = q.get_num() * scale * scale * q.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
    Rational r(root, q.get_den() * scale);
    r.canonicalize();
    return r;
}

} // namespace

std::string walls_svg(const std::vector<Wall>& walls, long long scale) {
    std::ostringstream out;
    const long long w = 4 * scale, h = 2 * scale;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"-2 0 4 2\">\n";
    // flip the y axis so a points up; geometry below is in plain (b,a)
    out << "  <g transform=\"translate(0,2) scale(1,-1)\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"0.01\">\n";
    for (const auto& wall : walls) {
        switch (wall.kind) {
        case WallKind::semicircle: {
            const Rational r = approx_sqrt(wall.radius_sq);
            const Rational left = wall.center_b - r;
            const Rational right = wall.center_b + r;
            out << "    <path d=\"M " << decimal6(left) << " 0 A " << decimal6(r) << " "
                << decimal6(r) << " 0 0 1 " << decimal6(right) << " 0\"/>\n";
            break;
        }
        case WallKind::vertical_line:
            out << "    <line x1=\"" << decimal6(wall.line_b) << "\" y1=\"0\" x2=\""
                << decimal6(wall.line_b) << "\" y2=\"2\"/>\n";
            break;
        case WallKind::everywhere:
            out << "    <rect x=\"-2\" y=\"0\" width=\"4\" height=\"2\"/>\n";
            break;
        case WallKind::empty:
            out << "    <!-- empty wall -->\n";
            break;
        }
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

} // namespace mukai
