#include "mukai/error.hpp"
#include "mukai/vectors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <memory>

using namespace mukai;

namespace {

MukaiVector vec(long long r, const Rational& c, const Rational& s) {
    return {r, NumDivisorClass::pure_h(c), s};
}

} // namespace

TEST_CASE("surface validation") {
    CHECK_NOTHROW(PolarizedSurface(2));
    CHECK_NOTHROW(PolarizedSurface(32));
    CHECK_THROWS_AS(PolarizedSurface(3), DomainError);
    CHECK_THROWS_AS(PolarizedSurface(0), DomainError);
    CHECK_THROWS_AS(PolarizedSurface(-4), DomainError);

    auto lat = std::make_shared<const GramLattice>(
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}}, std::vector<long long>{1, 16});
    CHECK_NOTHROW(PolarizedSurface(32, lat));
    CHECK_THROWS_AS(PolarizedSurface(30, lat), DomainError);
}

TEST_CASE("pairing of spherical structure sheaf with itself is -2") {
    PolarizedSurface surf(32);
    const auto ox = structure_sheaf_vector();
    CHECK(pairing(ox, ox, surf) == Rational(-2));
}

TEST_CASE("pairing of v(O_X) with (2, H, s) is -(s+2)") {
    for (long long s : {4, 5, 7, 8, 10, 11}) {
        PolarizedSurface surf(4 * s);
        const auto ox = structure_sheaf_vector();
        const auto e = vec(2, Rational(1), rat(s));
        CHECK(pairing(ox, e, surf) == rat(-(s + 2)));
        CHECK(pairing(e, ox, surf) == rat(-(s + 2)));
    }
}

TEST_CASE("the exceptional-case pairing <v(A), v(Q)> = 1 at s = 8") {
    // A = (2s-1)/(4s) H + Omega, Omega^2 = -1 - 1/(4s); Q's class is H - A.
    const long long s = 8;
    PolarizedSurface surf(4 * s);
    const auto a_class = NumDivisorClass::h_plus_ortho(make_rational(2 * s - 1, 4 * s),
                                                       Rational(-1) - make_rational(1, 4 * s));
    CHECK(a_class.c() == make_rational(15, 32));
    CHECK(a_class.omega_sq() == make_rational(-33, 32));
    const MukaiVector va{1, a_class, make_rational(s, 2)};
    const MukaiVector vq{1, a_class.complement_in(Rational(1)), make_rational(s, 2)};
    CHECK(vq.delta.c() == make_rational(17, 32));
    CHECK(pairing(va, vq, surf) == Rational(1));
    CHECK(pairing(vq, va, surf) == Rational(1));
    // both summands are square-zero classes
    CHECK(square(va, surf) == Rational(-2));
    CHECK(square(vq, surf) == Rational(0));
}

TEST_CASE("pairing errors loudly on genuinely undetermined cross terms") {
    PolarizedSurface surf(32);
    const MukaiVector v{1, NumDivisorClass::h_plus_ortho(Rational(1), Rational(-2)), Rational(1)};
    const MukaiVector w{1, NumDivisorClass::h_plus_ortho(Rational(1), Rational(-2)), Rational(1)};
    CHECK_THROWS_AS(pairing(v, w, surf), DomainError);
    // but a class with zero orthogonal part pairs fine
    const MukaiVector u{1, NumDivisorClass::h_plus_ortho(Rational(1), Rational(0)), Rational(1)};
    CHECK_NOTHROW(pairing(v, u, surf));
    // and self-pairing is always determined
    CHECK(pairing(v, v, surf) == square(v, surf));
}

TEST_CASE("square values") {
    PolarizedSurface surf32(32);
    CHECK(square(vec(1, Rational(0), Rational(1)), surf32) == Rational(-2));
    CHECK(square(vec(0, Rational(2), Rational(0)), surf32) == Rational(128)); // 4 H^2
    for (long long s : {4, 8, 12}) {
        PolarizedSurface surf(4 * s);
        CHECK(square(vec(2, Rational(1), rat(s)), surf) == Rational(0)); // v^2 = H^2 - 4s
    }
}

TEST_CASE("square equals self-pairing on random vectors") {
    oracle::RatGen gen(11);
    PolarizedSurface surf(24);
    for (int i = 0; i < 200; ++i) {
        const MukaiVector v = vec(gen.integer(-4, 4), gen.rational(-6, 6), gen.rational(-9, 9));
        CHECK(pairing(v, v, surf) == square(v, surf));
    }
}

TEST_CASE("pairing is symmetric and bilinear over rational scalings") {
    oracle::RatGen gen(12);
    PolarizedSurface surf(16);
    for (int i = 0; i < 200; ++i) {
        const MukaiVector v = vec(gen.integer(-4, 4), gen.rational(-6, 6), gen.rational(-9, 9));
        const MukaiVector w = vec(gen.integer(-4, 4), gen.rational(-6, 6), gen.rational(-9, 9));
        const Rational p = pairing(v, w, surf);
        CHECK(pairing(w, v, surf) == p);
        // scale v by 3: every component of the pairing is linear in v
        const MukaiVector v3 = vec(3 * v.r, 3 * v.delta.c(), 3 * v.s);
        CHECK(pairing(v3, w, surf) == 3 * p);
    }
}

TEST_CASE("pairing with lattice classes") {
    auto lat = std::make_shared<const GramLattice>(
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}}, std::vector<long long>{1, 16});
    PolarizedSurface surf(32, lat);
    const MukaiVector f{0, NumDivisorClass::lattice_coords(lat, {0, 1}), Rational(0)};
    const MukaiVector e{1, NumDivisorClass::lattice_coords(lat, {1, 16}), Rational(2)};
    // Delta_f . Delta_e = f.(e + 16f) = 1
    CHECK(pairing(f, e, surf) == Rational(1) - 0 - 1 * Rational(0));
    CHECK(f.delta.h_degree(surf) == Rational(1));
    CHECK(f.delta.self_int(surf) == Rational(0));
    // pure H against lattice class
    const MukaiVector g = vec(2, Rational(1), Rational(3));
    CHECK(pairing(g, f, surf) == Rational(1) * 1 - 2 * Rational(0) - 0 * Rational(3));
}

TEST_CASE("lattice classes satisfy the Hodge-index bound automatically") {
    // any x decomposes as (x.H/H^2) H + Omega with Omega^2 <= 0
    auto lat = std::make_shared<const GramLattice>(
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}}, std::vector<long long>{1, 16});
    PolarizedSurface surf(32, lat);
    oracle::RatGen gen(99);
    for (int i = 0; i < 200; ++i) {
        const NumDivisorClass d =
            NumDivisorClass::lattice_coords(lat, {gen.integer(-9, 9), gen.integer(-9, 9)});
        const Rational deg = d.h_degree(surf);
        CHECK(d.self_int(surf) <= deg * deg / 32);
    }
}

TEST_CASE("chi") {
    CHECK(chi(structure_sheaf_vector()) == Rational(2));
    for (long long s : {4, 8, 11}) {
        CHECK(chi(vec(2, Rational(1), rat(s))) == rat(s + 2));
        CHECK(chi(vec(-2, Rational(1), rat(-s))) == rat(-(s + 2)));
    }
}

TEST_CASE("chi(v) = -<v(O_X), v> for pure-H vectors") {
    oracle::RatGen gen(13);
    PolarizedSurface surf(20);
    const auto ox = structure_sheaf_vector();
    for (int i = 0; i < 100; ++i) {
        const MukaiVector v = vec(gen.integer(-5, 5), gen.rational(-6, 6), gen.rational(-9, 9));
        CHECK(chi(v) == -pairing(ox, v, surf));
    }
}

TEST_CASE("twist examples") {
    // (2, H, s) twisted by -1 at H^2 = 4s: the intermediate of v(E(-H)[1])
    for (long long s : {6, 8, 14}) {
        PolarizedSurface surf(4 * s);
        const auto v = vec(2, Rational(1), rat(s));
        const auto t = twist_h(v, -1, surf);
        CHECK(t.r == 2);
        CHECK(t.delta.c() == Rational(-1));
        CHECK(t.s == rat(s));
    }
    // identity twist
    PolarizedSurface surf32(32);
    const auto v = vec(3, make_rational(1, 2), make_rational(7, 3));
    CHECK(twist_h(v, 0, surf32) == v);
    // (1, 0, 1) twisted by +1 at H^2 = 32 -> (1, H, 17)
    const auto t = twist_h(structure_sheaf_vector(), 1, surf32);
    CHECK(t.r == 1);
    CHECK(t.delta.c() == Rational(1));
    CHECK(t.s == Rational(17));
}

TEST_CASE("twist-then-shift identity: v(E(-H)[1]) = (-2, H, -s)") {
    for (long long s = 1; s <= 64; ++s) {
        PolarizedSurface surf(4 * s);
        const auto v = vec(2, Rational(1), rat(s));
        const auto res = shift(twist_h(v, -1, surf));
        CHECK(res.r == -2);
        CHECK(res.delta.c() == Rational(1));
        CHECK(res.s == rat(-s));
    }
}

TEST_CASE("twist composition and isometry") {
    oracle::RatGen gen(14);
    PolarizedSurface surf(12);
    for (int i = 0; i < 100; ++i) {
        const MukaiVector v = vec(gen.integer(-4, 4), gen.rational(-5, 5), gen.rational(-8, 8));
        const long long m = gen.integer(-3, 3);
        const long long n = gen.integer(-3, 3);
        CHECK(twist_h(twist_h(v, m, surf), n, surf) == twist_h(v, m + n, surf));
        CHECK(square(twist_h(v, m, surf), surf) == square(v, surf));
    }
}

TEST_CASE("twist acts on lattice and orthogonal classes too") {
    auto lat = std::make_shared<const GramLattice>(
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}}, std::vector<long long>{1, 16});
    PolarizedSurface surf(32, lat);
    const MukaiVector v{2, NumDivisorClass::lattice_coords(lat, {0, 1}), Rational(0)};
    const auto t = twist_h(v, -1, surf);
    CHECK(t.delta.coords() == std::vector<long long>{-2, -31});
    CHECK(square(t, surf) == square(v, surf));

    const MukaiVector w{1, NumDivisorClass::h_plus_ortho(make_rational(1, 2), Rational(-2)),
                        Rational(3)};
    const auto tw = twist_h(w, 2, surf);
    CHECK(tw.delta.c() == make_rational(5, 2));
    CHECK(tw.delta.omega_sq() == Rational(-2));
    CHECK(square(tw, surf) == square(w, surf));
}

TEST_CASE("shift") {
    PolarizedSurface surf(32);
    const auto v = vec(0, Rational(2), Rational(0));
    const auto sv = shift(v);
    CHECK(sv.r == 0);
    CHECK(sv.delta.c() == Rational(-2));
    CHECK(sv.s == Rational(0));
    oracle::RatGen gen(15);
    for (int i = 0; i < 100; ++i) {
        const MukaiVector w = vec(gen.integer(-4, 4), gen.rational(-5, 5), gen.rational(-8, 8));
        CHECK(shift(shift(w)) == w);
        CHECK(square(shift(w), surf) == square(w, surf));
        CHECK(chi(shift(w)) == -chi(w));
    }
}

TEST_CASE("jh square lower bound") {
    CHECK(jh_square_lower_bound(1) == Rational(-2));
    CHECK(jh_square_lower_bound(2) == Rational(-8));
    CHECK(jh_square_lower_bound(3) == Rational(-18));
    CHECK_THROWS_AS(jh_square_lower_bound(0), DomainError);

    PolarizedSurface surf(32);
    // v(i_* F) = (0, 2H, 0) has two JH factors; 128 >= -8
    CHECK(satisfies_jh_bound(vec(0, Rational(2), Rational(0)), 2, surf));

    // monotonicity: anything with square >= -2 satisfies every n >= 1
    oracle::RatGen gen(16);
    for (int i = 0; i < 100; ++i) {
        const MukaiVector w = vec(gen.integer(-4, 4), gen.rational(-5, 5), gen.rational(-8, 8));
        if (square(w, surf) >= Rational(-2))
            for (long long n = 1; n <= 5; ++n) CHECK(satisfies_jh_bound(w, n, surf));
    }
}

TEST_CASE("h0 bound values at s = 8") {
    PolarizedSurface surf(32);
    const auto b = h0_upper_bound(vec(2, Rational(1), Rational(8)), surf);
    CHECK(b.chi_half == Rational(5));
    CHECK(b.radicand == Rational(104)); // (2-8)^2 + 1*(2*32+4)
    CHECK(h0_max(vec(2, Rational(1), Rational(8)), surf) == 10); // s + 2
    CHECK(h0_max(vec(-2, Rational(1), Rational(-8)), surf) == 0);
    CHECK(h0_max(structure_sheaf_vector(), surf) == 1); // h^0(O_X) = 1 saturates
}

TEST_CASE("h0 bound, statement version behind the flag") {
    PolarizedSurface surf(32);
    const auto b =
        h0_upper_bound(vec(2, Rational(1), Rational(8)), surf, H0BoundVersion::statement);
    CHECK(b.radicand == Rational(72)); // 36 + 1*(32+4)
    CHECK(h0_max(vec(2, Rational(1), Rational(8)), surf, H0BoundVersion::statement) == 9);
}

TEST_CASE("h0_max sweep: (2, H, s) gives s+2 and its shift gives 0, s even 4..64") {
    for (long long s = 4; s <= 64; s += 2) {
        PolarizedSurface surf(4 * s);
        CHECK(h0_max(vec(2, Rational(1), rat(s)), surf) == s + 2);
        CHECK(h0_max(vec(-2, Rational(1), rat(-s)), surf) == 0);
    }
}

TEST_CASE("h0 bound rejects non-pure classes") {
    PolarizedSurface surf(32);
    const MukaiVector v{1, NumDivisorClass::h_plus_ortho(Rational(1), Rational(-2)), Rational(1)};
    CHECK_THROWS_AS(h0_upper_bound(v, surf), DomainError);
    // a lattice class that happens to be a multiple of H is accepted
    auto lat = std::make_shared<const GramLattice>(
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}}, std::vector<long long>{1, 16});
    PolarizedSurface surf_lat(32, lat);
    const MukaiVector w{2, NumDivisorClass::lattice_coords(lat, {1, 16}), Rational(8)};
    CHECK(h0_max(w, surf_lat) == 10);
    const MukaiVector u{2, NumDivisorClass::lattice_coords(lat, {0, 1}), Rational(8)};
    CHECK_THROWS_AS(h0_upper_bound(u, surf_lat), DomainError);
}
