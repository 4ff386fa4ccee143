#pragma once

// Independent test oracles. These deliberately recompute what the library
// computes, through different routes, and stay free of the code paths they
// check.

#include "mukai/destab.hpp"
#include "mukai/rational.hpp"

#include <random>
#include <tuple>
#include <vector>

namespace oracle {

using mukai::Rational;
using mukai::make_rational;
using mukai::rat;

// --- exact complex rationals, for the exponential-pairing route to Z ---

struct CRat {
    Rational re{0}, im{0};

    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat operator*(const Rational& q) const { return {re * q, im * q}; }
};

// Z_{bH,aH}(r, d, s) via <exp(beta + i omega), v>, where the Mukai pairing of
// (r1, D1, s1), (r2, D2, s2) is D1.D2 - r1 s2 - r2 s1 and
// exp(x) = (1, x, x^2/2). Divisor data enters only through d = Delta.H.
inline CRat charge_via_exp(const Rational& b, const Rational& a, long long h2, long long r,
                           const Rational& d, const Rational& s) {
    const CRat x_sq{(b * b - a * a) * rat(h2), 2 * b * a * rat(h2)}; // (bH + iaH)^2
    // <(1, bH + iaH, x_sq/2), (r, Delta, s)> with Delta.H = d:
    // (bH + iaH).Delta - 1*s - r*(x_sq/2)
    const CRat cross{b * d, a * d};
    return cross - CRat{s, Rational(0)} - CRat{x_sq.re / 2, x_sq.im / 2} * rat(r);
}

// --- naive destabilizer grid, constraint-by-constraint, no derived bounds ---

struct Triple {
    long long r0, d0, s0;
    auto operator<=>(const Triple&) const = default;
};

// Scans a generous box and tests the raw constraint list on each point:
// strict slope, positive wall above the floor, an even Delta0^2 in
// [2 r0 s0 - 2, d0^2/H^2]. Slow on purpose.
inline std::vector<Triple> brute_candidates(long long R, long long D, long long S, long long h2,
                                            long long max_rank, const Rational& a2h2_min) {
    std::vector<Triple> out;
    for (long long r0 = 1; r0 <= max_rank; ++r0)
        for (long long d0 = 1; d0 <= max_rank * D; ++d0)
            for (long long s0 = -2 * D; s0 <= 2 * D; ++s0) {
                if (!(d0 * R < D * r0)) continue;
                if (!(s0 * D > S * d0)) continue;
                const Rational a2h2 = make_rational(2 * (s0 * D - S * d0), r0 * D - R * d0);
                if (!(a2h2 > a2h2_min)) continue;
                bool has_even = false;
                for (long long q = 2 * r0 * s0 - 2; rat(q) <= make_rational(d0 * d0, h2); q += 2)
                    if (q % 2 == 0) { has_even = true; break; }
                if (!has_even) continue;
                out.push_back({r0, d0, s0});
            }
    return out;
}

// small deterministic rationals for property tests
class RatGen {
public:
    explicit RatGen(unsigned seed) : rng_(seed) {}

    Rational rational(long long lo, long long hi, long long max_den = 8) {
        std::uniform_int_distribution<long long> num(lo, hi);
        std::uniform_int_distribution<long long> den(1, max_den);
        return make_rational(num(rng_), den(rng_));
    }

    long long integer(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace oracle
