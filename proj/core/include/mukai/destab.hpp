#pragma once

#include "mukai/vectors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

enum class AuxClass { h_minus_delta0, h_minus_2delta0 };

enum class ObstructionMeaning {
    no_square_zero_degree_one, // (0,1): impossible, no such class exists
    elliptic_pencil_deg2,      // (0,*) with hyperelliptic pattern, or (0,2) g^1_1
    elliptic_pencil_deg6,      // (0,6): excluded when gonality >= 7
    unclassified,
};

struct ObstructionFlag {
    AuxClass aux;
    long long aux_sq;   // (H - k Delta0)^2 = H^2 - 2k d0 + k^2 Delta0^2
    long long aux_hdeg; // H^2 - k d0
    ObstructionMeaning meaning;
};

enum class VerdictKind { unobstructed, conditional, impossible };

struct DeltaSqOption {
    long long delta0_sq; // even, in [2 r0 s0 - 2, d0^2/H^2]
    Rational omega_sq;   // delta0_sq - d0^2/H^2, always <= 0
    std::vector<ObstructionFlag> flags;
    VerdictKind verdict;
    std::vector<std::string> conditions; // nonempty iff conditional
};

// A numerical destabilizer (r0, d0, s0) together with its wall position and
// the lattice obstruction analysis of every feasible Delta0^2.
struct WallCandidate {
    long long r0;
    long long d0; // Delta0.H
    long long s0;
    Rational a2h2; // wall position w^2 H^2 on the b = 0 ray
    std::vector<DeltaSqOption> options;
    VerdictKind verdict; // best case across options
    std::vector<std::string> conditions;
};

struct EnumerateOptions {
    std::optional<long long> max_rank; // default rank(v) + 2
    Rational a2h2_min = Rational(2);   // walls at or below the validity floor drop
    unsigned threads = 1;
};

// All integer triples (r0, d0, s0) with 1 <= r0 <= max_rank, d0 > 0, strict
// slope d0 R < D r0, positive wall s0 D > S d0 above a2h2_min, and a nonempty
// set of even Delta0^2 in [2 r0 s0 - 2, d0^2/H^2]. Sorted by (r0, d0, s0);
// deterministic for any thread count. Requires v = (R, cH, S) with
// D = c H^2 > 0 and S integers (NonIntegralInput otherwise).
std::vector<WallCandidate> enumerate_destabilizers(const MukaiVector& v,
                                                   const PolarizedSurface& surface,
                                                   const EnumerateOptions& opts = {});

// One surviving line of the congruence case analysis: k = d0 with
// k = -a (mod 4), k = -b (mod M), r0 = (k+b)/M, s0 = (k+a)/4.
struct CaseSurvivor {
    long long a, b, k;
    long long r0, d0, s0;
    Rational w2h2;
};

struct CaseReport {
    int genus_mod4;
    long long s_or_p;
    std::vector<CaseSurvivor> survivors; // sorted by (r0, d0, s0)
};

// Independent second implementation of the destabilizer search via the
// (a, b, k) congruence system; the cross-oracle for enumerate_destabilizers.
//   genus_mod4 = 1: v = (2, H, s), s even >= 4
//   genus_mod4 = 3: v = (2, H, s), s odd >= 5
//   genus_mod4 = 2: v = (4, 2H, p), p = 1 (mod 4), p >= 5
// Throws DomainError(ParityMismatch) on parameter mismatch.
CaseReport lemma_case_table(int genus_mod4, long long s_or_p);

struct SimultaneityReport {
    std::vector<long long> possible_even_squares;
    bool coexistence;
};

// Can the two exceptional destabilizers of the even-s analysis coexist?
// D^2 = -1 - 1/s - 2t with |t| <= sqrt(4s+1)/(2s); returns the even integers
// >= -2 in that interval, decided by exact endpoint comparison.
SimultaneityReport simultaneity_check(long long s);

struct OxWallOptions {
    long long rk_max = 6;
    Rational beta_max = Rational(4);
};

struct OxWallSolution {
    Rational alpha;
    Rational beta;
    long long rk;

    bool operator==(const OxWallSolution&) const = default;
};

// Brute force over v(F) = alpha v(O_X) + beta v(E) + (0,N,0): rk in
// 1..rk_max, beta on the grid (1/gcd(8,s-2)) Z in [0, beta_max],
// alpha = rk - 2 beta, keeping alpha (alpha + (s+2) beta) <= 1 with alpha > 0
// whenever beta > 0. The beta < 0 branch is excluded by construction: it
// only dies by a limiting argument in b, which has no finite enumeration.
std::vector<OxWallSolution> ox_wall_solutions(long long s, const OxWallOptions& opts = {});

} // namespace mukai
