#include "mukai/destab.hpp"

#include "mukai/error.hpp"
#include "mukai/walls.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace mukai {

namespace {

// Obstruction table. Exactly three aux patterns carry a known geometric
// reading; every other zero-square auxiliary is reported raw as unclassified.
void classify_option(long long h2, long long d0, long long q, DeltaSqOption& opt) {
    opt.verdict = VerdictKind::unobstructed;
    for (int k = 1; k <= 2; ++k) {
        const long long aux_sq = h2 - 2 * k * d0 + static_cast<long long>(k) * k * q;
        const long long aux_hdeg = h2 - k * d0;
        if (aux_sq != 0) continue;
        ObstructionFlag flag;
        flag.aux = (k == 1) ? AuxClass::h_minus_delta0 : AuxClass::h_minus_2delta0;
        flag.aux_sq = aux_sq;
        flag.aux_hdeg = aux_hdeg;
        flag.meaning = ObstructionMeaning::unclassified;
        if (k == 1 && aux_hdeg == 1) {
            // no D with D^2 = 0 and D.H = 1 exists
            flag.meaning = ObstructionMeaning::no_square_zero_degree_one;
            opt.verdict = VerdictKind::impossible;
        } else if (k == 2) {
            const long long cross = h2 - 3 * d0 + 2 * q; // (H-Delta0).(H-2Delta0)
            if (cross == 2) {
                // elliptic pencil of degree 2 on the companion curve class
                flag.meaning = ObstructionMeaning::elliptic_pencil_deg2;
                if (opt.verdict != VerdictKind::impossible) {
                    opt.verdict = VerdictKind::conditional;
                    opt.conditions.push_back("hyperelliptic");
                }
            } else if (aux_hdeg == 2) {
                // the pencil cuts a g^1_1: impossible
                flag.meaning = ObstructionMeaning::elliptic_pencil_deg2;
                opt.verdict = VerdictKind::impossible;
            } else if (aux_hdeg == 6) {
                flag.meaning = ObstructionMeaning::elliptic_pencil_deg6;
                if (opt.verdict != VerdictKind::impossible) {
                    opt.verdict = VerdictKind::conditional;
                    opt.conditions.push_back("gonality<=6");
                }
            }
        }
        opt.flags.push_back(flag);
    }
    if (opt.verdict == VerdictKind::impossible) opt.conditions.clear();
}

void finish_candidate(WallCandidate& cand) {
    // A candidate is as viable as its best option.
    cand.verdict = VerdictKind::impossible;
    for (const auto& opt : cand.options) {
        if (opt.verdict == VerdictKind::unobstructed) {
            cand.verdict = VerdictKind::unobstructed;
            cand.conditions.clear();
            return;
        }
        if (opt.verdict == VerdictKind::conditional && cand.verdict != VerdictKind::unobstructed) {
            cand.verdict = VerdictKind::conditional;
            for (const auto& c : opt.conditions)
                if (std::find(cand.conditions.begin(), cand.conditions.end(), c) ==
                    cand.conditions.end())
                    cand.conditions.push_back(c);
        }
    }
    if (cand.verdict == VerdictKind::impossible) cand.conditions.clear();
}

struct Grid {
    long long R, D, S, h2;
    Rational a2h2_min;
};

long long floor_div(long long num, long long den) {
    // den > 0
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

// All candidates for one (r0, d0) cell, pushed onto out.
void scan_cell(const Grid& g, long long r0, long long d0, std::vector<WallCandidate>& out) {
    // s0 window: positivity s0 D > S d0 and a nonempty even interval
    // [2 r0 s0 - 2, d0^2/h2], i.e. 2 r0 s0 - 2 <= d0^2/h2.
    const long long s0_min = floor_div(g.S * d0, g.D) + 1;
    const __int128 d0sq = static_cast<__int128>(d0) * d0;
    for (long long s0 = s0_min;; ++s0) {
        // 2 r0 s0 - 2 <= d0^2 / h2  <=>  (2 r0 s0 - 2) h2 <= d0^2
        const __int128 lhs = static_cast<__int128>(2 * r0 * s0 - 2) * g.h2;
        if (lhs > d0sq) break;
        // wall position w^2 H^2 = 2 (s0 D - S d0) / (r0 D - R d0) > a2h2_min
        const long long num = 2 * (s0 * g.D - g.S * d0);
        const long long den = r0 * g.D - g.R * d0; // > 0 by strict slope
        const Rational a2h2 = make_rational(num, den);
        if (a2h2 <= g.a2h2_min) continue;

        WallCandidate cand;
        cand.r0 = r0;
        cand.d0 = d0;
        cand.s0 = s0;
        cand.a2h2 = a2h2;
        const Rational hodge = make_rational(d0) * static_cast<long>(d0) / static_cast<long>(g.h2);
        const long long lo = 2 * r0 * s0 - 2; // even
        for (long long q = lo; static_cast<__int128>(q) * g.h2 <= d0sq; q += 2) {
            DeltaSqOption opt;
            opt.delta0_sq = q;
            opt.omega_sq = Rational(static_cast<long>(q)) - hodge;
            classify_option(g.h2, d0, q, opt);
            cand.options.push_back(std::move(opt));
        }
        finish_candidate(cand);
        out.push_back(std::move(cand));
    }
}

} // namespace

std::vector<WallCandidate> enumerate_destabilizers(const MukaiVector& v,
                                                   const PolarizedSurface& surface,
                                                   const EnumerateOptions& opts) {
    if (v.r < 1) throw DomainError(errkind::invalid_argument, "rank of v must be >= 1");
    const Rational dv = v.delta.h_degree(surface);
    if (!is_integer(dv) || !is_integer(v.s))
        throw DomainError(errkind::non_integral_input, "D = Delta.H and S must be integers");
    Grid g;
    g.R = v.r;
    g.D = to_integer(dv);
    g.S = to_integer(v.s);
    g.h2 = surface.h2();
    g.a2h2_min = opts.a2h2_min;
    if (g.D <= 0) throw DomainError(errkind::invalid_argument, "Delta.H must be positive");
    const long long max_rank = opts.max_rank.value_or(v.r + 2);

    // strict slope: d0 R < D r0
    std::vector<std::pair<long long, long long>> cells;
    for (long long r0 = 1; r0 <= max_rank; ++r0) {
        const long long d0_max = (g.D * r0 - 1) / g.R; // largest d0 with d0 R < D r0
        for (long long d0 = 1; d0 <= d0_max; ++d0) cells.emplace_back(r0, d0);
    }

    const unsigned threads = std::max(1u, opts.threads);
    std::vector<WallCandidate> all;
    if (threads == 1 || cells.size() < 2) {
        for (const auto& [r0, d0] : cells) scan_cell(g, r0, d0, all);
    } else {
        // disjoint round-robin partitions; the final canonical sort makes the
        // merge order irrelevant
        const unsigned nw = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
        std::vector<std::vector<WallCandidate>> parts(nw);
        std::vector<std::thread> workers;
        workers.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t i = w; i < cells.size(); i += nw)
                    scan_cell(g, cells[i].first, cells[i].second, parts[w]);
            });
        }
        for (auto& t : workers) t.join();
        for (auto& p : parts)
            for (auto& c : p) all.push_back(std::move(c));
    }

    std::sort(all.begin(), all.end(), [](const WallCandidate& x, const WallCandidate& y) {
        if (x.r0 != y.r0) return x.r0 < y.r0;
        if (x.d0 != y.d0) return x.d0 < y.d0;
        return x.s0 < y.s0;
    });
    return all;
}

CaseReport lemma_case_table(int genus_mod4, long long s_or_p) {
    long long modulus; // M: k = -b (mod M); r0 = (k+b)/M
    switch (genus_mod4) {
    case 1:
        if (s_or_p < 4 || s_or_p % 2 != 0)
            throw DomainError(errkind::parity_mismatch, "genus = 1 (mod 4) needs s even >= 4");
        modulus = 2 * s_or_p;
        break;
    case 3:
        if (s_or_p < 5 || s_or_p % 2 != 1)
            throw DomainError(errkind::parity_mismatch, "genus = 3 (mod 4) needs s odd >= 5");
        modulus = 2 * s_or_p;
        break;
    case 2:
        if (s_or_p < 5 || s_or_p % 4 != 1)
            throw DomainError(errkind::parity_mismatch, "genus = 2 (mod 4) needs p = 1 (mod 4), p >= 5");
        modulus = s_or_p;
        break;
    default:
        throw DomainError(errkind::parity_mismatch, "genus_mod4 must be 1, 2 or 3");
    }

    CaseReport report;
    report.genus_mod4 = genus_mod4;
    report.s_or_p = s_or_p;
    const long long M = modulus;
    for (long long b = 1; b <= M; ++b) {
        for (const long long k : {M - b, 2 * M - b}) {
            if (k < 1) continue;
            // k = -a (mod 4) picks a unique a in 1..4
            const long long a = ((-k) % 4 + 4) % 4 == 0 ? 4 : ((-k) % 4 + 4) % 4;
            // product window: r0 s0 < k^2/(4M) + 1  <=>  (a+b) k + a b < 4M
            if ((a + b) * k + a * b >= 4 * M) continue;
            // wall above the validity floor: s0 - k/4 > r0 - k/M, i.e. a/4 > b/M
            if (a * M <= 4 * b) continue;
            CaseSurvivor sv;
            sv.a = a;
            sv.b = b;
            sv.k = k;
            sv.r0 = (k + b) / M;
            sv.d0 = k;
            sv.s0 = (k + a) / 4;
            sv.w2h2 = make_rational(a * M, 2 * b);
            report.survivors.push_back(sv);
        }
    }
    std::sort(report.survivors.begin(), report.survivors.end(),
              [](const CaseSurvivor& x, const CaseSurvivor& y) {
                  if (x.r0 != y.r0) return x.r0 < y.r0;
                  if (x.d0 != y.d0) return x.d0 < y.d0;
                  return x.s0 < y.s0;
              });
    return report;
}

SimultaneityReport simultaneity_check(long long s) {
    if (s < 4 || s % 2 != 0)
        throw DomainError(errkind::invalid_argument, "s must be even and >= 4");
    // D^2 = -1 - 1/s - 2t, |t| <= sqrt(4s+1)/(2s):
    // n is reachable iff |(-1 - 1/s) - n| <= sqrt(4s+1)/s
    const Rational center = Rational(-1) - make_rational(1, s);
    const Rational bound_sq = make_rational(4 * s + 1, s * s);
    SimultaneityReport rep;
    for (long long n = -2; n <= 0; n += 2) {
        const Rational dist = abs(center - Rational(static_cast<long>(n)));
        if (cmp_rational_sqrt(dist, bound_sq) <= 0) rep.possible_even_squares.push_back(n);
    }
    rep.coexistence = !rep.possible_even_squares.empty();
    return rep;
}

std::vector<OxWallSolution> ox_wall_solutions(long long s, const OxWallOptions& opts) {
    if (s < 4) throw DomainError(errkind::invalid_argument, "s must be >= 4");
    if (opts.rk_max < 1 || sgn(opts.beta_max) < 0)
        throw DomainError(errkind::invalid_argument, "rk_max >= 1 and beta_max >= 0 required");
    const long long g = std::gcd(8LL, s - 2);
    const long long j_max = floor_to_int(opts.beta_max * static_cast<long>(g));
    std::vector<OxWallSolution> out;
    for (long long rk = 1; rk <= opts.rk_max; ++rk) {
        for (long long j = 0; j <= j_max; ++j) {
            const Rational beta = make_rational(j, g);
            const Rational alpha = Rational(static_cast<long>(rk)) - 2 * beta;
            if (sgn(beta) > 0 && sgn(alpha) <= 0) continue;
            if (alpha * (alpha + Rational(static_cast<long>(s + 2)) * beta) <= 1)
                out.push_back({alpha, beta, rk});
        }
    }
    std::sort(out.begin(), out.end(), [](const OxWallSolution& x, const OxWallSolution& y) {
        if (x.rk != y.rk) return x.rk < y.rk;
        return x.beta < y.beta;
    });
    return out;
}

} // namespace mukai
