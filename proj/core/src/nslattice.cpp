#include "mukai/nslattice.hpp"

#include "mukai/error.hpp"

#include <algorithm>
#include <numeric>

namespace mukai {

std::strong_ordering cmp_rational_sqrt(const Rational& x, const Rational& n) {
    if (sgn(n) < 0) throw DomainError(errkind::invalid_argument, "sqrt of negative");
    if (sgn(x) < 0) return std::strong_ordering::less;
    // both sides >= 0: compare squares
    Rational x2 = x * x;
    const int c = cmp(x2, n);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// Characteristic polynomial of an integer symmetric matrix by
// Faddeev-LeVerrier over exact rationals; coefficients of
// lambda^n + c[1] lambda^{n-1} + ... + c[n].
std::vector<Rational> char_poly(const std::vector<long long>& a, int n) {
    std::vector<Rational> m(static_cast<std::size_t>(n) * n, Rational(0)); // M_0 = 0
    std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1, Rational(0));
    coeff[0] = 1;
    std::vector<Rational> am(static_cast<std::size_t>(n) * n, Rational(0));
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{k-1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (int l = 0; l < n; ++l)
                    acc += Rational(static_cast<long>(a[static_cast<std::size_t>(i) * n + l])) *
                           m[static_cast<std::size_t>(l) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = acc;
            }
        for (int i = 0; i < n; ++i) am[static_cast<std::size_t>(i) * n + i] += coeff[k - 1];
        m = am;
        // c_k = -tr(A*M_k)/k
        Rational tr(0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                tr += Rational(static_cast<long>(a[static_cast<std::size_t>(i) * n + l])) *
                      m[static_cast<std::size_t>(l) * n + i];
        coeff[k] = -tr / k;
    }
    return coeff;
}

int descartes_sign_changes(const std::vector<Rational>& c) {
    int changes = 0;
    int prev = 0;
    for (const auto& v : c) {
        const int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

GramLattice::GramLattice(std::vector<std::vector<long long>> gram, std::vector<long long> h)
    : rank_(static_cast<int>(gram.size())), h_(std::move(h)) {
    if (rank_ < 1) throw DomainError(errkind::invalid_lattice, "empty Gram matrix");
    if (static_cast<int>(h_.size()) != rank_)
        throw DomainError(errkind::invalid_lattice, "h length != rank");
    gram_.resize(static_cast<std::size_t>(rank_) * rank_);
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(gram[i].size()) != rank_)
            throw DomainError(errkind::invalid_lattice, "Gram matrix not square");
        for (int j = 0; j < rank_; ++j) gram_[static_cast<std::size_t>(i) * rank_ + j] = gram[i][j];
    }
    for (int i = 0; i < rank_; ++i) {
        if (this->gram(i, i) % 2 != 0)
            throw DomainError(errkind::invalid_lattice, "odd diagonal entry (lattice must be even)");
        for (int j = 0; j < i; ++j)
            if (this->gram(i, j) != this->gram(j, i))
                throw DomainError(errkind::invalid_lattice, "Gram matrix not symmetric");
    }
    h_square_ = bilinear(h_, h_);
    if (h_square_ <= 0) throw DomainError(errkind::invalid_lattice, "h has non-positive square");

    // Signature must be (1, rho-1). Exact: Descartes on the characteristic
    // polynomial (all roots real for a symmetric matrix, so the count is
    // exact). Rank stays small here; the intended use cases have rho <= 3.
    const auto cp = char_poly(gram_, rank_);
    if (sgn(cp[static_cast<std::size_t>(rank_)]) == 0)
        throw DomainError(errkind::invalid_lattice, "degenerate Gram matrix");
    const int positives = descartes_sign_changes(cp);
    auto cp_neg = cp;
    for (int k = 1; k <= rank_; k += 2) cp_neg[static_cast<std::size_t>(k)] = -cp_neg[static_cast<std::size_t>(k)];
    const int negatives = descartes_sign_changes(cp_neg);
    if (positives != 1 || negatives != rank_ - 1)
        throw DomainError(errkind::invalid_lattice,
                          "signature is (" + std::to_string(positives) + "," +
                              std::to_string(negatives) + "), expected (1," +
                              std::to_string(rank_ - 1) + ")");
}

long long GramLattice::bilinear(const std::vector<long long>& u, const std::vector<long long>& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw DomainError(errkind::dimension_mismatch, "coordinate vector length != rank");
    __int128 acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            acc += static_cast<__int128>(gram_[static_cast<std::size_t>(i) * rank_ + j]) * u[i] * v[j];
    return static_cast<long long>(acc);
}

namespace {

// Exact solution set of g11 x^2 = sq, (g11 h1) x = hdeg on a rank-1 lattice.
ClassSearchResult search_rank1(const GramLattice& lat, long long sq, long long hdeg) {
    ClassSearchResult res;
    res.complete = true;
    const long long g = lat.gram(0, 0);
    const long long a = g * lat.h()[0]; // nonzero: lattice nondegenerate, h != 0
    if (hdeg % a == 0) {
        const long long x = hdeg / a;
        if (g * x * x == sq) res.vectors.push_back({x});
    }
    return res;
}

bool isqrt_exact(const mpz_class& d, mpz_class& root) {
    if (d < 0) return false;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    return root * root == d;
}

// Rank 2: the degree constraint is a line a x + b y = m; substitute its
// integer parametrization into the quadratic form.
ClassSearchResult search_rank2(const GramLattice& lat, long long sq, long long hdeg,
                               long long coeff_bound) {
    ClassSearchResult res;
    res.complete = true;
    const long long a = lat.gram(0, 0) * lat.h()[0] + lat.gram(0, 1) * lat.h()[1];
    const long long b = lat.gram(1, 0) * lat.h()[0] + lat.gram(1, 1) * lat.h()[1];
    // (a,b) = Gh != 0 since G is nondegenerate and h != 0
    long long x0 = 0, y0 = 0;
    long long d = std::gcd(std::llabs(a), std::llabs(b));
    if (hdeg % d != 0) return res;
    {
        // extended gcd for a particular solution of a x + b y = hdeg
        long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const long long q = old_r / r;
            long long tmp = old_r - q * r; old_r = r; r = tmp;
            tmp = old_s - q * s; old_s = s; s = tmp;
            tmp = old_t - q * t; old_t = t; t = tmp;
        }
        // old_r = +-d
        const long long scale = hdeg / old_r; // old_r divides d divides hdeg
        if (hdeg % old_r != 0) return res;    // sign-safe divisibility
        x0 = old_s * scale;
        y0 = old_t * scale;
    }
    const long long wx = b / d, wy = -a / d; // direction of the line
    // Q(x0 + t w) = Q(w) t^2 + 2 B(x0,w) t + Q(x0)
    const std::vector<long long> p0{x0, y0}, w{wx, wy};
    const mpz_class qa = zint(lat.square(w));
    const mpz_class qb = 2 * zint(lat.bilinear(p0, w));
    const mpz_class qc = zint(lat.square(p0)) - zint(sq);
    std::vector<long long> ts;
    if (qa != 0) {
        const mpz_class disc = qb * qb - 4 * qa * qc;
        mpz_class root;
        if (isqrt_exact(disc, root)) {
            for (const mpz_class& num : {mpz_class(-qb + root), mpz_class(-qb - root)}) {
                if (num % (2 * qa) == 0) {
                    const mpz_class t = num / (2 * qa);
                    ts.push_back(t.get_si());
                }
            }
        }
    } else if (qb != 0) {
        if (qc % qb == 0) ts.push_back(mpz_class(-qc / qb).get_si());
    } else if (qc == 0) {
        // Whole line satisfies both constraints (isotropic direction through a
        // solution); can only happen for target (0,0)-type data. Report the
        // bounded window of the line instead of an infinite set.
        res.complete = false;
        for (long long t = -coeff_bound; t <= coeff_bound; ++t) ts.push_back(t);
    }
    for (const long long t : ts) {
        std::vector<long long> v{x0 + t * wx, y0 + t * wy};
        if (!res.complete && (std::llabs(v[0]) > coeff_bound || std::llabs(v[1]) > coeff_bound))
            continue;
        res.vectors.push_back(std::move(v));
    }
    std::sort(res.vectors.begin(), res.vectors.end());
    res.vectors.erase(std::unique(res.vectors.begin(), res.vectors.end()), res.vectors.end());
    return res;
}

ClassSearchResult search_box(const GramLattice& lat, long long sq, long long hdeg,
                             long long coeff_bound) {
    ClassSearchResult res;
    res.complete = false;
    const int n = lat.rank();
    std::vector<long long> x(static_cast<std::size_t>(n), -coeff_bound);
    while (true) {
        if (lat.h_degree(x) == hdeg && lat.square(x) == sq) res.vectors.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == coeff_bound) {
            x[static_cast<std::size_t>(i)] = -coeff_bound;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    std::sort(res.vectors.begin(), res.vectors.end());
    return res;
}

} // namespace

ClassSearchResult search_classes(const GramLattice& lat, long long target_sq,
                                 long long target_hdeg, long long coeff_bound) {
    if (coeff_bound < 1) throw DomainError(errkind::invalid_argument, "coeff_bound must be >= 1");
    switch (lat.rank()) {
    case 1: return search_rank1(lat, target_sq, target_hdeg);
    case 2: return search_rank2(lat, target_sq, target_hdeg, coeff_bound);
    default: return search_box(lat, target_sq, target_hdeg, coeff_bound);
    }
}

Noellint1Report noellint1_verdict(const GramLattice& lat, long long coeff_bound) {
    auto found = search_classes(lat, 0, 1, coeff_bound);
    Noellint1Report rep;
    rep.witnesses = std::move(found.vectors);
    rep.complete = found.complete;
    rep.verdict = rep.witnesses.empty() ? LatticeVerdict::no_witness
                                        : LatticeVerdict::geometrically_excluded;
    return rep;
}

HyperellipticDiagnostics hyperelliptic_diagnostics(const GramLattice& lat,
                                                   const std::vector<long long>& a_class) {
    const int n = lat.rank();
    if (static_cast<int>(a_class.size()) != n)
        throw DomainError(errkind::dimension_mismatch, "a_class length != rank");
    std::vector<long long> hma(static_cast<std::size_t>(n)), hm2a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        hma[static_cast<std::size_t>(i)] = lat.h()[static_cast<std::size_t>(i)] - a_class[static_cast<std::size_t>(i)];
        hm2a[static_cast<std::size_t>(i)] = lat.h()[static_cast<std::size_t>(i)] - 2 * a_class[static_cast<std::size_t>(i)];
    }
    HyperellipticDiagnostics d;
    d.h_minus_a_sq = lat.square(hma);
    d.h_minus_2a_sq = lat.square(hm2a);
    d.cross = lat.bilinear(hma, hm2a);
    d.hyperelliptic_pattern = (d.h_minus_2a_sq == 0 && d.cross == 2);
    return d;
}

} // namespace mukai
