#pragma once

#include "mukai/rational.hpp"

#include <compare>
#include <vector>

namespace mukai {

// Exact ordering of x against sqrt(n), n >= 0, by sign analysis and
// cross-multiplied squaring. Never touches floating point.
std::strong_ordering cmp_rational_sqrt(const Rational& x, const Rational& n);

// An even lattice of signature (1, rho-1) with a distinguished polarization
// vector h of positive square. Wraps the Gram matrix of NS(X).
class GramLattice {
public:
    // Validates: symmetry, even diagonal, h'Gh > 0, signature (1, rho-1).
    // Throws DomainError(InvalidLattice) otherwise.
    GramLattice(std::vector<std::vector<long long>> gram, std::vector<long long> h);

    int rank() const { return rank_; }
    long long gram(int i, int j) const { return gram_[static_cast<std::size_t>(i) * rank_ + j]; }
    const std::vector<long long>& h() const { return h_; }

    long long bilinear(const std::vector<long long>& u, const std::vector<long long>& v) const;
    long long square(const std::vector<long long>& u) const { return bilinear(u, u); }
    long long h_degree(const std::vector<long long>& u) const { return bilinear(u, h_); }
    long long h_square() const { return h_square_; }

private:
    int rank_;
    std::vector<long long> gram_;
    std::vector<long long> h_;
    long long h_square_;
};

struct ClassSearchResult {
    std::vector<std::vector<long long>> vectors; // sorted lexicographically
    bool complete;                               // true: exhaustive over all of NS
};

// All x with x.x = target_sq and x.H = target_hdeg. Rank <= 2 is solved
// exactly (linear section + induced quadratic) and flagged complete; higher
// rank is a box search |x_i| <= coeff_bound flagged bounded.
ClassSearchResult search_classes(const GramLattice& lat, long long target_sq,
                                 long long target_hdeg, long long coeff_bound);

enum class LatticeVerdict { no_witness, geometrically_excluded };

struct Noellint1Report {
    LatticeVerdict verdict;
    std::vector<std::vector<long long>> witnesses;
    bool complete;
};

// Searches for D with D.D = 0, D.H = 1. A witness does not contradict the
// geometric exclusion of such classes; it indicts the configuration (the
// lattice cannot be NS(X) of a polarized K3 with smooth C in |H|).
Noellint1Report noellint1_verdict(const GramLattice& lat, long long coeff_bound = 12);

struct HyperellipticDiagnostics {
    long long h_minus_a_sq;
    long long h_minus_2a_sq;
    long long cross; // (H-A).(H-2A)
    bool hyperelliptic_pattern; // (H-2A)^2 = 0 and (H-A).(H-2A) = 2
};

HyperellipticDiagnostics hyperelliptic_diagnostics(const GramLattice& lat,
                                                   const std::vector<long long>& a_class);

} // namespace mukai
