#pragma once

#include <string>
#include <vector>

namespace mukai {

// Triple-product intersection table on a divisor basis of a threefold.
class TripleTable {
public:
    TripleTable(std::vector<std::string> basis_names);

    // symmetric closure applied; conflicting duplicates rejected
    void set_product(int i, int j, int k, long long value);

    const std::vector<std::string>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    long long product(int i, int j, int k) const;

    // Trilinear contraction sum d1_i d2_j d3_k t[i][j][k]; symmetric in its
    // arguments. Throws DomainError(DimensionMismatch) on bad lengths.
    long long triple(const std::vector<long long>& d1, const std::vector<long long>& d2,
                     const std::vector<long long>& d3) const;

    // Blow-up of P^3 along two skew lines, basis (L, E1, E2):
    // L^3 = 1, L.Ei^2 = -1, Ei^3 = -2, every product mixing E1 and E2 or of
    // the form L^2.Ei is zero. The anticanonical class is 4L - E1 - E2; its
    // linear system consists of K3 surfaces of genus 23. (The surrounding
    // moduli counts -- the 24-dimensional space of quartics through the two
    // lines, the 7-dimensional projectivity group, the 17-dimensional image
    // in the K3 moduli -- are reference constants, not computed here.)
    static TripleTable blowup_p3_two_lines();

private:
    std::vector<std::string> basis_;
    std::vector<long long> t_; // dense symmetric tensor
    std::vector<bool> set_;
    std::size_t idx(int i, int j, int k) const;
};

// Genus of a Fano threefold from 2g - 2 = (-K)^3. Throws
// DomainError(OddCube) when the cube is odd and DomainError(NegativeCube)
// when it is negative.
long long fano_genus(const TripleTable& table, const std::vector<long long>& anticanonical);

} // namespace mukai
