#include "mukai/intersect.hpp"

#include "mukai/error.hpp"

#include <algorithm>

namespace mukai {

TripleTable::TripleTable(std::vector<std::string> basis_names) : basis_(std::move(basis_names)) {
    if (basis_.empty()) throw DomainError(errkind::invalid_argument, "empty basis");
    const std::size_t n = basis_.size();
    t_.assign(n * n * n, 0);
    set_.assign(n * n * n, false);
}

std::size_t TripleTable::idx(int i, int j, int k) const {
    const std::size_t n = basis_.size();
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k);
}

void TripleTable::set_product(int i, int j, int k, long long value) {
    const int n = dim();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw DomainError(errkind::dimension_mismatch, "index out of range");
    int p[3] = {i, j, k};
    std::sort(p, p + 3);
    do {
        const std::size_t at = idx(p[0], p[1], p[2]);
        if (set_[at] && t_[at] != value)
            throw DomainError(errkind::invalid_argument, "conflicting duplicate product entry");
        t_[at] = value;
        set_[at] = true;
    } while (std::next_permutation(p, p + 3));
}

long long TripleTable::product(int i, int j, int k) const { return t_[idx(i, j, k)]; }

long long TripleTable::triple(const std::vector<long long>& d1, const std::vector<long long>& d2,
                              const std::vector<long long>& d3) const {
    const int n = dim();
    if (static_cast<int>(d1.size()) != n || static_cast<int>(d2.size()) != n ||
        static_cast<int>(d3.size()) != n)
        throw DomainError(errkind::dimension_mismatch, "divisor length != basis size");
    __int128 acc = 0;
    for (int i = 0; i < n; ++i) {
        if (d1[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (d2[static_cast<std::size_t>(j)] == 0) continue;
            for (int k = 0; k < n; ++k)
                acc += static_cast<__int128>(t_[idx(i, j, k)]) * d1[static_cast<std::size_t>(i)] *
                       d2[static_cast<std::size_t>(j)] * d3[static_cast<std::size_t>(k)];
        }
    }
    return static_cast<long long>(acc);
}

TripleTable TripleTable::blowup_p3_two_lines() {
    TripleTable t({"L", "E1", "E2"});
    t.set_product(0, 0, 0, 1);  // L^3
    t.set_product(0, 1, 1, -1); // L.E1^2
    t.set_product(0, 2, 2, -1); // L.E2^2
    t.set_product(1, 1, 1, -2); // E1^3
    t.set_product(2, 2, 2, -2); // E2^3
    // L^2.Ei, L.E1.E2, E1^2.E2, E1.E2^2 all vanish (defaults)
    return t;
}

long long fano_genus(const TripleTable& table, const std::vector<long long>& anticanonical) {
    const long long cube = table.triple(anticanonical, anticanonical, anticanonical);
    if (cube < 0)
        throw DomainError(errkind::negative_cube, "(-K)^3 = " + std::to_string(cube));
    if (cube % 2 != 0)
        throw DomainError(errkind::odd_cube, "(-K)^3 = " + std::to_string(cube) + " is odd");
    return cube / 2 + 1;
}

} // namespace mukai
