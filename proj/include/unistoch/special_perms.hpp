#pragma once

#include "unistoch/permutation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace unistoch {

enum class SpecialPerm { pi_u, phi_u, varphi_u, pi_o, phi_o, varphi_o, pi_bdi };

inline SpecialPerm special_perm_from_name(const std::string& name) {
    if (name == "pi_U") return SpecialPerm::pi_u;
    if (name == "phi_U") return SpecialPerm::phi_u;
    if (name == "varphi_U") return SpecialPerm::varphi_u;
    if (name == "pi_O") return SpecialPerm::pi_o;
    if (name == "phi_O") return SpecialPerm::phi_o;
    if (name == "varphi_O") return SpecialPerm::varphi_o;
    if (name == "pi_BDI") return SpecialPerm::pi_bdi;
    throw std::invalid_argument("unknown special permutation: " + name);
}

/// The fixed permutations that encode index-string patterns in the trace and
/// singular-value contractions:
///   pi_U      = (1 2 ... n)                      in S_n
///   phi_U     = (1 2)(3 4)...(2n-1 2n)           in S_2n
///   varphi_U  = (2 3)(4 5)...(2n 1)              in S_2n
///   pi_O      = (1 2 ... 2n)^2                   in S_2n
///   phi_O     = (1 2 3 4)(5 6 7 8)...            in S_4n
///   varphi_O  = (1 2 4n-1 4n)(3 4 5 6)...        in S_4n
///   pi_BDI    = prod_k (4k-2 4k 4k+1 4k+3)       in S_4n, entries mod 4n
inline Permutation special_permutation(SpecialPerm which, int n) {
    if (n < 1) throw std::invalid_argument("special_permutation: n must be >= 1");
    switch (which) {
    case SpecialPerm::pi_u: {
        std::vector<int> cyc(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
        return Permutation::from_cycles(n, {cyc});
    }
    case SpecialPerm::phi_u: {
        std::vector<std::vector<int>> cycles;
        for (int k = 1; k <= n; ++k) cycles.push_back({2 * k - 1, 2 * k});
        return Permutation::from_cycles(2 * n, cycles);
    }
    case SpecialPerm::varphi_u: {
        std::vector<std::vector<int>> cycles;
        for (int k = 1; k < n; ++k) cycles.push_back({2 * k, 2 * k + 1});
        cycles.push_back({2 * n, 1});
        return Permutation::from_cycles(2 * n, cycles);
    }
    case SpecialPerm::pi_o: {
        Permutation full = special_permutation(SpecialPerm::pi_u, 2 * n);
        return full * full;
    }
    case SpecialPerm::phi_o: {
        std::vector<std::vector<int>> cycles;
        for (int k = 0; k < n; ++k) cycles.push_back({4 * k + 1, 4 * k + 2, 4 * k + 3, 4 * k + 4});
        return Permutation::from_cycles(4 * n, cycles);
    }
    case SpecialPerm::varphi_o: {
        std::vector<std::vector<int>> cycles;
        cycles.push_back({1, 2, 4 * n - 1, 4 * n});
        for (int k = 1; k < n; ++k) cycles.push_back({4 * k - 1, 4 * k, 4 * k + 1, 4 * k + 2});
        return Permutation::from_cycles(4 * n, cycles);
    }
    case SpecialPerm::pi_bdi: {
        // Literal entries above 4n wrap around modulo 4n; this is the unique
        // reading that leaves the chiral-orthogonal index strings invariant.
        auto wrap = [&](int x) { return (x - 1) % (4 * n) + 1; };
        std::vector<std::vector<int>> cycles;
        for (int k = 1; k <= n; ++k)
            cycles.push_back({wrap(4 * k - 2), wrap(4 * k), wrap(4 * k + 1), wrap(4 * k + 3)});
        return Permutation::from_cycles(4 * n, cycles);
    }
    }
    throw std::logic_error("special_permutation: unreachable");
}

} // namespace unistoch
