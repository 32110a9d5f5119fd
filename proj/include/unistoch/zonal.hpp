#pragma once

#include "unistoch/characters.hpp"
#include "unistoch/matching.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace unistoch {

namespace detail {

/// A permutation in S_2n whose coset type is mu: a block-diagonal product of
/// full cycles of lengths 2*mu_i.
inline Permutation coset_type_representative(const Partition& mu) {
    const int n = mu.weight();
    std::vector<std::vector<int>> cycles;
    int base = 0;
    for (int i = 0; i < mu.length(); ++i) {
        std::vector<int> cyc(static_cast<std::size_t>(2 * mu[i]));
        for (int j = 0; j < 2 * mu[i]; ++j) cyc[static_cast<std::size_t>(j)] = base + j + 1;
        cycles.push_back(std::move(cyc));
        base += 2 * mu[i];
    }
    return Permutation::from_cycles(2 * n, cycles);
}

/// Cycle-type histogram of { tau_mu * xi : xi in H_n }, cached per mu.
/// This is the expensive part of the zonal spherical function; every lambda
/// reuses it.
inline const std::vector<std::pair<Partition, long long>>& zonal_class_profile(const Partition& mu) {
    static std::map<Partition, std::vector<std::pair<Partition, long long>>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;

    const int n = mu.weight();
    const Permutation tau = coset_type_representative(mu);
    std::map<Partition, long long> hist;
    for_each_hyperoctahedral(n, [&](const Permutation& xi) { ++hist[(tau * xi).cycle_type()]; });
    std::vector<std::pair<Partition, long long>> profile(hist.begin(), hist.end());
    return cache.emplace(mu, std::move(profile)).first->second;
}

} // namespace detail

/// Zonal spherical function omega_lambda(mu) of the Gelfand pair
/// (S_2n, H_n):  (1/|H_n|) * sum_{xi in H_n} chi_{2 lambda}(tau xi),
/// with tau any permutation of coset type mu. Normalized so that
/// omega_lambda(identity coset type) = 1; this is the normalization under
/// which W^O([1]) = 1/N. Depends only on the coset type; cached per
/// (lambda, mu).
inline Rational zonal_spherical(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("zonal_spherical: weight mismatch");
    const int n = lam.weight();
    if (n == 0) return 1;

    static std::map<std::pair<Partition, Partition>, Rational> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(lam, mu);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const Partition two_lam = lam.doubled();
    BigInt sum = 0;
    for (const auto& [type, count] : detail::zonal_class_profile(mu))
        sum += BigInt(count) * character(two_lam, type);

    const BigInt h_order = factorial(n) << n; // 2^n n!
    Rational omega = Rational(sum, h_order);

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, omega);
    return omega;
}

/// Direct evaluation from an arbitrary permutation, via its coset type.
inline Rational zonal_spherical(const Partition& lam, const Permutation& tau) {
    return zonal_spherical(lam, coset_type(tau));
}

} // namespace unistoch
