#pragma once

#include "unistoch/partition.hpp"
#include "unistoch/rational.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unistoch {

namespace detail {

struct PartitionPairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& pp) const {
        PartitionHash h;
        return h(pp.first) * 0x9E3779B97F4A7C15ull + h(pp.second);
    }
};

// First-column hook lengths ("beta numbers") of lambda, strictly decreasing.
inline std::vector<int> beta_numbers(const Partition& lam) {
    const int l = lam.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lam[i] + (l - 1 - i);
    return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

} // namespace detail

/// Irreducible character chi_lambda(mu) of S_n, by the Murnaghan-Nakayama
/// rule on beta numbers, memoized. Both arguments must partition the same n.
inline long long character(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character: lambda and mu must partition the same n");
    if (lam.weight() == 0) return 1;

    static std::unordered_map<std::pair<Partition, Partition>, long long, detail::PartitionPairHash> memo;
    static std::mutex memo_mutex;
    const auto key = std::make_pair(lam, mu);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // strip the largest part of mu as a border strip of lambda, all ways
    const int r = mu[0];
    std::vector<int> mu_rest_parts(mu.parts().begin() + 1, mu.parts().end());
    const Partition mu_rest(std::move(mu_rest_parts));

    const std::vector<int> beta = detail::beta_numbers(lam);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        const long long sub = character(detail::partition_from_beta(std::move(nb)), mu_rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, total);
    return total;
}

/// Dimension d_lambda = chi_lambda(1^n), by the hook length formula.
inline long long dim(const Partition& lam) {
    const int n = lam.weight();
    if (n == 0) return 1;
    const int l = lam.length();
    std::vector<int> conj(static_cast<std::size_t>(lam[0]), 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < lam[i]; ++j) ++conj[static_cast<std::size_t>(j)];
    BigInt num = factorial(n);
    BigInt den = 1;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < lam[i]; ++j)
            den *= (lam[i] - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
    BigInt d = num / den;
    return static_cast<long long>(d);
}

/// z_mu = prod_j j^{a_j} a_j!  (order of the centralizer of class mu).
inline BigInt centralizer_order(const Partition& mu) {
    BigInt z = 1;
    int run_len = 0;
    int prev = -1;
    for (int p : mu.parts()) {
        z *= p;
        if (p == prev) {
            ++run_len;
            z *= run_len;
        } else {
            prev = p;
            run_len = 1;
        }
    }
    return z;
}

/// |C_mu| = n! / z_mu, the size of the conjugacy class with cycle type mu.
inline BigInt class_size(const Partition& mu) {
    return factorial(mu.weight()) / centralizer_order(mu);
}

} // namespace unistoch
