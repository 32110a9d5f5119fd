#pragma once

#include "unistoch/orbits.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unistoch {

/// Perfect matching of {1..2n}: n unordered pairs. Blocks are kept sorted
/// (lo < hi within a block, blocks ordered by lo), which also fixes the
/// canonical coset representative in S_2n / H_n.
class Matching {
public:
    Matching() = default;

    static Matching from_blocks(std::vector<std::pair<int, int>> blocks0) {
        Matching m;
        m.blocks_ = std::move(blocks0);
        for (auto& [a, b] : m.blocks_)
            if (a > b) std::swap(a, b);
        std::sort(m.blocks_.begin(), m.blocks_.end());
        const int k = 2 * static_cast<int>(m.blocks_.size());
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        for (auto [a, b] : m.blocks_) {
            if (a < 0 || b >= k || a == b || seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
                throw std::invalid_argument("Matching: blocks must partition {1..2n}");
            seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
        }
        return m;
    }

    /// The trivial matching {1,2},{3,4},...,{2n-1,2n}.
    static Matching trivial(int n) {
        std::vector<std::pair<int, int>> blocks;
        blocks.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) blocks.emplace_back(2 * i, 2 * i + 1);
        return from_blocks(std::move(blocks));
    }

    int pair_count() const { return static_cast<int>(blocks_.size()); }
    int point_count() const { return 2 * pair_count(); }
    const std::vector<std::pair<int, int>>& blocks0() const { return blocks_; }

    /// Fixed-point-free involution whose 2-cycles are the blocks.
    Permutation fpf_involution() const {
        std::vector<int> img(static_cast<std::size_t>(point_count()));
        for (auto [a, b] : blocks_) {
            img[static_cast<std::size_t>(a)] = b;
            img[static_cast<std::size_t>(b)] = a;
        }
        return Permutation::from_images0(std::move(img));
    }

    /// Minimal-lexicographic representative of the H_n-coset: maps the
    /// trivial matching onto this one, block by sorted block.
    Permutation canonical_rep() const {
        std::vector<int> img(static_cast<std::size_t>(point_count()));
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            img[2 * i] = blocks_[i].first;
            img[2 * i + 1] = blocks_[i].second;
        }
        return Permutation::from_images0(std::move(img));
    }

    /// Image matching sigma(m): blocks mapped pointwise.
    Matching apply(const Permutation& sigma) const {
        if (sigma.degree() != point_count())
            throw std::invalid_argument("Matching::apply: degree mismatch");
        std::vector<std::pair<int, int>> blocks;
        blocks.reserve(blocks_.size());
        for (auto [a, b] : blocks_) blocks.emplace_back(sigma(a), sigma(b));
        return from_blocks(std::move(blocks));
    }

    friend bool operator==(const Matching& a, const Matching& b) = default;

private:
    std::vector<std::pair<int, int>> blocks_;
};

namespace detail {
template <class F>
void matchings_rec(std::vector<int>& free_points, std::vector<std::pair<int, int>>& acc, F& f) {
    if (free_points.empty()) {
        f(Matching::from_blocks(acc));
        return;
    }
    // pair the smallest free point with every other free point
    int a = free_points.front();
    for (std::size_t j = 1; j < free_points.size(); ++j) {
        int b = free_points[j];
        std::vector<int> rest;
        rest.reserve(free_points.size() - 2);
        for (std::size_t t = 1; t < free_points.size(); ++t)
            if (t != j) rest.push_back(free_points[t]);
        acc.emplace_back(a, b);
        matchings_rec(rest, acc, f);
        acc.pop_back();
    }
}
} // namespace detail

/// Enumerates all (2n-1)!! matchings of {1..2n}, each exactly once, in a
/// deterministic order (lexicographic by the partner of the smallest point).
template <class F>
void for_each_matching(int n, F&& f) {
    if (n < 0) throw std::invalid_argument("for_each_matching: n must be >= 0");
    std::vector<int> points(static_cast<std::size_t>(2 * n));
    std::iota(points.begin(), points.end(), 0);
    std::vector<std::pair<int, int>> acc;
    detail::matchings_rec(points, acc, f);
}

inline std::vector<Matching> all_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
    return out;
}

/// Enumerates the hyperoctahedral group H_n: all n! 2^n stabilizers of the
/// trivial matching inside S_2n.
template <class F>
void for_each_hyperoctahedral(int n, F&& f) {
    std::vector<int> block_order(static_cast<std::size_t>(n));
    std::iota(block_order.begin(), block_order.end(), 0);
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    do {
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            for (int i = 0; i < n; ++i) {
                int target = block_order[static_cast<std::size_t>(i)];
                bool swap_pair = (flips >> i) & 1u;
                img[static_cast<std::size_t>(2 * i)] = 2 * target + (swap_pair ? 1 : 0);
                img[static_cast<std::size_t>(2 * i + 1)] = 2 * target + (swap_pair ? 0 : 1);
            }
            f(Permutation::from_images0(img));
        }
    } while (std::next_permutation(block_order.begin(), block_order.end()));
}

inline std::vector<Permutation> hyperoctahedral(int n) {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(1) << n);
    for_each_hyperoctahedral(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

/// Coset type of two matchings: the union of their edges decomposes into
/// even cycles; the half-lengths, sorted decreasing, partition n.
inline Partition coset_type_of_matchings(const Matching& m1, const Matching& m2) {
    if (m1.point_count() != m2.point_count())
        throw std::invalid_argument("coset_type_of_matchings: size mismatch");
    const Permutation f1 = m1.fpf_involution();
    const Permutation f2 = m2.fpf_involution();
    const int k = m1.point_count();
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> halves;
    for (int i = 0; i < k; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        // alternate edges of m1 and m2 until the cycle closes
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            int j2 = f1(j);
            seen[static_cast<std::size_t>(j2)] = 1;
            j = f2(j2);
            ++len;
        }
        halves.push_back(len);
    }
    return Partition::from_unsorted(std::move(halves));
}

/// Coset type [sigma] of a permutation of even degree 2n: half the component
/// sizes of the graph joining the trivial matching with sigma(trivial).
/// Constant on double cosets H_n sigma H_n.
inline Partition coset_type(const Permutation& sigma) {
    if (sigma.degree() % 2 != 0)
        throw std::invalid_argument("coset_type: degree must be even");
    const int n = sigma.degree() / 2;
    const Matching t = Matching::trivial(n);
    return coset_type_of_matchings(t, t.apply(sigma));
}

} // namespace unistoch
