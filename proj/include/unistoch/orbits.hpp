#pragma once

#include "unistoch/permutation.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace unistoch {

/// Union-find over {0..n-1} with path halving.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }

    void reset() {
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(b)] = a;
    }

    int component_count() {
        int c = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }

    /// Sizes of all components, unsorted.
    std::vector<int> component_sizes() {
        std::vector<int> count(parent_.size(), 0);
        for (std::size_t i = 0; i < parent_.size(); ++i) ++count[static_cast<std::size_t>(find(static_cast<int>(i)))];
        std::vector<int> sizes;
        for (int c : count)
            if (c > 0) sizes.push_back(c);
        return sizes;
    }

private:
    std::vector<int> parent_;
};

/// Number of orbits of <generators> acting on {1..k}. Works by union-find
/// over the generator images; the generated group itself is never expanded.
inline int orbit_count(std::span<const Permutation> generators, int k) {
    for (const Permutation& g : generators)
        if (g.degree() != k)
            throw std::invalid_argument("orbit_count: generator degree mismatch");
    DisjointSets ds(k);
    for (const Permutation& g : generators)
        for (int i = 0; i < k; ++i) ds.unite(i, g(i));
    return ds.component_count();
}

inline int orbit_count(std::initializer_list<Permutation> generators, int k) {
    return orbit_count(std::span<const Permutation>(generators.begin(), generators.size()), k);
}

} // namespace unistoch
