#pragma once

#include "unistoch/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unistoch {

/// Permutation of {1..k}, stored 0-based internally. Cycle notation is used
/// for all text I/O, e.g. "(1 2)(3 4)".
class Permutation {
public:
    Permutation() = default; // degree 0

    /// Identity of the given degree.
    explicit Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    /// From 0-based image list; validates bijectivity.
    static Permutation from_images0(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        const int k = p.degree();
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        for (int v : p.img_) {
            if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return p;
    }

    /// From 1-based image list (the external convention).
    static Permutation from_images(const std::vector<int>& one_based) {
        std::vector<int> img(one_based.size());
        for (std::size_t i = 0; i < one_based.size(); ++i) img[i] = one_based[i] - 1;
        return from_images0(std::move(img));
    }

    /// From disjoint cycles over {1..degree}. Points not mentioned are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Permutation p(degree);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i] - 1;
                int to = cyc[(i + 1) % cyc.size()] - 1;
                if (from < 0 || from >= degree || to < 0 || to >= degree)
                    throw std::invalid_argument("Permutation: cycle entry out of range");
                p.img_[static_cast<std::size_t>(from)] = to;
            }
        }
        // re-validate: overlapping cycles would break bijectivity
        return from_images0(std::move(p.img_));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images0() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    /// Composition: (a*b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree())
            throw std::invalid_argument("Permutation: degree mismatch in composition");
        Permutation r;
        r.img_.resize(a.img_.size());
        for (int i = 0; i < a.degree(); ++i) r.img_[static_cast<std::size_t>(i)] = a(b(i));
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (int i = 0; i < degree(); ++i) r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        return r;
    }

    /// Sorted cycle lengths; a partition of the degree.
    Partition cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> lens;
        for (int i = 0; i < degree(); ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                j = img_[static_cast<std::size_t>(j)];
                ++len;
            }
            lens.push_back(len);
        }
        return Partition::from_unsorted(std::move(lens));
    }

    /// +1 for even permutations, -1 odd; multiplicative under composition.
    int sign() const {
        std::vector<char> seen(img_.size(), 0);
        int parity = 0;
        for (int i = 0; i < degree(); ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                j = img_[static_cast<std::size_t>(j)];
                ++len;
            }
            parity ^= (len - 1) & 1;
        }
        return parity ? -1 : 1;
    }

    /// Cycle notation with 1-based points; identity prints as "()".
    std::string cycle_string() const {
        std::vector<char> seen(img_.size(), 0);
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < degree(); ++i) {
            if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) {
                seen[static_cast<std::size_t>(i)] = 1;
                continue;
            }
            os << '(';
            int j = i;
            bool first = true;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                if (!first) os << ' ';
                os << (j + 1);
                first = false;
                j = img_[static_cast<std::size_t>(j)];
            }
            os << ')';
            any = true;
        }
        if (!any) return "()";
        return os.str();
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> img_;
};

/// Enumerates all of S_k in a fixed deterministic order.
template <class F>
void for_each_permutation(int k, F&& f) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    do {
        f(Permutation::from_images0(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

} // namespace unistoch
