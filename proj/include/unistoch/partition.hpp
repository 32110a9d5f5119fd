#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unistoch {

/// Integer partition: a weakly decreasing list of positive parts. Labels
/// irreducible representations, conjugacy classes (cycle types) and
/// hyperoctahedral double cosets (coset types).
class Partition {
public:
    Partition() = default; // the empty partition of 0

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// Builds from an arbitrary list of positive integers, sorting as needed.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    /// 2*lambda: every part doubled (labels the irrep chi_{2 lambda}).
    Partition doubled() const {
        std::vector<int> p = parts_;
        for (int& x : p) x *= 2;
        return Partition(std::move(p));
    }

    /// multiplicity[j] = number of parts equal to j, for j = 1..weight.
    std::vector<int> multiplicities() const {
        std::vector<int> mult(static_cast<std::size_t>(weight()) + 1, 0);
        for (int p : parts_) ++mult[static_cast<std::size_t>(p)];
        return mult;
    }

    // Canonical table order: lexicographic on the decreasing part lists, so
    // for n=4: [1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4].
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

namespace detail {
// descending part lists, emitted in ascending lexicographic order
inline void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace detail

/// All partitions of n in canonical table order ([1^n] first, [n] last).
inline std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
    if (n == 0) return {Partition{}};
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_rec(n, n, acc, out);
    return out;
}

/// Index of a partition within partitions(weight), by binary search.
inline int partition_index(const std::vector<Partition>& all, const Partition& p) {
    auto it = std::lower_bound(all.begin(), all.end(), p);
    if (it == all.end() || *it != p) throw std::logic_error("partition_index: not found");
    return static_cast<int>(it - all.begin());
}

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace unistoch
