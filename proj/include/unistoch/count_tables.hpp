#pragma once

#include "unistoch/characters.hpp"
#include "unistoch/errors.hpp"
#include "unistoch/matching.hpp"
#include "unistoch/orbits.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/permutation.hpp"
#include "unistoch/rational.hpp"
#include "unistoch/special_perms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace unistoch {

enum class TableFamily { FU, GU, FO, GO, FAI, FAII, FAIII, FBDI };

inline std::string family_name(TableFamily f) {
    switch (f) {
    case TableFamily::FU: return "FU";
    case TableFamily::GU: return "GU";
    case TableFamily::FO: return "FO";
    case TableFamily::GO: return "GO";
    case TableFamily::FAI: return "FAI";
    case TableFamily::FAII: return "FAII";
    case TableFamily::FAIII: return "FAIII";
    case TableFamily::FBDI: return "FBDI";
    }
    return "?";
}

inline TableFamily family_from_name(const std::string& s) {
    if (s == "FU") return TableFamily::FU;
    if (s == "GU") return TableFamily::GU;
    if (s == "FO") return TableFamily::FO;
    if (s == "GO") return TableFamily::GO;
    if (s == "FAI") return TableFamily::FAI;
    if (s == "FAII") return TableFamily::FAII;
    if (s == "FAIII") return TableFamily::FAIII;
    if (s == "FBDI") return TableFamily::FBDI;
    throw std::invalid_argument("unknown table family: " + s);
}

/// One of the orbit-count tables behind the exact moment formulas. For the
/// F families, cells[m-1][c] counts objects classified with m orbits in the
/// partition column c; the G families are sparse over (m, k) row pairs.
struct CountTable {
    TableFamily family{};
    int n{};
    std::vector<Partition> columns;
    int row_count{};
    std::vector<std::vector<long long>> cells;
    std::map<std::pair<int, int>, std::vector<long long>> g_cells;
    // FAII only: the two underlying counting problems before the difference
    std::vector<std::vector<long long>> cells_plus, cells_minus;
    BigInt objects_classified{};

    bool is_g() const { return family == TableFamily::GU || family == TableFamily::GO; }

    BigInt total() const {
        BigInt t = 0;
        if (is_g()) {
            for (const auto& [mk, row] : g_cells)
                for (long long v : row) t += v;
        } else {
            for (const auto& row : cells)
                for (long long v : row) t += v;
        }
        return t;
    }

    long long cell(int m, int col) const { return cells[m - 1][col]; }
};

/// Estimated number of elementary classifications for enumerate_table.
inline double enumeration_cost(TableFamily f, int n) {
    auto dfact = [](int k) { // (k-1)!! for even k
        double r = 1;
        for (int i = k - 1; i >= 3; i -= 2) r *= i;
        return r;
    };
    auto fact = [](int k) {
        double r = 1;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    switch (f) {
    case TableFamily::FU: return fact(n) * fact(n);
    case TableFamily::GU: return fact(2 * n) * fact(2 * n);
    case TableFamily::FO: return dfact(2 * n) * dfact(2 * n);
    case TableFamily::GO: return dfact(4 * n) * dfact(4 * n);
    case TableFamily::FAI:
    case TableFamily::FAII:
    case TableFamily::FAIII: return fact(2 * n);
    case TableFamily::FBDI: return dfact(4 * n);
    }
    return 0;
}

namespace detail_tab {

constexpr int kMaxPoints = 16;

// sorted-descending partition packed as nibbles (parts <= 15, count <= 16)
inline std::uint64_t key_of_parts(const int* parts, int count) {
    std::uint64_t key = 0;
    for (int i = 0; i < count; ++i) key = (key << 4) | static_cast<std::uint64_t>(parts[i]);
    return key;
}

struct ColumnIndex {
    std::vector<std::pair<std::uint64_t, int>> keys; // sorted

    explicit ColumnIndex(const std::vector<Partition>& cols) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::array<int, kMaxPoints> buf{};
            const auto& p = cols[c].parts();
            std::copy(p.begin(), p.end(), buf.begin());
            keys.emplace_back(key_of_parts(buf.data(), static_cast<int>(p.size())), static_cast<int>(c));
        }
        std::sort(keys.begin(), keys.end());
    }

    int at(std::uint64_t key) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(key, 0));
        if (it == keys.end() || it->first != key) throw std::logic_error("ColumnIndex: unknown partition key");
        return it->second;
    }
};

inline void sort_desc(int* parts, int count) {
    std::sort(parts, parts + count, std::greater<int>());
}

// cycle type key of the permutation x -> img[x]
inline std::uint64_t cycle_type_key(const int* img, int k) {
    std::array<bool, kMaxPoints> seen{};
    std::array<int, kMaxPoints> parts{};
    int pc = 0;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j];
            ++len;
        }
        parts[pc++] = len;
    }
    sort_desc(parts.data(), pc);
    return key_of_parts(parts.data(), pc);
}

inline int cycle_count(const int* img, int k) {
    std::array<bool, kMaxPoints> seen{};
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j];
        }
        ++cycles;
    }
    return cycles;
}

// coset type of a pair of matchings given as partner arrays: the union of
// their edges is a disjoint set of even cycles; key of half-lengths
inline std::uint64_t pair_coset_key(const std::int8_t* f1, const std::int8_t* f2, int points) {
    std::array<bool, kMaxPoints> seen{};
    std::array<int, kMaxPoints> parts{};
    int pc = 0;
    for (int i = 0; i < points; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            const int j2 = f1[j];
            seen[j2] = true;
            j = f2[j2];
            ++len;
        }
        parts[pc++] = len;
    }
    sort_desc(parts.data(), pc);
    return key_of_parts(parts.data(), pc);
}

struct SmallDsu {
    std::array<std::int8_t, kMaxPoints> parent{};
    int n = 0;

    void reset(int k) {
        n = k;
        for (int i = 0; i < k; ++i) parent[i] = static_cast<std::int8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = static_cast<std::int8_t>(a);
    }
    int components() {
        int c = 0;
        for (int i = 0; i < n; ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

// orbit count of the group generated by the maps x -> a[x], x -> b[x]
template <class A, class B>
int orbits2(const A& a, const B& b, int k) {
    SmallDsu dsu;
    dsu.reset(k);
    for (int i = 0; i < k; ++i) {
        dsu.unite(i, a[i]);
        dsu.unite(i, b[i]);
    }
    return dsu.components();
}

inline std::vector<std::vector<int>> all_perm_images(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    do {
        out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// partner arrays of all matchings of {0..points-1}, flattened
inline std::vector<std::int8_t> all_matching_partners(int points) {
    std::vector<std::int8_t> flat;
    std::array<std::int8_t, kMaxPoints> partner{};
    std::array<bool, kMaxPoints> used{};
    auto rec = [&](auto&& self, int paired) -> void {
        if (paired == points) {
            flat.insert(flat.end(), partner.begin(), partner.begin() + points);
            return;
        }
        int a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (int b = a + 1; b < points; ++b) {
            if (used[b]) continue;
            used[b] = true;
            partner[a] = static_cast<std::int8_t>(b);
            partner[b] = static_cast<std::int8_t>(a);
            self(self, paired + 2);
            used[b] = false;
        }
        used[a] = false;
    };
    rec(rec, 0);
    return flat;
}

// runs fn(shard_index) on a pool of threads; shards are independent
template <class Fn>
void run_sharded(int shard_count, int threads, Fn&& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, shard_count);
    if (threads == 1) {
        for (int s = 0; s < shard_count; ++s) fn(s);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex next_mutex;
    int next = 0;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                int s;
                {
                    std::lock_guard<std::mutex> lock(next_mutex);
                    if (next >= shard_count) return;
                    s = next++;
                }
                fn(s);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// enumerates sigma in S_k with sigma(0) = first, as raw image arrays
template <class Fn>
void for_each_perm_with_first(int k, int first, Fn&& fn) {
    std::vector<int> rest;
    for (int v = 0; v < k; ++v)
        if (v != first) rest.push_back(v);
    std::array<int, kMaxPoints> img{};
    img[0] = first;
    do {
        for (int i = 1; i < k; ++i) img[i] = rest[i - 1];
        fn(img.data());
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// enumerates matchings of {0..points-1} with partner(0) = first
template <class Fn>
void for_each_matching_with_first(int points, int first, Fn&& fn) {
    std::array<std::int8_t, kMaxPoints> partner{};
    std::array<bool, kMaxPoints> used{};
    partner[0] = static_cast<std::int8_t>(first);
    partner[first] = 0;
    used[0] = used[first] = true;
    auto rec = [&](auto&& self, int paired) -> void {
        if (paired == points) {
            fn(partner.data());
            return;
        }
        int a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (int b = a + 1; b < points; ++b) {
            if (used[b]) continue;
            used[b] = true;
            partner[a] = static_cast<std::int8_t>(b);
            partner[b] = static_cast<std::int8_t>(a);
            self(self, paired + 2);
            used[b] = false;
        }
        used[a] = false;
    };
    rec(rec, 2);
}

using Grid = std::vector<std::vector<long long>>;

inline Grid make_grid(int rows, int cols) {
    return Grid(rows, std::vector<long long>(cols, 0));
}

inline void add_grid(Grid& into, const Grid& from) {
    for (std::size_t r = 0; r < into.size(); ++r)
        for (std::size_t c = 0; c < into[r].size(); ++c) into[r][c] += from[r][c];
}

} // namespace detail_tab

namespace detail_tab {

inline CountTable enumerate_fu(int n, int threads) {
    CountTable t;
    t.family = TableFamily::FU;
    t.n = n;
    t.columns = partitions(n);
    t.row_count = n;
    const ColumnIndex colidx(t.columns);

    const auto perms = all_perm_images(n);
    const int count = static_cast<int>(perms.size());
    const auto pi = special_permutation(SpecialPerm::pi_u, n).images0();
    std::vector<int> pi_inv(n);
    for (int i = 0; i < n; ++i) pi_inv[pi[i]] = i;

    // conj[s][x] = pi^-1(sigma^-1(pi(x)))
    std::vector<std::vector<int>> conj(perms.size(), std::vector<int>(n));
    for (int s = 0; s < count; ++s) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perms[s][i]] = i;
        for (int x = 0; x < n; ++x) conj[s][x] = pi_inv[inv[pi[x]]];
    }

    std::vector<Grid> shard_grids(count);
    run_sharded(count, threads, [&](int s) {
        Grid grid = make_grid(t.row_count, static_cast<int>(t.columns.size()));
        const auto& cs = conj[s];
        const auto& sigma = perms[s];
        std::array<int, kMaxPoints> prod{};
        for (int tt = 0; tt < count; ++tt) {
            const auto& tau = perms[tt];
            for (int x = 0; x < n; ++x) prod[x] = cs[tau[x]];
            const int col = colidx.at(cycle_type_key(prod.data(), n));
            const int m = orbits2(sigma, tau, n);
            ++grid[m - 1][col];
        }
        shard_grids[s] = std::move(grid);
    });
    t.cells = make_grid(t.row_count, static_cast<int>(t.columns.size()));
    for (const auto& g : shard_grids) add_grid(t.cells, g);
    t.objects_classified = BigInt(count) * count;
    return t;
}

inline CountTable enumerate_gu(int n, int threads) {
    CountTable t;
    t.family = TableFamily::GU;
    t.n = n;
    const int k = 2 * n;
    t.columns = partitions(k);
    t.row_count = n;
    const ColumnIndex colidx(t.columns);

    const auto perms = all_perm_images(k);
    const int count = static_cast<int>(perms.size());
    const auto phi = special_permutation(SpecialPerm::phi_u, n).images0();
    const auto varphi = special_permutation(SpecialPerm::varphi_u, n).images0();

    std::vector<std::vector<int>> inv(perms.size(), std::vector<int>(k));
    std::vector<int> m_orb(perms.size()), k_orb(perms.size());
    for (int s = 0; s < count; ++s) {
        for (int i = 0; i < k; ++i) inv[s][perms[s][i]] = i;
        m_orb[s] = orbits2(perms[s], phi, k);
        k_orb[s] = orbits2(perms[s], varphi, k);
    }

    using SparseGrid = std::map<std::pair<int, int>, std::vector<long long>>;
    std::vector<SparseGrid> shard_grids(count);
    run_sharded(count, threads, [&](int s) {
        SparseGrid grid;
        const auto& is = inv[s];
        const int ms = m_orb[s];
        std::array<int, kMaxPoints> prod{};
        for (int tt = 0; tt < count; ++tt) {
            const auto& tau = perms[tt];
            for (int x = 0; x < k; ++x) prod[x] = is[tau[x]];
            const int col = colidx.at(cycle_type_key(prod.data(), k));
            auto& row = grid[{ms, k_orb[tt]}];
            if (row.empty()) row.assign(t.columns.size(), 0);
            ++row[col];
        }
        shard_grids[s] = std::move(grid);
    });
    for (const auto& g : shard_grids)
        for (const auto& [mk, row] : g) {
            auto& dst = t.g_cells[mk];
            if (dst.empty()) dst.assign(t.columns.size(), 0);
            for (std::size_t c = 0; c < row.size(); ++c) dst[c] += row[c];
        }
    t.objects_classified = BigInt(count) * count;
    return t;
}

inline CountTable enumerate_fo(int n, int threads) {
    CountTable t;
    t.family = TableFamily::FO;
    t.n = n;
    const int points = 2 * n;
    t.columns = partitions(n);
    t.row_count = n;
    const ColumnIndex colidx(t.columns);

    const auto flat = all_matching_partners(points);
    const int count = static_cast<int>(flat.size()) / points;
    const auto pio = special_permutation(SpecialPerm::pi_o, n).images0();
    std::vector<int> pio_inv(points);
    for (int i = 0; i < points; ++i) pio_inv[pio[i]] = i;

    // partner array of pi_O(sigma(t)), per matching
    std::vector<std::int8_t> fpi(flat.size());
    for (int s = 0; s < count; ++s)
        for (int x = 0; x < points; ++x)
            fpi[s * points + x] = static_cast<std::int8_t>(
                pio[flat[s * points + pio_inv[x]]]);

    std::vector<Grid> shard_grids(count);
    run_sharded(count, threads, [&](int s) {
        Grid grid = make_grid(t.row_count, static_cast<int>(t.columns.size()));
        const std::int8_t* fs = flat.data() + s * points;
        const std::int8_t* fps = fpi.data() + s * points;
        SmallDsu dsu;
        for (int tt = 0; tt < count; ++tt) {
            const std::int8_t* ft = flat.data() + tt * points;
            dsu.reset(points);
            for (int x = 0; x < points; ++x) {
                dsu.unite(x, ft[x]);
                dsu.unite(x, fps[x]);
                dsu.unite(x, x ^ 1); // phi_U
            }
            const int m = dsu.components();
            const int col = colidx.at(pair_coset_key(fs, ft, points));
            ++grid[m - 1][col];
        }
        shard_grids[s] = std::move(grid);
    });
    t.cells = make_grid(t.row_count, static_cast<int>(t.columns.size()));
    for (const auto& g : shard_grids) add_grid(t.cells, g);
    t.objects_classified = BigInt(count) * count;
    return t;
}

inline CountTable enumerate_go(int n, int threads) {
    CountTable t;
    t.family = TableFamily::GO;
    t.n = n;
    const int points = 4 * n;
    t.columns = partitions(2 * n);
    t.row_count = n;
    const ColumnIndex colidx(t.columns);

    const auto flat = all_matching_partners(points);
    const int count = static_cast<int>(flat.size()) / points;
    const auto phio = special_permutation(SpecialPerm::phi_o, n).images0();
    const auto varphio = special_permutation(SpecialPerm::varphi_o, n).images0();

    std::vector<int> m_orb(count), k_orb(count);
    for (int s = 0; s < count; ++s) {
        const std::int8_t* f = flat.data() + s * points;
        m_orb[s] = orbits2(f, phio, points);
        k_orb[s] = orbits2(f, varphio, points);
    }

    // pre-size the sparse layout densely: m, k in 1..2n
    using SparseGrid = std::map<std::pair<int, int>, std::vector<long long>>;
    const int shard_count = 64;
    std::vector<SparseGrid> shard_grids(shard_count);
    run_sharded(shard_count, threads, [&](int shard) {
        SparseGrid grid;
        const int lo = static_cast<int>(static_cast<long long>(count) * shard / shard_count);
        const int hi = static_cast<int>(static_cast<long long>(count) * (shard + 1) / shard_count);
        for (int s = lo; s < hi; ++s) {
            const std::int8_t* fs = flat.data() + s * points;
            const int ms = m_orb[s];
            for (int tt = 0; tt < count; ++tt) {
                const std::int8_t* ft = flat.data() + tt * points;
                const int col = colidx.at(pair_coset_key(fs, ft, points));
                auto& row = grid[{ms, k_orb[tt]}];
                if (row.empty()) row.assign(t.columns.size(), 0);
                ++row[col];
            }
        }
        shard_grids[shard] = std::move(grid);
    });
    for (const auto& g : shard_grids)
        for (const auto& [mk, row] : g) {
            auto& dst = t.g_cells[mk];
            if (dst.empty()) dst.assign(t.columns.size(), 0);
            for (std::size_t c = 0; c < row.size(); ++c) dst[c] += row[c];
        }
    t.objects_classified = BigInt(count) * count;
    return t;
}

// FAI and FAII share one sweep over S_2n, split by sign
inline std::pair<CountTable, CountTable> enumerate_fai_faii(int n, int threads) {
    CountTable ai, aii;
    ai.family = TableFamily::FAI;
    aii.family = TableFamily::FAII;
    ai.n = aii.n = n;
    ai.columns = aii.columns = partitions(n);
    ai.row_count = aii.row_count = n;
    const ColumnIndex colidx(ai.columns);
    const int k = 2 * n;
    const auto varphi = special_permutation(SpecialPerm::varphi_u, n).images0();
    const int cols = static_cast<int>(ai.columns.size());

    std::vector<Grid> plus_grids(k), minus_grids(k);
    run_sharded(k, threads, [&](int first) {
        Grid plus = make_grid(n, cols), minus = make_grid(n, cols);
        std::array<std::int8_t, kMaxPoints> ps{};
        for_each_perm_with_first(k, first, [&](const int* img) {
            // partner array of sigma(t): blocks {img[2i], img[2i+1]}
            for (int i = 0; i < n; ++i) {
                ps[img[2 * i]] = static_cast<std::int8_t>(img[2 * i + 1]);
                ps[img[2 * i + 1]] = static_cast<std::int8_t>(img[2 * i]);
            }
            std::array<std::int8_t, kMaxPoints> triv{};
            for (int x = 0; x < k; ++x) triv[x] = static_cast<std::int8_t>(x ^ 1);
            const int col = colidx.at(pair_coset_key(triv.data(), ps.data(), k));
            const int m = orbits2(img, varphi, k);
            const int parity = (k - cycle_count(img, k)) & 1;
            auto& grid = parity ? minus : plus;
            ++grid[m - 1][col];
        });
        plus_grids[first] = std::move(plus);
        minus_grids[first] = std::move(minus);
    });
    Grid plus = make_grid(n, cols), minus = make_grid(n, cols);
    for (const auto& g : plus_grids) add_grid(plus, g);
    for (const auto& g : minus_grids) add_grid(minus, g);

    // The AII difference table carries the (-1)^n prefactor of the moment
    // formula, so the assembled moment is plainly sum F * W * (2N)^m.
    const long long sgn = (n % 2 == 0) ? 1 : -1;
    ai.cells = make_grid(n, cols);
    aii.cells = make_grid(n, cols);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < cols; ++c) {
            ai.cells[r][c] = plus[r][c] + minus[r][c];
            aii.cells[r][c] = sgn * (plus[r][c] - minus[r][c]);
        }
    aii.cells_plus = plus;
    aii.cells_minus = std::move(minus);
    ai.objects_classified = aii.objects_classified = factorial(k);
    return {std::move(ai), std::move(aii)};
}

inline CountTable enumerate_faiii(int n, int threads) {
    CountTable t;
    t.family = TableFamily::FAIII;
    t.n = n;
    const int k = 2 * n;
    t.columns = partitions(k);
    t.row_count = n;
    const ColumnIndex colidx(t.columns);
    const auto phi = special_permutation(SpecialPerm::phi_u, n).images0();
    const auto varphi = special_permutation(SpecialPerm::varphi_u, n).images0();
    const int cols = static_cast<int>(t.columns.size());

    std::vector<Grid> shard_grids(k);
    run_sharded(k, threads, [&](int first) {
        Grid grid = make_grid(n, cols);
        std::array<int, kMaxPoints> sp{};
        for_each_perm_with_first(k, first, [&](const int* img) {
            const int col = colidx.at(cycle_type_key(img, k));
            for (int x = 0; x < k; ++x) sp[x] = img[phi[x]];
            const int m = orbits2(sp, varphi, k);
            ++grid[m - 1][col];
        });
        shard_grids[first] = std::move(grid);
    });
    t.cells = make_grid(n, cols);
    for (const auto& g : shard_grids) add_grid(t.cells, g);
    t.objects_classified = factorial(k);
    return t;
}

inline CountTable enumerate_fbdi(int n, int threads) {
    CountTable t;
    t.family = TableFamily::FBDI;
    t.n = n;
    const int points = 4 * n;
    t.columns = partitions(2 * n);
    t.row_count = 2 * n; // printed with 2n rows; only m <= n is ever populated
    const ColumnIndex colidx(t.columns);
    const auto pibdi = special_permutation(SpecialPerm::pi_bdi, n).images0();
    const int cols = static_cast<int>(t.columns.size());

    std::array<std::int8_t, kMaxPoints> triv{};
    for (int x = 0; x < points; ++x) triv[x] = static_cast<std::int8_t>(x ^ 1);

    std::vector<Grid> shard_grids(points);
    run_sharded(points - 1, threads, [&](int shard) {
        const int first = shard + 1;
        Grid grid = make_grid(t.row_count, cols);
        for_each_matching_with_first(points, first, [&](const std::int8_t* f) {
            const int col = colidx.at(pair_coset_key(triv.data(), f, points));
            const int m = orbits2(f, pibdi, points);
            ++grid[m - 1][col];
        });
        shard_grids[shard] = std::move(grid);
    });
    t.cells = make_grid(t.row_count, cols);
    for (int s = 0; s < points - 1; ++s) add_grid(t.cells, shard_grids[s]);
    t.objects_classified = double_factorial_odd(2 * n);
    return t;
}

} // namespace detail_tab

/// Solves the counting problem behind one family of tables by exhaustive
/// classification. Refuses with BudgetError when the estimated cost exceeds
/// the budget (elementary classifications).
inline CountTable enumerate_table(TableFamily family, int n, double budget = 2e7, int threads = 0) {
    if (n < 1) throw std::invalid_argument("enumerate_table: n must be >= 1");
    const double cost = enumeration_cost(family, n);
    if (cost > budget) {
        std::ostringstream os;
        os << "enumerate_table(" << family_name(family) << ", " << n << "): estimated cost " << cost
           << " classifications exceeds budget " << budget;
        throw BudgetError(os.str(), cost);
    }
    const int max_points = detail_tab::kMaxPoints;
    switch (family) {
    case TableFamily::FU: return detail_tab::enumerate_fu(n, threads);
    case TableFamily::GU:
        if (2 * n > max_points) throw std::invalid_argument("enumerate_table: GU degree too large");
        return detail_tab::enumerate_gu(n, threads);
    case TableFamily::FO:
        if (2 * n > max_points) throw std::invalid_argument("enumerate_table: FO degree too large");
        return detail_tab::enumerate_fo(n, threads);
    case TableFamily::GO:
        if (4 * n > max_points) throw std::invalid_argument("enumerate_table: GO degree too large");
        return detail_tab::enumerate_go(n, threads);
    case TableFamily::FAI: return detail_tab::enumerate_fai_faii(n, threads).first;
    case TableFamily::FAII: return detail_tab::enumerate_fai_faii(n, threads).second;
    case TableFamily::FAIII:
        if (2 * n > max_points) throw std::invalid_argument("enumerate_table: FAIII degree too large");
        return detail_tab::enumerate_faiii(n, threads);
    case TableFamily::FBDI:
        if (4 * n > max_points) throw std::invalid_argument("enumerate_table: FBDI degree too large");
        return detail_tab::enumerate_fbdi(n, threads);
    }
    throw std::logic_error("enumerate_table: unreachable");
}

/// Process-wide cache of enumerated tables.
class TableCache {
public:
    const CountTable& get(TableFamily family, int n, double budget = 2e7, int threads = 0) {
        const auto key = std::make_pair(family, n);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        // FAI and FAII come from the same sweep; cache both
        if (family == TableFamily::FAI || family == TableFamily::FAII) {
            const double cost = enumeration_cost(family, n);
            if (cost > budget) {
                std::ostringstream os;
                os << "enumerate_table(" << family_name(family) << ", " << n << "): estimated cost " << cost
                   << " exceeds budget " << budget;
                throw BudgetError(os.str(), cost);
            }
            auto [ai, aii] = detail_tab::enumerate_fai_faii(n, threads);
            std::lock_guard<std::mutex> lock(mutex_);
            map_.emplace(std::make_pair(TableFamily::FAI, n), std::move(ai));
            map_.emplace(std::make_pair(TableFamily::FAII, n), std::move(aii));
            return map_.at(key);
        }
        CountTable t = enumerate_table(family, n, budget, threads);
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.emplace(key, std::move(t)).first->second;
    }

private:
    std::map<std::pair<TableFamily, int>, CountTable> map_;
    std::mutex mutex_;
};

inline TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

struct ColumnCheck {
    Partition column;
    BigInt sum;
    BigInt expected;
    bool ok;
};

struct ChecksumReport {
    BigInt total;
    BigInt expected_total;
    bool total_ok;
    std::vector<ColumnCheck> columns;
    bool all_ok;
    std::string note;
};

namespace detail_tab {

/// Number of matchings of {1..2k} whose pair with the trivial matching has
/// coset type mu: |H_k| / (z_mu 2^l(mu)).
inline BigInt matchings_with_coset_type(const Partition& mu) {
    const int k = mu.weight();
    BigInt h = factorial(k) << k;
    return h / (centralizer_order(mu) * (BigInt(1) << mu.length()));
}

/// Number of permutations in S_2k with coset type mu: |H_k|^2 / (z_mu 2^l(mu)).
inline BigInt perms_with_coset_type(const Partition& mu) {
    const int k = mu.weight();
    BigInt h = factorial(k) << k;
    return h * h / (centralizer_order(mu) * (BigInt(1) << mu.length()));
}

} // namespace detail_tab

/// Verifies the family's total-count identity and per-column identities
/// against closed-form counts that do not involve the enumeration.
inline ChecksumReport table_checksums(const CountTable& t) {
    ChecksumReport rep;
    const int n = t.n;
    BigInt expected_total;
    switch (t.family) {
    case TableFamily::FU: expected_total = factorial(n) * factorial(n); break;
    case TableFamily::GU: expected_total = factorial(2 * n) * factorial(2 * n); break;
    case TableFamily::FO: expected_total = double_factorial_odd(n) * double_factorial_odd(n); break;
    case TableFamily::GO: expected_total = double_factorial_odd(2 * n) * double_factorial_odd(2 * n); break;
    case TableFamily::FAI:
    case TableFamily::FAII:
    case TableFamily::FAIII: expected_total = factorial(2 * n); break;
    case TableFamily::FBDI: expected_total = double_factorial_odd(2 * n); break;
    }
    rep.expected_total = expected_total;

    // FAII is a difference table; the count identity applies to the sum of
    // the two underlying problems
    if (t.family == TableFamily::FAII) {
        BigInt abs_total = 0;
        for (const auto& g : {&t.cells_plus, &t.cells_minus})
            for (const auto& row : *g)
                for (long long v : row) abs_total += v;
        rep.total = abs_total;
        rep.note = "total counts even plus odd solutions";
    } else {
        rep.total = t.total();
    }
    rep.total_ok = (rep.total == expected_total);

    auto column_sum = [&](std::size_t c) {
        BigInt s = 0;
        if (t.is_g()) {
            for (const auto& [mk, row] : t.g_cells) s += row[c];
        } else if (t.family == TableFamily::FAII) {
            for (const auto& row : t.cells_plus) s += row[c];
            for (const auto& row : t.cells_minus) s += row[c];
        } else {
            for (const auto& row : t.cells) s += row[c];
        }
        return s;
    };

    rep.all_ok = rep.total_ok;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        const Partition& lam = t.columns[c];
        BigInt expected;
        switch (t.family) {
        case TableFamily::FU: expected = factorial(n) * class_size(lam); break;
        case TableFamily::GU: expected = factorial(2 * n) * class_size(lam); break;
        case TableFamily::FO: expected = double_factorial_odd(n) * detail_tab::matchings_with_coset_type(lam); break;
        case TableFamily::GO: expected = double_factorial_odd(2 * n) * detail_tab::matchings_with_coset_type(lam); break;
        case TableFamily::FAI:
        case TableFamily::FAII: expected = detail_tab::perms_with_coset_type(lam); break;
        case TableFamily::FAIII: expected = class_size(lam); break;
        case TableFamily::FBDI: expected = detail_tab::matchings_with_coset_type(lam); break;
        }
        ColumnCheck cc{lam, column_sum(c), expected, false};
        cc.ok = (cc.sum == cc.expected);
        rep.all_ok = rep.all_ok && cc.ok;
        rep.columns.push_back(std::move(cc));
    }
    return rep;
}

} // namespace unistoch
