#pragma once

#include "unistoch/count_tables.hpp"
#include "unistoch/errors.hpp"
#include "unistoch/matching.hpp"
#include "unistoch/polynomial.hpp"
#include "unistoch/rational.hpp"
#include "unistoch/special_perms.hpp"
#include "unistoch/weingarten.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace unistoch {

enum class Ensemble { O, U, S, AI, AII, AIII, BDI, CII };
enum class MomentKind { Trace, Singular };
enum class MomentVariant { Full, Reduced, Shifted };

inline std::string ensemble_name(Ensemble e) {
    switch (e) {
    case Ensemble::O: return "O";
    case Ensemble::U: return "U";
    case Ensemble::S: return "S";
    case Ensemble::AI: return "AI";
    case Ensemble::AII: return "AII";
    case Ensemble::AIII: return "AIII";
    case Ensemble::BDI: return "BDI";
    case Ensemble::CII: return "CII";
    }
    return "?";
}

inline Ensemble ensemble_from_name(const std::string& s) {
    for (Ensemble e : {Ensemble::O, Ensemble::U, Ensemble::S, Ensemble::AI, Ensemble::AII,
                       Ensemble::AIII, Ensemble::BDI, Ensemble::CII})
        if (ensemble_name(e) == s) return e;
    throw std::invalid_argument("unknown ensemble: " + s);
}

inline bool is_chiral(Ensemble e) {
    return e == Ensemble::AIII || e == Ensemble::BDI || e == Ensemble::CII;
}

/// Symmetric-family matrices are symmetric, so tr (M M^T)^n = tr M^{2n}.
inline bool is_symmetric_family(Ensemble e) {
    return e == Ensemble::AI || e == Ensemble::AII || is_chiral(e);
}

/// What to compute: <tr M^n> or <tr (M M^T)^n>, full spectrum or with the
/// unit Perron-Frobenius contribution removed, or (chiral families) the
/// shifted moment <tr (M - alpha^2)^n> over the reduced spectrum.
struct MomentSpec {
    Ensemble ensemble{};
    MomentKind kind = MomentKind::Trace;
    int n = 1;
    MomentVariant variant = MomentVariant::Reduced;
    Rational dim;   // N; half the matrix side for S / AII / CII
    int a = -1, b = -1; // chiral signature, a + b = N
};

namespace detail_mom {

// sum of cells * W(column) * base^m over an F table
inline Rational assemble_f(const CountTable& t, const std::map<Partition, Rational>& w,
                           const Rational& base) {
    Rational sum = 0;
    for (int m = 1; m <= t.row_count; ++m) {
        Rational basepow = 1;
        for (int i = 0; i < m; ++i) basepow *= base;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            const long long cell = t.cell(m, static_cast<int>(c));
            if (cell == 0) continue;
            sum += Rational(cell) * w.at(t.columns[c]) * basepow;
        }
    }
    return sum;
}

inline Rational assemble_g(const CountTable& t, const std::map<Partition, Rational>& w,
                           const Rational& base) {
    Rational sum = 0;
    for (const auto& [mk, row] : t.g_cells) {
        Rational basepow = 1;
        for (int i = 0; i < mk.first + mk.second; ++i) basepow *= base;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 0) continue;
            sum += Rational(row[c]) * w.at(t.columns[c]) * basepow;
        }
    }
    return sum;
}

} // namespace detail_mom

/// Full trace or singular moment assembled from the orbit-count tables and
/// the exact Weingarten values. Throws BudgetError if the backing table is
/// infeasible, PoleError at a Weingarten pole.
inline Rational full_moment_from_tables(Ensemble e, MomentKind kind, int n, const Rational& N,
                                        int a, int b, double budget = 2e7, int threads = 0) {
    using detail_mom::assemble_f;
    using detail_mom::assemble_g;
    TableCache& cache = table_cache();

    if (is_symmetric_family(e) && kind == MomentKind::Singular)
        return full_moment_from_tables(e, MomentKind::Trace, 2 * n, N, a, b, budget, threads);

    switch (e) {
    case Ensemble::U:
        if (kind == MomentKind::Trace)
            return assemble_f(cache.get(TableFamily::FU, n, budget, threads), wg_u_table(n, N), N);
        return assemble_g(cache.get(TableFamily::GU, n, budget, threads), wg_u_table(2 * n, N), N);
    case Ensemble::O:
        if (kind == MomentKind::Trace)
            return assemble_f(cache.get(TableFamily::FO, n, budget, threads), wg_o_table(n, N), N);
        return assemble_g(cache.get(TableFamily::GO, n, budget, threads), wg_o_table(2 * n, N), N);
    case Ensemble::AI:
        return assemble_f(cache.get(TableFamily::FAI, n, budget, threads), wg_o_table(n, Rational(N + 1)), N);
    case Ensemble::AII:
        // the (-1)^n prefactor lives inside the table; the matrix side is 2N
        return assemble_f(cache.get(TableFamily::FAII, n, budget, threads),
                          wg_o_table(n, Rational(1 - 2 * N)), Rational(2 * N));
    case Ensemble::AIII: {
        if (a < 0 || b < 0 || Rational(a + b) != N)
            throw std::invalid_argument("AIII moment needs a + b = N");
        if (a == 0 || b == 0) return N; // U = +-identity, M = identity
        return assemble_f(cache.get(TableFamily::FAIII, n, budget, threads), wg_aiii_table(2 * n, a, b), N);
    }
    case Ensemble::BDI: {
        if (a < 0 || b < 0 || Rational(a + b) != N)
            throw std::invalid_argument("BDI moment needs a + b = N");
        if (a == 0 || b == 0) return N;
        return assemble_f(cache.get(TableFamily::FBDI, n, budget, threads), wg_bdi_table(2 * n, a, b), N);
    }
    case Ensemble::S:
        throw std::invalid_argument(
            "no orbit-count table route for the symplectic ensemble; use direct_contraction");
    case Ensemble::CII:
        throw std::invalid_argument("no exact Weingarten route for CII; use Monte Carlo");
    }
    throw std::logic_error("full_moment_from_tables: unreachable");
}

/// Exact spectral moment per MomentSpec. Reduced = full - 1 (the removed
/// Perron-Frobenius eigenvalue is exactly 1). Shifted moments expand
/// (M - alpha^2)^n binomially over the reduced spectrum, with tr 1 = side-1.
inline Rational exact_moment(const MomentSpec& spec, double budget = 2e7, int threads = 0) {
    const Rational N = spec.dim;
    auto full = [&](MomentKind kind, int order) {
        return full_moment_from_tables(spec.ensemble, kind, order, N, spec.a, spec.b, budget, threads);
    };
    switch (spec.variant) {
    case MomentVariant::Full: return full(spec.kind, spec.n);
    case MomentVariant::Reduced: return full(spec.kind, spec.n) - 1;
    case MomentVariant::Shifted: {
        if (!is_chiral(spec.ensemble))
            throw std::invalid_argument("shifted moments are defined for the chiral families only");
        if (spec.kind != MomentKind::Trace)
            throw std::invalid_argument("shifted moments are trace moments");
        const Rational side = N; // AIII, BDI are N x N
        const Rational alpha2 = Rational(spec.a - spec.b) * (spec.a - spec.b) / (N * N);
        Rational sum = 0;
        for (int k = 0; k <= spec.n; ++k) {
            const Rational reduced_k = (k == 0) ? side - 1 : full(MomentKind::Trace, k) - 1;
            Rational term = Rational(binomial(spec.n, k)) * reduced_k;
            for (int i = 0; i < spec.n - k; ++i) term *= -alpha2;
            sum += term;
        }
        return sum;
    }
    }
    throw std::logic_error("exact_moment: unreachable");
}

// ---------------------------------------------------------------------------
// Brute-force oracle: the raw Weingarten contractions with every delta
// evaluated literally over explicit index strings.
// ---------------------------------------------------------------------------

namespace detail_mom {

// iterates over all assignments of `count` indices, each in 0..range-1
template <class Fn>
void for_each_string(int count, int range, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(count), 0);
    for (;;) {
        fn(idx);
        int pos = 0;
        while (pos < count && ++idx[pos] == range) idx[pos++] = 0;
        if (pos == count) return;
    }
}

// delta_sigma[x, y]: y placed at sigma-positions equals x, i.e. y[s(p)] = x[p]
inline bool delta(const Permutation& sigma, const std::vector<int>& x, const std::vector<int>& y) {
    for (int p = 0; p < sigma.degree(); ++p)
        if (y[sigma(p)] != x[p]) return false;
    return true;
}

// Delta_sigma[x]: x invariant under the fixed-point-free involution f(sigma)
inline bool big_delta(const Permutation& fpf, const std::vector<int>& x) {
    for (int p = 0; p < fpf.degree(); ++p)
        if (x[fpf(p)] != x[p]) return false;
    return true;
}

// <i|j> bracket of the symplectic pairing, 0-based values in 0..2N-1
inline int sp_bracket(int i, int j, int N) {
    if (i < N && j == i + N) return 1;
    if (j < N && i == j + N) return -1;
    return 0;
}

// Delta'_sigma[x] with sigma a coset representative: product over blocks of
// <x_{sigma(2r-1)} | x_{sigma(2r)}>
inline int big_delta_prime(const Permutation& rep, const std::vector<int>& x, int N) {
    int prod = 1;
    for (int r = 0; r < rep.degree() / 2; ++r) {
        prod *= sp_bracket(x[rep(2 * r)], x[rep(2 * r + 1)], N);
        if (prod == 0) return 0;
    }
    return prod;
}

// y = sigma(x): y[sigma(p)] = x[p]
inline std::vector<int> apply_positionwise(const Permutation& sigma, const std::vector<int>& x) {
    std::vector<int> y(x.size());
    for (int p = 0; p < sigma.degree(); ++p) y[sigma(p)] = x[p];
    return y;
}

inline void check_oracle_budget(double strings, double group, double budget, const char* what) {
    if (strings * group > budget) {
        std::ostringstream os;
        os << "direct_contraction(" << what << "): " << strings * group
           << " delta evaluations exceed budget " << budget;
        throw BudgetError(os.str(), strings * group);
    }
}

// (i_1, i_2, i_2, i_3, i_3, ..., i_n, i_n, i_1): the trace index pattern of
// the circular and chiral families, invariant under varphi_U
inline std::vector<int> circular_pair_string(const std::vector<int>& i) {
    const int n = static_cast<int>(i.size());
    std::vector<int> x(static_cast<std::size_t>(2 * n));
    x[0] = i[0];
    x[2 * n - 1] = i[0];
    for (int k = 1; k < n; ++k) x[2 * k - 1] = x[2 * k] = i[k];
    return x;
}

// (j_1, j_1, j_2, j_2, ..., j_n, j_n): invariant under phi_U
inline std::vector<int> doubled_string(const std::vector<int>& j) {
    const int n = static_cast<int>(j.size());
    std::vector<int> y(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) y[2 * k] = y[2 * k + 1] = j[k];
    return y;
}

} // namespace detail_mom

/// Literal evaluation of the full moment from the raw contraction formulas,
/// summing over all index strings and all group/matching elements. This is
/// the independent oracle for exact_moment, and the only exact route for the
/// symplectic ensemble.
inline Rational direct_contraction(Ensemble e, MomentKind kind, int n, int N_int, int a = -1,
                                   int b = -1, double budget = 5e7) {
    using namespace detail_mom;
    const Rational N(N_int);

    if (is_symmetric_family(e) && kind == MomentKind::Singular)
        return direct_contraction(e, MomentKind::Trace, 2 * n, N_int, a, b, budget);

    switch (e) {
    case Ensemble::U: {
        if (kind == MomentKind::Trace) {
            // x = (i_1..i_n), y = pi_U(x); sum W^U(s^-1 t) delta_t[x,x] delta_s[y,y]
            const auto w = wg_u_table(n, N);
            std::vector<Permutation> perms;
            for_each_permutation(n, [&](const Permutation& p) { perms.push_back(p); });
            check_oracle_budget(std::pow(N_int, n), perms.size() * perms.size(), budget, "U trace");
            const Permutation pi = special_permutation(SpecialPerm::pi_u, n);
            Rational sum = 0;
            for_each_string(n, N_int, [&](const std::vector<int>& x) {
                const std::vector<int> y = apply_positionwise(pi, x);
                for (const auto& s : perms)
                    for (const auto& t : perms) {
                        if (!delta(t, x, x) || !delta(s, y, y)) continue;
                        sum += w.at((s.inverse() * t).cycle_type());
                    }
            });
            return sum;
        }
        // singular: x from (i_1,i_2,i_2,...,i_n,i_n,i_1), y from (j_1,j_1,...,j_n,j_n)
        const auto w = wg_u_table(2 * n, N);
        std::vector<Permutation> perms;
        for_each_permutation(2 * n, [&](const Permutation& p) { perms.push_back(p); });
        check_oracle_budget(std::pow(N_int, 2 * n), perms.size() * perms.size(), budget, "U singular");
        Rational sum = 0;
        for_each_string(2 * n, N_int, [&](const std::vector<int>& ij) {
            const std::vector<int> x =
                circular_pair_string(std::vector<int>(ij.begin(), ij.begin() + n));
            const std::vector<int> y = doubled_string(std::vector<int>(ij.begin() + n, ij.end()));
            for (const auto& s : perms) {
                if (!delta(s, y, y)) continue;
                for (const auto& t : perms) {
                    if (!delta(t, x, x)) continue;
                    sum += w.at((s.inverse() * t).cycle_type());
                }
            }
        });
        return sum;
    }

    case Ensemble::O: {
        const int order = (kind == MomentKind::Trace) ? n : 2 * n;
        const auto w = wg_o_table(order, N);
        const auto matchings = all_matchings(order);
        check_oracle_budget(std::pow(N_int, n * (kind == MomentKind::Trace ? 1 : 2)),
                            matchings.size() * matchings.size(), budget, "O");
        Rational sum = 0;
        auto run = [&](const std::vector<int>& x, const std::vector<int>& y) {
            for (const auto& ms : matchings) {
                if (!big_delta(ms.fpf_involution(), y)) continue;
                for (const auto& mt : matchings) {
                    if (!big_delta(mt.fpf_involution(), x)) continue;
                    sum += w.at(coset_type_of_matchings(ms, mt));
                }
            }
        };
        if (kind == MomentKind::Trace) {
            const Permutation pi = special_permutation(SpecialPerm::pi_o, n);
            for_each_string(n, N_int, [&](const std::vector<int>& i) {
                const std::vector<int> x = doubled_string(i);
                run(x, apply_positionwise(pi, x));
            });
        } else {
            // the unitary singular patterns with every entry doubled
            for_each_string(2 * n, N_int, [&](const std::vector<int>& ij) {
                const std::vector<int> x = doubled_string(
                    circular_pair_string(std::vector<int>(ij.begin(), ij.begin() + n)));
                const std::vector<int> y =
                    doubled_string(doubled_string(std::vector<int>(ij.begin() + n, ij.end())));
                run(x, y);
            });
        }
        return sum;
    }

    case Ensemble::S: {
        // indices run over 1..2N; +N is taken modulo 2N
        const int order = (kind == MomentKind::Trace) ? n : 2 * n;
        const auto w = wg_o_table(order, Rational(-2 * N_int));
        const auto matchings = all_matchings(order);
        std::vector<Permutation> reps;
        std::vector<int> rep_sign;
        for (const auto& m : matchings) {
            reps.push_back(m.canonical_rep());
            rep_sign.push_back(reps.back().sign());
        }
        const double strings = std::pow(2 * N_int, kind == MomentKind::Trace ? n : 2 * n);
        check_oracle_budget(strings, matchings.size() * matchings.size(), budget, "S");
        const int base_sign = (order % 2 == 0) ? 1 : -1; // (-1)^order from W^Sp
        // each entry e becomes the dual pair (e, e+N), addition modulo 2N
        auto interleave = [&](const std::vector<int>& v) {
            std::vector<int> x(2 * v.size());
            for (std::size_t p = 0; p < v.size(); ++p) {
                x[2 * p] = v[p];
                x[2 * p + 1] = (v[p] + N_int) % (2 * N_int);
            }
            return x;
        };
        Rational sum = 0;
        auto run = [&](const std::vector<int>& x, const std::vector<int>& y) {
            for (std::size_t si = 0; si < reps.size(); ++si) {
                const int dy = big_delta_prime(reps[si], y, N_int);
                if (dy == 0) continue;
                for (std::size_t ti = 0; ti < reps.size(); ++ti) {
                    const int dx = big_delta_prime(reps[ti], x, N_int);
                    if (dx == 0) continue;
                    const int sgn = base_sign * rep_sign[si] * rep_sign[ti] * dx * dy;
                    sum += Rational(sgn) * w.at(coset_type_of_matchings(matchings[si], matchings[ti]));
                }
            }
        };
        if (kind == MomentKind::Trace) {
            const Permutation pi = special_permutation(SpecialPerm::pi_o, n);
            for_each_string(n, 2 * N_int, [&](const std::vector<int>& i) {
                const std::vector<int> x = interleave(i);
                run(x, apply_positionwise(pi, x));
            });
        } else {
            // the unitary singular patterns with every entry dual-paired
            for_each_string(2 * n, 2 * N_int, [&](const std::vector<int>& ij) {
                const std::vector<int> x = interleave(
                    circular_pair_string(std::vector<int>(ij.begin(), ij.begin() + n)));
                const std::vector<int> y =
                    interleave(doubled_string(std::vector<int>(ij.begin() + n, ij.end())));
                run(x, y);
            });
        }
        return sum;
    }

    case Ensemble::AI:
    case Ensemble::AII: {
        if (kind != MomentKind::Trace) throw std::logic_error("handled via trace 2n");
        const bool aii = (e == Ensemble::AII);
        const auto w = aii ? wg_o_table(n, Rational(1 - 2 * N_int)) : wg_o_table(n, Rational(N + 1));
        const int range = aii ? 2 * N_int : N_int;
        std::vector<Permutation> perms;
        for_each_permutation(2 * n, [&](const Permutation& p) { perms.push_back(p); });
        check_oracle_budget(std::pow(range, n), perms.size(), budget, "AI/AII");
        const int base_sign = (n % 2 == 0) ? 1 : -1; // (-1)^n in W^AII
        Rational sum = 0;
        for_each_string(n, range, [&](const std::vector<int>& i) {
            std::vector<int> x(static_cast<std::size_t>(2 * n));
            x[0] = i[0];
            x[2 * n - 1] = i[0];
            for (int kk = 1; kk < n; ++kk) x[2 * kk - 1] = x[2 * kk] = i[kk];
            for (const auto& s : perms) {
                if (!delta(s, x, x)) continue;
                if (aii)
                    sum += Rational(base_sign * s.sign()) * w.at(coset_type(s));
                else
                    sum += w.at(coset_type(s));
            }
        });
        return sum;
    }

    case Ensemble::AIII: {
        if (kind != MomentKind::Trace) throw std::logic_error("handled via trace 2n");
        if (a + b != N_int) throw std::invalid_argument("AIII oracle needs a + b = N");
        const auto w = wg_aiii_table(2 * n, a, b);
        std::vector<Permutation> perms;
        for_each_permutation(2 * n, [&](const Permutation& p) { perms.push_back(p); });
        check_oracle_budget(std::pow(N_int, n), perms.size(), budget, "AIII");
        const Permutation phi = special_permutation(SpecialPerm::phi_u, n);
        Rational sum = 0;
        for_each_string(n, N_int, [&](const std::vector<int>& i) {
            std::vector<int> x(static_cast<std::size_t>(2 * n));
            x[0] = i[0];
            x[2 * n - 1] = i[0];
            for (int kk = 1; kk < n; ++kk) x[2 * kk - 1] = x[2 * kk] = i[kk];
            const std::vector<int> y = apply_positionwise(phi, x);
            for (const auto& s : perms) {
                if (!delta(s, x, y)) continue;
                sum += w.at(s.cycle_type());
            }
        });
        return sum;
    }

    case Ensemble::BDI: {
        if (kind != MomentKind::Trace) throw std::logic_error("handled via trace 2n");
        if (a + b != N_int) throw std::invalid_argument("BDI oracle needs a + b = N");
        const auto w = wg_bdi_table(2 * n, a, b);
        const auto matchings = all_matchings(2 * n);
        check_oracle_budget(std::pow(N_int, n), matchings.size(), budget, "BDI");
        Rational sum = 0;
        for_each_string(n, N_int, [&](const std::vector<int>& i) {
            // block k carries (i_k, i_{k+1}, i_k, i_{k+1})
            std::vector<int> x(static_cast<std::size_t>(4 * n));
            for (int kk = 0; kk < n; ++kk) {
                const int u = i[kk], v = i[(kk + 1) % n];
                x[4 * kk] = u;
                x[4 * kk + 1] = v;
                x[4 * kk + 2] = u;
                x[4 * kk + 3] = v;
            }
            for (const auto& m : matchings) {
                if (!big_delta(m.fpf_involution(), x)) continue;
                sum += w.at(coset_type_of_matchings(Matching::trivial(2 * n), m));
            }
        });
        return sum;
    }

    case Ensemble::CII:
        throw std::invalid_argument("no exact contraction implemented for CII");
    }
    throw std::logic_error("direct_contraction: unreachable");
}

// ---------------------------------------------------------------------------
// Rational-function reconstruction and large-N expansion
// ---------------------------------------------------------------------------

/// Recovers the unique rational function with the given degree bounds through
/// the samples. Needs at least deg_num + deg_den + 2 fit samples plus 3 more
/// for held-out verification; throws std::runtime_error when the samples are
/// inconsistent with the bounds.
inline RationalFunction reconstruct_rational(const std::vector<std::pair<Rational, Rational>>& samples,
                                             int deg_num, int deg_den) {
    const int unknowns = deg_num + deg_den + 2;
    const int fit = deg_num + deg_den + 2; // one redundant row; kernel must be nontrivial
    if (static_cast<int>(samples.size()) < fit + 3)
        throw std::invalid_argument("reconstruct_rational: not enough samples");

    // rows: P(x) - y Q(x) = 0, unknowns p_0..p_dn, q_0..q_dd
    std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(fit),
                                           std::vector<Rational>(static_cast<std::size_t>(unknowns), Rational(0)));
    for (int r = 0; r < fit; ++r) {
        const auto& [x, y] = samples[static_cast<std::size_t>(r)];
        Rational xp = 1;
        for (int i = 0; i <= deg_num; ++i) {
            mat[r][i] = xp;
            xp *= x;
        }
        xp = 1;
        for (int j = 0; j <= deg_den; ++j) {
            mat[r][deg_num + 1 + j] = -y * xp;
            xp *= x;
        }
    }

    // Gaussian elimination to row echelon form
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < unknowns && row < fit; ++col) {
        int pr = -1;
        for (int r = row; r < fit; ++r)
            if (mat[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(mat[row], mat[pr]);
        const Rational inv = Rational(1) / mat[row][col];
        for (int c = col; c < unknowns; ++c) mat[row][c] *= inv;
        for (int r = 0; r < fit; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            const Rational f = mat[r][col];
            for (int c = col; c < unknowns; ++c) mat[r][c] -= f * mat[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    // pick the last free column, set it to 1, read pivots
    std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    int free_col = -1;
    for (int c = unknowns - 1; c >= 0; --c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) throw std::runtime_error("reconstruct_rational: only the trivial solution");

    std::vector<Rational> sol(static_cast<std::size_t>(unknowns), Rational(0));
    sol[static_cast<std::size_t>(free_col)] = 1;
    for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; --r) {
        const int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
        Rational v = 0;
        for (int c = pc + 1; c < unknowns; ++c) v -= mat[r][c] * sol[static_cast<std::size_t>(c)];
        sol[static_cast<std::size_t>(pc)] = v;
    }

    Polynomial P(std::vector<Rational>(sol.begin(), sol.begin() + deg_num + 1));
    Polynomial Q(std::vector<Rational>(sol.begin() + deg_num + 1, sol.end()));
    if (Q.is_zero()) throw std::runtime_error("reconstruct_rational: degenerate denominator");
    const RationalFunction f(P, Q);

    // verify on every sample, held-out ones included
    for (const auto& [x, y] : samples) {
        if (Q.evaluate(x) == 0) throw std::runtime_error("reconstruct_rational: sample at a root of Q");
        if (f.evaluate(x) != y) throw std::runtime_error("reconstruct_rational: held-out mismatch");
    }
    return f;
}

/// Tries growing degree bounds until the samples verify.
inline RationalFunction reconstruct_auto(const std::vector<std::pair<Rational, Rational>>& samples,
                                         int max_deg) {
    for (int d = 0; d <= max_deg; ++d) {
        if (static_cast<int>(samples.size()) < 2 * d + 5) break;
        try {
            return reconstruct_rational(samples, d, d);
        } catch (const std::runtime_error&) {
            continue;
        }
    }
    throw std::runtime_error("reconstruct_auto: no rational function within the degree budget fits");
}

/// T_{n,j} coefficients of (1/N) f(N) = sum_j T_{n,j} N^{n-j}, j = 1..count.
inline std::vector<Rational> laurent_coefficients(const RationalFunction& f, int n, int count) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j)
        out.push_back(laurent_coefficient_at_infinity(f, n - j + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms: exact pointwise evaluation + reconstruction
// ---------------------------------------------------------------------------

/// Reconstructs the moment as a rational function of N. For the chiral
/// families the asymmetry alpha = (a-b)/N is held fixed (alpha in {0, 1/2}
/// rays supported: N is stepped so that a stays integral); for S the values
/// come from the literal contraction oracle.
inline RationalFunction closed_form_moment(Ensemble e, MomentKind kind, int n, MomentVariant variant,
                                           const Rational& alpha = Rational(0), double budget = 2e7,
                                           int threads = 0) {
    const bool chiral = is_chiral(e);
    if (e == Ensemble::CII) throw std::invalid_argument("no exact closed form for CII");

    int start = 0, step = 1;
    const int order = (kind == MomentKind::Singular || variant == MomentVariant::Shifted ||
                       is_symmetric_family(e))
                          ? 2 * n
                          : n;
    switch (e) {
    case Ensemble::U:
    case Ensemble::O:
    case Ensemble::AI:
    case Ensemble::AII: start = order; break;
    case Ensemble::S: start = 2; break;
    default: { // chiral rays
        if (alpha == 0) step = 2;
        else if (alpha == Rational(1, 2)) step = 4;
        else throw std::invalid_argument("closed_form_moment: unsupported chiral ray");
        start = ((order + step - 1) / step) * step;
        break;
    }
    }

    const int max_deg = order + 4;
    const int points = 2 * max_deg + 8;
    std::vector<std::pair<Rational, Rational>> samples;
    for (int i = 0; i < points; ++i) {
        const int Nv = start + i * step;
        MomentSpec spec;
        spec.ensemble = e;
        spec.kind = kind;
        spec.n = n;
        spec.variant = variant;
        spec.dim = Nv;
        if (chiral) {
            const Rational a_exact = (Rational(Nv) + alpha * Nv) / 2;
            if (denominator(a_exact) != 1) throw std::logic_error("chiral ray stepped off-lattice");
            spec.a = static_cast<int>(numerator(a_exact));
            spec.b = Nv - spec.a;
        }
        Rational value;
        if (e == Ensemble::S) {
            value = direct_contraction(Ensemble::S, kind, n, Nv, -1, -1, 5e7);
            if (variant == MomentVariant::Reduced) value -= 1;
        } else {
            value = exact_moment(spec, budget, threads);
        }
        samples.emplace_back(Rational(Nv), value);
    }
    return reconstruct_auto(samples, max_deg);
}

// Printed first-moment values for the compact symplectic chiral family,
// used as Monte Carlo targets (no exact Weingarten route implemented).
inline Rational cii_reduced_m1_reference(int N, int a, int b) {
    if (a + b != N) throw std::invalid_argument("cii reference needs a + b = N");
    const BigInt d = BigInt(a - b) * (a - b); // N^2 alpha^2 = (a-b)^2
    const BigInt num = 4 * BigInt(N) * d - 4 * BigInt(N) * N - N + 1;
    const BigInt den = BigInt(N - 1) * (2 * N + 1);
    return Rational(num, den);
}

inline Rational cii_shifted_mu1_reference(int N, int a, int b) {
    if (a + b != N) throw std::invalid_argument("cii reference needs a + b = N");
    const Rational alpha2 = Rational(BigInt(a - b) * (a - b), BigInt(N) * N);
    return (alpha2 - 1) * Rational(4 * BigInt(N) * N + N - 1, BigInt(N - 1) * (2 * N + 1));
}

} // namespace unistoch
