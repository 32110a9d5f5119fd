#pragma once

#include "unistoch/characters.hpp"
#include "unistoch/errors.hpp"
#include "unistoch/jack.hpp"
#include "unistoch/matching.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/polynomial.hpp"
#include "unistoch/rational.hpp"
#include "unistoch/zonal.hpp"

#include <map>
#include <sstream>
#include <string>

namespace unistoch {

namespace detail {

// A vanishing Jack specialization J_lambda(1^N) in a denominator means one
// of two things. At a nonnegative integer N with l(lambda) > N the irrep is
// absent from the tensor power and the Gram pseudo-inverse simply omits the
// term. Anywhere else it is a genuine pole of the Weingarten function.
inline bool skip_vanishing(const Rational& jval, const Rational& dim_param, int rows,
                           const std::string& what) {
    if (jval != 0) return false;
    if (is_nonneg_integer(dim_param) && Rational(rows) > dim_param) return true;
    throw PoleError("pole of " + what + " at dimension " + to_string(dim_param));
}

inline bool skip_vanishing(const RationalFunction& jval, const RationalFunction&, int,
                           const std::string& what) {
    if (jval.is_zero()) throw PoleError("identically zero Jack specialization in " + what);
    return false;
}

inline std::string order_tag(const char* family, int k) {
    std::ostringstream os;
    os << "W^" << family << " at order " << k;
    return os.str();
}

} // namespace detail

/// Weingarten function of U(N) at order k, tabulated over cycle types:
///   W^U_N(lambda) = (1/k!) sum_{mu |- k} (d_mu / J^1_mu(1^N)) chi_mu(lambda).
template <class F>
std::map<Partition, F> wg_u_table(int k, const F& N) {
    const auto parts = partitions(k);
    const std::string tag = detail::order_tag("U", k);
    std::vector<std::pair<Partition, F>> coeff;
    for (const Partition& mu : parts) {
        const F j = jack_one_n(mu, 1, N);
        if (detail::skip_vanishing(j, N, mu.length(), tag)) continue;
        coeff.emplace_back(mu, F(Rational(dim(mu))) / j);
    }
    const Rational pref(1, factorial(k));
    std::map<Partition, F> table;
    for (const Partition& lam : parts) {
        F sum = F(0);
        for (const auto& [mu, c] : coeff) sum = sum + c * F(Rational(character(mu, lam)));
        table.emplace(lam, F(pref) * sum);
    }
    return table;
}

template <class F>
F wg_u(const Partition& cycle_type, const F& N) {
    return wg_u_table(cycle_type.weight(), N).at(cycle_type);
}

/// Weingarten function of O(N) at order k, tabulated over coset types:
///   W^O_N(lambda) = (2^k k!/(2k)!) sum_{mu |- k} (d_{2mu}/J^2_mu(1^N)) omega_mu(lambda).
/// Defined for rational N, including the negative values reached through the
/// symplectic and AII reductions.
template <class F>
std::map<Partition, F> wg_o_table(int k, const F& N) {
    const auto parts = partitions(k);
    const std::string tag = detail::order_tag("O", k);
    std::vector<std::pair<Partition, F>> coeff;
    for (const Partition& mu : parts) {
        const F j = jack_one_n(mu, 2, N);
        if (detail::skip_vanishing(j, N, mu.length(), tag)) continue;
        coeff.emplace_back(mu, F(Rational(dim(mu.doubled()))) / j);
    }
    const Rational pref((BigInt(1) << k) * factorial(k), factorial(2 * k));
    std::map<Partition, F> table;
    for (const Partition& lam : parts) {
        F sum = F(0);
        for (const auto& [mu, c] : coeff) sum = sum + c * F(zonal_spherical(mu, lam));
        table.emplace(lam, F(pref) * sum);
    }
    return table;
}

template <class F>
F wg_o(const Partition& coset_type, const F& N) {
    return wg_o_table(coset_type.weight(), N).at(coset_type);
}

/// W^AI_N = W^O_{N+1}.
template <class F>
F wg_ai(const Partition& coset_type, const F& N) {
    return wg_o(coset_type, N + F(1));
}

template <class F>
std::map<Partition, F> wg_ai_table(int k, const F& N) {
    return wg_o_table(k, N + F(1));
}

/// W^Sp_N(sigma) = (-1)^k eps(sigma) W^O_{-2N}(sigma) for sigma in S_2k.
/// The sign depends on the chosen coset representative; pass the canonical
/// matching representative and use the same one in any contraction.
template <class F>
F wg_sp(const Permutation& rep, const F& N) {
    if (rep.degree() % 2 != 0) throw std::invalid_argument("wg_sp: degree must be even");
    const int k = rep.degree() / 2;
    const int sign = ((k % 2) ? -1 : 1) * rep.sign();
    return F(Rational(sign)) * wg_o(coset_type(rep), F(-2) * N);
}

/// W^AII_N(sigma) = (-1)^k eps(sigma) W^O_{1-2N}(sigma) for sigma in S_2k.
template <class F>
F wg_aii(const Permutation& sigma, const F& N) {
    if (sigma.degree() % 2 != 0) throw std::invalid_argument("wg_aii: degree must be even");
    const int k = sigma.degree() / 2;
    const int sign = ((k % 2) ? -1 : 1) * sigma.sign();
    return F(Rational(sign)) * wg_o(coset_type(sigma), F(1) - F(2) * N);
}

/// Weingarten function of the chiral unitary family at order k over cycle
/// types, with signature (a, b), a + b = N:
///   W^AIII_{N,a,b}(lambda) =
///     (1/k!) sum_{mu |- k} d_mu (J^1_mu(1^a,(-1)^b)/J^1_mu(1^N)) chi_mu(lambda).
inline std::map<Partition, Rational> wg_aiii_table(int k, int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("wg_aiii_table: bad signature");
    const Rational N(a + b);
    const auto parts = partitions(k);
    const std::string tag = detail::order_tag("AIII", k);
    std::vector<std::pair<Partition, Rational>> coeff;
    for (const Partition& mu : parts) {
        const Rational j = jack_one_n(mu, 1, N);
        if (detail::skip_vanishing(j, N, mu.length(), tag)) continue;
        coeff.emplace_back(mu, Rational(dim(mu)) * jack_signature(mu, 1, a, b) / j);
    }
    const Rational pref(1, factorial(k));
    std::map<Partition, Rational> table;
    for (const Partition& lam : parts) {
        Rational sum = 0;
        for (const auto& [mu, c] : coeff) sum += c * character(mu, lam);
        table.emplace(lam, pref * sum);
    }
    return table;
}

inline Rational wg_aiii(const Partition& cycle_type, int a, int b) {
    return wg_aiii_table(cycle_type.weight(), a, b).at(cycle_type);
}

/// Weingarten function of the chiral orthogonal family at order k over coset
/// types:
///   W^BDI_{N,a,b}(lambda) =
///     (2^k k!/(2k)!) sum_{mu |- k} d_{2mu} (J^2_mu(1^a,(-1)^b)/J^2_mu(1^N)) omega_mu(lambda).
inline std::map<Partition, Rational> wg_bdi_table(int k, int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("wg_bdi_table: bad signature");
    const Rational N(a + b);
    const auto parts = partitions(k);
    const std::string tag = detail::order_tag("BDI", k);
    std::vector<std::pair<Partition, Rational>> coeff;
    for (const Partition& mu : parts) {
        const Rational j = jack_one_n(mu, 2, N);
        if (detail::skip_vanishing(j, N, mu.length(), tag)) continue;
        coeff.emplace_back(mu, Rational(dim(mu.doubled())) * jack_signature(mu, 2, a, b) / j);
    }
    const Rational pref((BigInt(1) << k) * factorial(k), factorial(2 * k));
    std::map<Partition, Rational> table;
    for (const Partition& lam : parts) {
        Rational sum = 0;
        for (const auto& [mu, c] : coeff) sum += c * zonal_spherical(mu, lam);
        table.emplace(lam, pref * sum);
    }
    return table;
}

inline Rational wg_bdi(const Partition& coset_type, int a, int b) {
    return wg_bdi_table(coset_type.weight(), a, b).at(coset_type);
}

} // namespace unistoch
