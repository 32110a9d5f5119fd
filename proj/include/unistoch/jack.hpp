#pragma once

#include "unistoch/characters.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/rational.hpp"
#include "unistoch/zonal.hpp"

#include <stdexcept>

namespace unistoch {

/// J_lambda^gamma(1^N) = gamma^n prod_i prod_{j=0}^{lambda_i - 1}
/// ((N-i+1)/gamma + j), the Gamma-ratio specialization written out as a
/// rising-factorial product. Exact for any rational N, including the
/// negative values used by the symplectic and AII reductions. Also works
/// with a symbolic scalar type (a rational function of N).
template <class F>
F jack_one_n(const Partition& lam, int gamma, const F& N) {
    if (gamma != 1 && gamma != 2) throw std::invalid_argument("jack_one_n: gamma must be 1 or 2");
    F result = F(1);
    for (int i = 1; i <= lam.length(); ++i) {
        for (int j = 0; j < lam[i - 1]; ++j) {
            F term = (N + F(1 - i)) / F(gamma) + F(j);
            result = result * term;
        }
    }
    for (int k = 0; k < lam.weight(); ++k) result = result * F(gamma);
    return result;
}

/// Power sums at the signature point (1^a, (-1)^b):
/// p_mu = prod_i (a + (-1)^{mu_i} b).
inline BigInt power_sum_signature(const Partition& mu, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("power_sum_signature: a, b must be >= 0");
    BigInt r = 1;
    for (int p : mu.parts()) r *= (p % 2 == 0) ? BigInt(a) + b : BigInt(a) - b;
    return r;
}

/// Jack polynomial at the signature point, through the power-sum expansions
///   J^2_lambda = sum_mu 2^{n-l(mu)} |C_mu| omega_lambda(mu) p_mu
///   J^1_lambda = (1/d_lambda) sum_mu |C_mu| chi_lambda(mu) p_mu.
inline Rational jack_signature(const Partition& lam, int gamma, int a, int b) {
    if (a + b < 1) throw std::invalid_argument("jack_signature: need a + b >= 1");
    const int n = lam.weight();
    Rational sum = 0;
    for (const Partition& mu : partitions(n)) {
        const BigInt p = power_sum_signature(mu, a, b);
        if (gamma == 2) {
            BigInt pow2 = BigInt(1) << (n - mu.length());
            sum += Rational(pow2 * class_size(mu)) * zonal_spherical(lam, mu) * Rational(p);
        } else if (gamma == 1) {
            sum += Rational(class_size(mu) * character(lam, mu) * p);
        } else {
            throw std::invalid_argument("jack_signature: gamma must be 1 or 2");
        }
    }
    if (gamma == 1) sum /= dim(lam);
    return sum;
}

} // namespace unistoch
