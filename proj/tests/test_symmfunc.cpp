#include "unistoch/characters.hpp"
#include "unistoch/jack.hpp"
#include "unistoch/matching.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/polynomial.hpp"
#include "unistoch/zonal.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace unistoch;

TEST_CASE("partition enumeration and order") {
    const auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({1, 1, 1}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({3}));

    CHECK(partitions(6).size() == 11);

    const auto p0 = partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].weight() == 0);

    const auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({1, 1, 1, 1}));
    CHECK(p4[1] == Partition({2, 1, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({3, 1}));
    CHECK(p4[4] == Partition({4}));
}

TEST_CASE("characters") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions(n)) CHECK(character(Partition({n}), mu) == 1);

    CHECK(character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK_THROWS(character(Partition({2}), Partition({3})));

    // chi_lambda(1^n) = hook length dimension
    for (int n = 1; n <= 7; ++n) {
        const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lam : partitions(n)) CHECK(character(lam, ones) == dim(lam));
    }
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions(n);
        const BigInt nf = factorial(n);
        // column orthogonality
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                BigInt sum = 0;
                for (const auto& lam : parts) sum += BigInt(character(lam, mu)) * character(lam, nu);
                if (mu == nu)
                    CHECK(sum == nf / class_size(mu));
                else
                    CHECK(sum == 0);
            }
        // row orthogonality
        for (const auto& lam : parts)
            for (const auto& rho : parts) {
                BigInt sum = 0;
                for (const auto& mu : parts)
                    sum += class_size(mu) * character(lam, mu) * character(rho, mu);
                CHECK(sum == (lam == rho ? nf : BigInt(0)));
            }
    }
}

TEST_CASE("dimensions and class sizes") {
    CHECK(dim(Partition({5})) == 1);
    CHECK(dim(Partition({2, 1})) == 2);

    BigInt sq = 0;
    for (const auto& lam : partitions(4)) sq += BigInt(dim(lam)) * dim(lam);
    CHECK(sq == 24);

    CHECK(class_size(Partition({1, 1, 1})) == 1);
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({3})) == 2);
    for (int n = 1; n <= 7; ++n) {
        BigInt sum = 0;
        for (const auto& mu : partitions(n)) sum += class_size(mu);
        CHECK(sum == factorial(n));
    }
}

// Independent evaluation of the zonal spherical function: the character
// average over tau H_n, computed with explicit composition for the given
// tau rather than a cached representative profile.
static Rational zonal_oracle(const Partition& lam, const Permutation& tau) {
    const int n = lam.weight();
    const Partition two_lam = lam.doubled();
    BigInt sum = 0;
    for_each_hyperoctahedral(n, [&](const Permutation& xi) {
        sum += character(two_lam, (tau * xi).cycle_type());
    });
    return Rational(sum, factorial(n) << n);
}

TEST_CASE("zonal spherical function") {
    // omega at the identity coset type is 1 for every lambda
    for (int n = 1; n <= 3; ++n) {
        const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lam : partitions(n)) CHECK(zonal_spherical(lam, ones) == 1);
    }

    // omega_{[n]} is identically 1
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : partitions(n)) CHECK(zonal_spherical(Partition({n}), mu) == 1);

    // constant on coset types, matching the brute-force double coset average
    for (int n = 1; n <= 3; ++n) {
        for_each_permutation(2 * n, [&](const Permutation& tau) {
            const Partition ct = coset_type(tau);
            for (const auto& lam : partitions(n))
                REQUIRE(zonal_spherical(lam, ct) == zonal_oracle(lam, tau));
        });
    }

    CHECK(zonal_spherical(Partition({1, 1}), Partition({2})) == Rational(-1, 2));
    CHECK_THROWS(zonal_spherical(Partition({2}), Partition({1})));
}

TEST_CASE("jack polynomial dimension specialization") {
    const RationalFunction N = RationalFunction::variable();
    const Polynomial x = Polynomial::variable();

    CHECK(jack_one_n(Partition({1}), 1, N) == N);
    CHECK(jack_one_n(Partition({1, 1}), 1, N) == RationalFunction(x * x - x, 1));
    CHECK(jack_one_n(Partition({2}), 2, N) == RationalFunction(x * x + 2 * x, 1));

    CHECK(jack_one_n(Partition({2, 1}), 1, Rational(5)) == 5 * 6 * 4);

    // vanishing iff the partition has more rows than N; positive above
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions(n))
            for (int nn = 0; nn <= 6; ++nn) {
                const Rational v = jack_one_n(lam, 1, Rational(nn));
                if (nn < lam.length())
                    CHECK(v == 0);
                else
                    CHECK(v > 0);
            }
}

TEST_CASE("power sums at the signature point") {
    CHECK(power_sum_signature(Partition({1, 1}), 3, 3) == 0);
    CHECK(power_sum_signature(Partition({2}), 5, 2) == 7);
    CHECK(power_sum_signature(Partition({2, 1}), 3, 1) == 8);
}

// Monomial symmetric function m_mu at (1^a, (-1)^b), by direct enumeration
// over index subsets; only what the n <= 2 oracle needs.
static Rational monomial_at_signature(const std::vector<int>& mu, int a, int b) {
    const int vars = a + b;
    auto x = [&](int i) { return i < a ? 1 : -1; };
    if (mu == std::vector<int>{1}) {
        long long s = 0;
        for (int i = 0; i < vars; ++i) s += x(i);
        return s;
    }
    if (mu == std::vector<int>{2}) {
        long long s = 0;
        for (int i = 0; i < vars; ++i) s += x(i) * x(i);
        return s;
    }
    if (mu == std::vector<int>{1, 1}) {
        long long s = 0;
        for (int i = 0; i < vars; ++i)
            for (int j = i + 1; j < vars; ++j) s += x(i) * x(j);
        return s;
    }
    throw std::logic_error("monomial_at_signature: unsupported shape");
}

TEST_CASE("jack polynomials at the signature point") {
    // degenerates to the 1^a specialization when b = 0
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n))
            for (int gamma : {1, 2})
                for (int a = 1; a <= 5; ++a)
                    CHECK(jack_signature(lam, gamma, a, 0) == jack_one_n(lam, gamma, Rational(a)));

    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (a + b < 1) continue;
            CHECK(jack_signature(Partition({1}), 1, a, b) == a - b);
            CHECK(jack_signature(Partition({1}), 2, a, b) == a - b);
        }

    // monomial-expansion oracle for n <= 2:
    //   J^1_[2] = 2 m_2 + 2 m_11     J^1_[1,1] = 2 m_11
    //   J^2_[2] = 3 m_2 + 2 m_11     J^2_[1,1] = 2 m_11
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            if (a + b < 1) continue;
            const Rational m1 = monomial_at_signature({1}, a, b);
            const Rational m2 = monomial_at_signature({2}, a, b);
            const Rational m11 = monomial_at_signature({1, 1}, a, b);
            CHECK(jack_signature(Partition({1}), 1, a, b) == m1);
            CHECK(jack_signature(Partition({1}), 2, a, b) == m1);
            CHECK(jack_signature(Partition({2}), 1, a, b) == 2 * m2 + 2 * m11);
            CHECK(jack_signature(Partition({1, 1}), 1, a, b) == 2 * m11);
            CHECK(jack_signature(Partition({2}), 2, a, b) == 3 * m2 + 2 * m11);
            CHECK(jack_signature(Partition({1, 1}), 2, a, b) == 2 * m11);
        }
}
