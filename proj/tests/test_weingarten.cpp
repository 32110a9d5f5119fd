#include "unistoch/polynomial.hpp"
#include "unistoch/weingarten.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unistoch;

namespace {
const RationalFunction N = RationalFunction::variable();
const Polynomial x = Polynomial::variable();

RationalFunction rf(Polynomial num, Polynomial den) { return RationalFunction(std::move(num), std::move(den)); }
} // namespace

TEST_CASE("unitary Weingarten functions") {
    CHECK(wg_u(Partition({1}), N) == rf(1, x));
    CHECK(wg_u(Partition({1, 1}), N) == rf(1, x * x - 1));
    CHECK(wg_u(Partition({2}), N) == rf(-1, x * (x * x - 1)));

    // pointwise matches symbolic off poles
    for (int k = 1; k <= 4; ++k)
        for (const auto& lam : partitions(k)) {
            const RationalFunction sym = wg_u(lam, N);
            for (int nn = k; nn <= k + 5; ++nn)
                REQUIRE(wg_u(lam, Rational(nn)) == sym.evaluate(nn));
        }

    CHECK(wg_u(Partition({1}), Rational(7)) * 7 == 1);

    // below the dimension floor the absent irreps drop out of the sum: at
    // N=1 only lambda=[2] survives and W^U_1 = 1/4 on both classes, which
    // reproduces <|U_11|^4> = 1 over U(1)
    CHECK(wg_u(Partition({1, 1}), Rational(1)) == Rational(1, 4));
    CHECK(wg_u(Partition({2}), Rational(1)) == Rational(1, 4));
}

TEST_CASE("poles at negative dimensions raise") {
    // W^O_{-2} at order 2 divides by J^2_{[2]}(1^{-2}) = 0
    CHECK_THROWS_AS(wg_o(Partition({2}), Rational(-2)), PoleError);
    // reached from the symplectic side at N = 1
    CHECK_THROWS_AS(wg_sp(Matching::trivial(2).canonical_rep(), Rational(1)), PoleError);
}

TEST_CASE("orthogonal Weingarten functions") {
    CHECK(wg_o(Partition({1}), N) == rf(1, x));
    CHECK(wg_o(Partition({1, 1}), N) == rf(x + 1, x * (x - 1) * (x + 2)));
    CHECK(wg_o(Partition({2}), N) == rf(-1, x * (x - 1) * (x + 2)));

    CHECK(wg_o(Partition({1}), Rational(9)) * 9 == 1);

    for (int k = 1; k <= 3; ++k)
        for (const auto& lam : partitions(k)) {
            const RationalFunction sym = wg_o(lam, N);
            for (int nn = 2 * k; nn <= 2 * k + 5; ++nn)
                REQUIRE(wg_o(lam, Rational(nn)) == sym.evaluate(nn));
        }
}

TEST_CASE("symplectic Weingarten via the orthogonal one") {
    // order 1: W^Sp(id) = 1/(2N)
    CHECK(wg_sp(Permutation(2), N) == rf(1, 2 * x));

    // multiplying the representative by a transposition flips the sign
    const Permutation rep = Matching::from_blocks({{0, 2}, {1, 3}}).canonical_rep();
    const Permutation flipped = rep * Permutation::from_cycles(4, {{1, 2}});
    CHECK(coset_type(rep) == coset_type(flipped));
    CHECK(wg_sp(rep, Rational(5)) == -wg_sp(flipped, Rational(5)));
}

TEST_CASE("circular ensemble Weingarten functions") {
    // AI is the orthogonal one at N+1, identically as rational functions
    for (int k = 1; k <= 3; ++k)
        for (const auto& lam : partitions(k)) {
            CHECK(wg_ai(lam, N) == wg_o(lam, N + RationalFunction(1)));
            for (int nn = 2 * k; nn < 2 * k + 10; ++nn)
                REQUIRE(wg_ai(lam, Rational(nn)) == wg_o(lam, Rational(nn + 1)));
        }
    CHECK(wg_ai(Partition({1}), N) == rf(1, x + 1));
    CHECK(wg_ai(Partition({1, 1}), N) == rf(x + 2, (x + 1) * x * (x + 3)));

    // AII at order 1: (-1) * W^O_{1-2N}([1]) = 1/(2N-1)
    CHECK(wg_aii(Permutation(2), N) == rf(1, 2 * x - 1));
}

TEST_CASE("chiral Weingarten functions") {
    // order 1 value (a-b)/(a+b) for both chiral families
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            if (a + b < 1) continue;
            CHECK(wg_aiii(Partition({1}), a, b) == Rational(a - b, a + b));
            CHECK(wg_bdi(Partition({1}), a, b) == Rational(a - b, a + b));
        }

    // b = 0 collapses U to the identity: W^AIII is the indicator of the
    // identity class, W^BDI of the trivial coset type
    for (int k = 1; k <= 3; ++k) {
        const Partition ones(std::vector<int>(static_cast<std::size_t>(k), 1));
        for (const auto& lam : partitions(k)) {
            CHECK(wg_aiii(lam, 6, 0) == (lam == ones ? 1 : 0));
            CHECK(wg_bdi(lam, 6, 0) == (lam == ones ? 1 : 0));
        }
    }
}
