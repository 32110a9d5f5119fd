#include "unistoch/matching.hpp"
#include "unistoch/orbits.hpp"
#include "unistoch/partition.hpp"
#include "unistoch/permutation.hpp"
#include "unistoch/special_perms.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace unistoch;

TEST_CASE("cycle types") {
    CHECK(Permutation(3).cycle_type() == Partition({1, 1, 1}));

    const Permutation pi_o = special_permutation(SpecialPerm::pi_o, 2);
    CHECK(pi_o == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
    CHECK(pi_o.cycle_type() == Partition({2, 2}));

    CHECK(Permutation::from_cycles(4, {{1, 2}}).cycle_type() == Partition({2, 1, 1}));
}

TEST_CASE("signs") {
    CHECK(Permutation(5).sign() == 1);
    CHECK(Permutation::from_cycles(4, {{2, 4}}).sign() == -1);
    CHECK(Permutation::from_cycles(3, {{1, 2, 3}}).sign() == 1);

    // multiplicative under composition
    const auto a = Permutation::from_cycles(5, {{1, 3, 4}});
    const auto b = Permutation::from_cycles(5, {{2, 5}, {1, 4}});
    CHECK((a * b).sign() == a.sign() * b.sign());
}

TEST_CASE("coset types") {
    CHECK(coset_type(Permutation(4)) == Partition({1, 1}));
    CHECK(coset_type(Permutation::from_cycles(4, {{2, 3}})) == Partition({2}));
    CHECK(coset_type(Permutation::from_cycles(4, {{1, 2}})) == Partition({1, 1}));
    CHECK_THROWS(coset_type(Permutation(3)));
}

TEST_CASE("coset type is a double coset invariant") {
    for (int n = 1; n <= 3; ++n) {
        const auto hyper = hyperoctahedral(n);
        for_each_permutation(2 * n, [&](const Permutation& p) {
            const Partition base = coset_type(p);
            for (const auto& h1 : hyper)
                for (const auto& h2 : hyper)
                    REQUIRE(coset_type(h1 * p * h2) == base);
        });
    }
}

TEST_CASE("fixed point free involutions") {
    const auto m = Matching::from_blocks({{0, 1}, {2, 3}});
    CHECK(m.fpf_involution() == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));

    CHECK(Matching::trivial(3).fpf_involution() == special_permutation(SpecialPerm::phi_u, 3));

    const auto cross = Matching::from_blocks({{0, 2}, {1, 3}});
    CHECK(cross.fpf_involution() == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));

    for (int n = 1; n <= 4; ++n) {
        for_each_matching(n, [&](const Matching& mm) {
            const Permutation f = mm.fpf_involution();
            REQUIRE((f * f).is_identity());
            for (int i = 0; i < 2 * n; ++i) REQUIRE(f(i) != i);
        });
    }
}

TEST_CASE("matching canonical representatives") {
    // minimal-lex representative maps the trivial matching onto the blocks
    const auto m = Matching::from_blocks({{0, 2}, {1, 3}});
    CHECK(m.canonical_rep() == Permutation::from_cycles(4, {{2, 3}}));
    for (int n = 1; n <= 4; ++n) {
        for_each_matching(n, [&](const Matching& mm) {
            REQUIRE(Matching::trivial(n).apply(mm.canonical_rep()) == mm);
        });
    }
}

TEST_CASE("orbit counting") {
    CHECK(orbit_count({Permutation(5)}, 5) == 5);
    for (int k = 2; k <= 7; ++k)
        CHECK(orbit_count({special_permutation(SpecialPerm::pi_u, k)}, k) == 1);
    CHECK(orbit_count({Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                       Permutation::from_cycles(4, {{2, 3}})},
                      4) == 1);
    CHECK_THROWS(orbit_count({Permutation(3), Permutation(4)}, 3));

    // orbit count of a cyclic group = number of cycles
    for_each_permutation(5, [&](const Permutation& p) {
        REQUIRE(orbit_count({p}, 5) == p.cycle_type().length());
    });
}

TEST_CASE("special permutations") {
    CHECK(special_permutation(SpecialPerm::pi_u, 4) == Permutation::from_cycles(4, {{1, 2, 3, 4}}));
    CHECK(special_permutation(SpecialPerm::varphi_u, 2) == Permutation::from_cycles(4, {{2, 3}, {4, 1}}));
    CHECK(special_permutation(SpecialPerm::pi_bdi, 1) == Permutation::from_cycles(4, {{2, 4, 1, 3}}));
    CHECK(special_permutation(SpecialPerm::phi_o, 2) ==
          Permutation::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}));
    CHECK(special_permutation(SpecialPerm::varphi_o, 1) ==
          Permutation::from_cycles(4, {{1, 2, 3, 4}}));
    CHECK_THROWS(special_perm_from_name("sigma"));
}

// The chiral-orthogonal trace string (i1,i2,i1,i2, i2,i3,i2,i3, ...) must be
// constant on every orbit of pi_BDI, for any symbol assignment.
TEST_CASE("pi_BDI leaves the chiral index pattern invariant") {
    for (int n = 1; n <= 3; ++n) {
        const Permutation pb = special_permutation(SpecialPerm::pi_bdi, n);
        const int q = 3; // alphabet size
        std::vector<int> symbols(static_cast<std::size_t>(n), 0);
        for (;;) {
            // build the string: block k carries (i_k, i_{k+1}, i_k, i_{k+1})
            std::vector<int> str(static_cast<std::size_t>(4 * n));
            for (int k = 0; k < n; ++k) {
                const int a = symbols[k], b = symbols[(k + 1) % n];
                str[4 * k] = a;
                str[4 * k + 1] = b;
                str[4 * k + 2] = a;
                str[4 * k + 3] = b;
            }
            for (int p = 0; p < 4 * n; ++p) REQUIRE(str[pb(p)] == str[p]);
            // next assignment
            int pos = 0;
            while (pos < n && ++symbols[pos] == q) symbols[pos++] = 0;
            if (pos == n) break;
        }
    }
}

TEST_CASE("matching and hyperoctahedral counts") {
    CHECK(all_matchings(1).size() == 1);
    CHECK(all_matchings(3).size() == 15);
    CHECK(all_matchings(4).size() == 105);

    CHECK(hyperoctahedral(1).size() == 2);
    CHECK(hyperoctahedral(2).size() == 8);
    CHECK(hyperoctahedral(4).size() == 384);

    // all distinct, all stabilize the trivial matching
    for (int n = 1; n <= 3; ++n) {
        std::set<std::vector<int>> seen;
        const Matching t = Matching::trivial(n);
        for_each_hyperoctahedral(n, [&](const Permutation& h) {
            seen.insert(h.images0());
            REQUIRE(t.apply(h) == t);
        });
        std::size_t order = static_cast<std::size_t>(1) << n;
        for (int i = 2; i <= n; ++i) order *= static_cast<std::size_t>(i);
        CHECK(seen.size() == order);
    }

    // matchings are pairwise distinct
    std::set<std::vector<std::pair<int, int>>> blocks;
    for_each_matching(4, [&](const Matching& m) { blocks.insert(m.blocks0()); });
    CHECK(blocks.size() == 105);
}

TEST_CASE("cycle notation round trip") {
    const auto p = Permutation::from_cycles(6, {{1, 4}, {2, 5, 6}});
    CHECK(p.cycle_string() == "(1 4)(2 5 6)");
    CHECK(Permutation(4).cycle_string() == "()");
    CHECK(Partition({3, 1, 1}).to_string() == "[3,1,1]");
}
