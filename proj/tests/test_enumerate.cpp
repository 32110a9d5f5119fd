#include "unistoch/count_tables.hpp"
#include "unistoch/reference_tables.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unistoch;

TEST_CASE("small tables match the frozen references") {
    for (const auto& [key, expected] : reference_tables()) {
        const auto [family, n] = key;
        INFO(family_name(family) << " n=" << n);
        const CountTable t = enumerate_table(family, n);
        REQUIRE(t.cells.size() == expected.size());
        for (std::size_t r = 0; r < expected.size(); ++r) {
            REQUIRE(t.cells[r].size() == expected[r].size());
            for (std::size_t c = 0; c < expected[r].size(); ++c) {
                INFO("row " << r + 1 << " col " << c);
                REQUIRE(t.cells[r][c] == expected[r][c]);
            }
        }
    }
}

TEST_CASE("checksums") {
    // caption identities
    CHECK(table_checksums(enumerate_table(TableFamily::FU, 3)).expected_total == 36);
    CHECK(table_checksums(enumerate_table(TableFamily::FO, 2)).expected_total == 9);
    CHECK(table_checksums(enumerate_table(TableFamily::FAI, 4)).expected_total == 40320);

    for (const auto& [key, expected] : reference_tables()) {
        const auto [family, n] = key;
        INFO(family_name(family) << " n=" << n);
        const ChecksumReport rep = table_checksums(enumerate_table(family, n));
        CHECK(rep.total_ok);
        CHECK(rep.all_ok);
    }

    // G tables as well
    for (int n = 1; n <= 2; ++n) {
        CHECK(table_checksums(enumerate_table(TableFamily::GU, n)).all_ok);
        CHECK(table_checksums(enumerate_table(TableFamily::GO, n)).all_ok);
    }
}

TEST_CASE("the anchor cell F(n, 1^n) = 1") {
    for (TableFamily fam : {TableFamily::FU, TableFamily::FO}) {
        for (int n = 2; n <= 4; ++n) {
            const CountTable t = enumerate_table(fam, n);
            CHECK(t.cell(n, 0) == 1);   // last row, first column
            for (std::size_t c = 1; c < t.columns.size(); ++c) CHECK(t.cells.back()[c] == 0);
        }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
    for (auto [fam, n] : {std::pair{TableFamily::FAI, 3}, {TableFamily::FAIII, 3},
                          {TableFamily::FBDI, 2}, {TableFamily::FU, 3}}) {
        const CountTable serial = enumerate_table(fam, n, 2e7, 1);
        const CountTable parallel = enumerate_table(fam, n, 2e7, 4);
        CHECK(serial.cells == parallel.cells);
    }
    const CountTable gs = enumerate_table(TableFamily::GU, 2, 2e7, 1);
    const CountTable gp = enumerate_table(TableFamily::GU, 2, 2e7, 4);
    CHECK(gs.g_cells == gp.g_cells);
}

TEST_CASE("budget refusal") {
    try {
        enumerate_table(TableFamily::GO, 3, 1e6);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.estimated_cost() > 1e8);
        CHECK(std::string(e.what()).find("GO") != std::string::npos);
    }
}

TEST_CASE("G table marginals") {
    // marginalizing G^U over (m, k) recovers the pair-count identity
    const CountTable g = enumerate_table(TableFamily::GU, 2);
    BigInt total = 0;
    for (const auto& [mk, row] : g.g_cells) {
        CHECK(mk.first >= 1);
        CHECK(mk.first <= 2);
        CHECK(mk.second >= 1);
        CHECK(mk.second <= 2);
        for (long long v : row) total += v;
    }
    CHECK(total == 576); // (4!)^2
}
