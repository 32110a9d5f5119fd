// Acceptance suite: runs every top-level verification criterion and prints
// one pass/fail line each. Criterion 2 carries a known published defect in
// its symplectic singular target (see reference_moments.hpp); its expected
// state is pinned precisely below so that any behavioral change fails here.

#include "unistoch/acceptance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

using namespace unistoch;

TEST_CASE("acceptance criteria") {
    AcceptanceOptions opt;
    opt.quick = false;
    const auto results = run_acceptance(opt, &std::cout);
    REQUIRE(results.size() == 7);

    for (const auto& r : results) {
        INFO("criterion " << r.id << ": " << r.name << " — " << r.details);
        if (r.id == 2) {
            // 2 fails as stated: the published symplectic s_1 disagrees with
            // the ensemble (Monte Carlo confirmed); everything else matches.
            CHECK_FALSE(r.passed);
            CHECK(r.details.find("known published defect") != std::string::npos);
            const std::size_t total = reference_moments().size();
            CHECK(r.details.find(std::to_string(total - 1) + "/" + std::to_string(total)) !=
                  std::string::npos);
        } else if (r.id == 5) {
            // 5 fails in exactly one clause: the published CII first moment
            // is below -1, impossible for a stochastic matrix. The other six
            // ensembles must gate normally (the detail lists violations; the
            // CII one must be the only entry).
            CHECK_FALSE(r.passed);
            CHECK(r.details.find("known published defect") != std::string::npos);
            CHECK(r.details.find("CII m_1") != std::string::npos);
            for (const char* other : {"U m_", "O m_", "AI m_", "AII m_", "AIII m_", "BDI m_"})
                CHECK(r.details.find(other) == std::string::npos);
        } else {
            CHECK(r.passed);
        }
    }
}
