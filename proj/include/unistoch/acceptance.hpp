#pragma once

#include "unistoch/count_tables.hpp"
#include "unistoch/moments.hpp"
#include "unistoch/reference_moments.hpp"
#include "unistoch/reference_tables.hpp"
#include "unistoch/sampler.hpp"
#include "unistoch/spectra.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace unistoch {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0;
};

struct AcceptanceOptions {
    bool quick = false; // smaller Monte Carlo batches; every gate unchanged
    int threads = 0;
    double budget = 2e8;
};

namespace detail_acc {

inline EnsembleSpec spec_of(Ensemble f, int N, int a, std::uint64_t seed) {
    EnsembleSpec s;
    s.family = f;
    s.N = N;
    if (is_chiral(f)) {
        s.a = a;
        s.b = N - a;
    }
    s.seed = seed;
    return s;
}

inline std::string ref_label(const ReferenceMoment& ref) {
    std::ostringstream os;
    os << ensemble_name(ref.ensemble) << " "
       << (ref.variant == MomentVariant::Shifted ? "mu" : (ref.kind == MomentKind::Trace ? "m" : "s"))
       << "_" << ref.n;
    if (is_chiral(ref.ensemble)) os << " (alpha=" << to_string(ref.alpha) << ")";
    return os.str();
}

} // namespace detail_acc

/// 1. The small orbit-count tables reproduce the frozen reference values
/// cell for cell, and the caption count identities hold.
inline CriterionResult criterion_tables(const AcceptanceOptions& opt) {
    CriterionResult r{1, "orbit-count table reproduction", true, "", 0};
    std::ostringstream bad;
    int checked = 0;
    for (const auto& [key, expected] : reference_tables()) {
        const auto [family, n] = key;
        const CountTable& t = table_cache().get(family, n, opt.budget, opt.threads);
        bool cells_ok = (t.cells.size() == expected.size());
        for (std::size_t i = 0; cells_ok && i < expected.size(); ++i)
            cells_ok = (t.cells[i] == expected[i]);
        const ChecksumReport cs = table_checksums(t);
        if (!cells_ok || !cs.all_ok) {
            r.passed = false;
            bad << " " << family_name(family) << "_" << n << (cells_ok ? " checksum" : " cells");
        }
        ++checked;
    }
    std::ostringstream d;
    d << checked << " tables checked";
    if (!r.passed) d << "; mismatch:" << bad.str();
    r.details = d.str();
    return r;
}

/// 2. Reconstructed closed forms equal the published ones as normalized
/// rational functions. The symplectic singular entry is a known published
/// defect: the comparison is still run and reported, and the recomputed
/// form is shown.
inline CriterionResult criterion_closed_forms(const AcceptanceOptions& opt) {
    CriterionResult r{2, "closed-form moment reproduction", true, "", 0};
    int matched = 0, total = 0;
    std::ostringstream notes;
    for (const auto& ref : reference_moments()) {
        ++total;
        const RationalFunction got =
            closed_form_moment(ref.ensemble, ref.kind, ref.n, ref.variant, ref.alpha, opt.budget,
                               opt.threads);
        if (got == ref.form) {
            ++matched;
        } else {
            r.passed = false;
            notes << "; " << detail_acc::ref_label(ref) << ": computed " << got.to_string()
                  << " vs published " << ref.form.to_string();
            if (ref.known_defect && got == ref.corrected)
                notes << " (known published defect; computation matches the Monte Carlo value)";
        }
    }
    std::ostringstream d;
    d << matched << "/" << total << " published forms matched" << notes.str();
    r.details = d.str();
    return r;
}

/// 3. Table assembly equals the literal contraction oracle exactly.
inline CriterionResult criterion_oracle(const AcceptanceOptions& opt) {
    CriterionResult r{3, "moment assembly vs literal contraction", true, "", 0};
    std::ostringstream bad;
    int checked = 0;
    auto compare = [&](Ensemble e, MomentKind kind, int n, int N, int a, int b) {
        MomentSpec ms;
        ms.ensemble = e;
        ms.kind = kind;
        ms.n = n;
        ms.variant = MomentVariant::Full;
        ms.dim = N;
        ms.a = a;
        ms.b = b;
        const Rational lhs = exact_moment(ms, opt.budget, opt.threads);
        const Rational rhs = direct_contraction(e, kind, n, N, a, b, 1e9);
        ++checked;
        if (lhs != rhs) {
            r.passed = false;
            bad << " " << ensemble_name(e) << "(n=" << n << ",N=" << N;
            if (a >= 0) bad << ",a=" << a;
            bad << ")";
        }
    };
    for (int n = 1; n <= 2; ++n)
        for (int N = 1; N <= 4; ++N) {
            compare(Ensemble::U, MomentKind::Trace, n, N, -1, -1);
            compare(Ensemble::O, MomentKind::Trace, n, N, -1, -1);
            compare(Ensemble::AI, MomentKind::Trace, n, N, -1, -1);
            // AII at N=1 sits on a genuine pole of W^O at dimension -1
            if (N >= 2) compare(Ensemble::AII, MomentKind::Trace, n, N, -1, -1);
            for (int a = 0; a <= N; ++a) {
                compare(Ensemble::AIII, MomentKind::Trace, n, N, a, N - a);
                compare(Ensemble::BDI, MomentKind::Trace, n, N, a, N - a);
            }
        }
    for (int N = 1; N <= 4; ++N) {
        compare(Ensemble::U, MomentKind::Singular, 1, N, -1, -1);
        compare(Ensemble::O, MomentKind::Singular, 1, N, -1, -1);
    }
    std::ostringstream d;
    d << checked << " equalities checked (AII restricted to N >= 2: W^O pole at dimension -1)";
    if (!r.passed) d << "; mismatch:" << bad.str();
    r.details = d.str();
    return r;
}

/// 4. Large-N expansions of the reduced singular (even, for AI) traces start
/// at the Catalan term: T_{n,j} = 0 for j < 2n and T_{n,2n} equal to C_n,
/// 2^n C_n and C_n for U, O and AI.
inline CriterionResult criterion_catalan(const AcceptanceOptions& opt) {
    CriterionResult r{4, "Catalan coefficients and cancellations", true, "", 0};
    std::ostringstream bad;
    auto check_one = [&](Ensemble e, int n, const Rational& leading) {
        const MomentKind kind = (e == Ensemble::AI) ? MomentKind::Trace : MomentKind::Singular;
        const int form_n = (e == Ensemble::AI) ? 2 * n : n;
        const RationalFunction f =
            closed_form_moment(e, kind, form_n, MomentVariant::Reduced, 0, opt.budget, opt.threads);
        const auto t = laurent_coefficients(f, n, 2 * n);
        for (int j = 1; j < 2 * n; ++j)
            if (t[j - 1] != 0) {
                r.passed = false;
                bad << " T^" << ensemble_name(e) << "_{" << n << "," << j << "}=" << to_string(t[j - 1]);
            }
        if (t[2 * n - 1] != leading) {
            r.passed = false;
            bad << " T^" << ensemble_name(e) << "_{" << n << "," << 2 * n << "}=" << to_string(t[2 * n - 1])
                << " (want " << to_string(leading) << ")";
        }
    };
    for (int n = 1; n <= 3; ++n) check_one(Ensemble::U, n, Rational(catalan(n)));
    for (int n = 1; n <= 2; ++n) check_one(Ensemble::O, n, Rational(catalan(n) * (BigInt(1) << n)));
    for (int n = 1; n <= 2; ++n) check_one(Ensemble::AI, n, Rational(catalan(n)));
    r.details = r.passed ? "T vanishing and Catalan leading terms verified (U n<=3, O n<=2, AI n<=2)"
                         : "violations:" + bad.str();
    return r;
}

/// 5. Monte Carlo estimates sit within 5 jackknife standard errors of the
/// exact reduced moments. The CII target is the published first-moment
/// formula; it is impossible for a stochastic matrix away from alpha = 1
/// (reduced trace >= -1 always, the formula gives about -2 at alpha = 0),
/// so that clause is expected to fail and is reported with the measured
/// value.
inline CriterionResult criterion_monte_carlo(const AcceptanceOptions& opt) {
    CriterionResult r{5, "Monte Carlo vs exact moments", true, "", 0};
    const int count = opt.quick ? 250 : 1000;
    std::ostringstream bad;

    struct Case {
        Ensemble family;
        int N, a, n;
        Rational exact;
        const char* defect_note;
    };
    std::vector<Case> cases;
    auto reduced = [&](Ensemble e, int n, int N, int a, int b) {
        MomentSpec ms;
        ms.ensemble = e;
        ms.kind = MomentKind::Trace;
        ms.n = n;
        ms.variant = MomentVariant::Reduced;
        ms.dim = N;
        ms.a = a;
        ms.b = b;
        return exact_moment(ms, opt.budget, opt.threads);
    };
    cases.push_back({Ensemble::U, 50, -1, 2, reduced(Ensemble::U, 2, 50, -1, -1), nullptr});
    cases.push_back({Ensemble::O, 50, -1, 2, reduced(Ensemble::O, 2, 50, -1, -1), nullptr});
    cases.push_back({Ensemble::AI, 50, -1, 2, reduced(Ensemble::AI, 2, 50, -1, -1), nullptr});
    cases.push_back({Ensemble::AII, 25, -1, 2, reduced(Ensemble::AII, 2, 25, -1, -1), nullptr}); // side 50
    cases.push_back({Ensemble::AIII, 50, 30, 1, reduced(Ensemble::AIII, 1, 50, 30, 20), nullptr});
    cases.push_back({Ensemble::BDI, 50, 30, 1, reduced(Ensemble::BDI, 1, 50, 30, 20), nullptr});
    cases.push_back({Ensemble::CII, 20, 10, 1, cii_reduced_m1_reference(20, 10, 10),
                     "known published defect: the target is below -1, impossible for a "
                     "stochastic matrix; the measured value is the ensemble truth"});

    for (const auto& c : cases) {
        const auto spectra = sample_spectra(detail_acc::spec_of(c.family, c.N, c.a, 20260809), count);
        const auto est = empirical_moment(spectra, c.n, MomentKind::Trace);
        const double target = static_cast<double>(c.exact);
        const double dev = std::abs(est.mean - target);
        if (!(dev < 5 * est.std_error)) {
            r.passed = false;
            bad << " " << ensemble_name(c.family) << " m_" << c.n << ": " << est.mean << " vs "
                << target << " (" << dev / est.std_error << " SE)";
            if (c.defect_note) bad << " [" << c.defect_note << "]";
        }
    }
    std::ostringstream d;
    d << cases.size() << " ensembles at " << count << " samples, 5 SE gate";
    if (!r.passed) d << "; out of tolerance:" << bad.str();
    r.details = d.str();
    return r;
}

/// 6. Macroscopic spectral laws at matrix side 100: Ginibre-disc radii
/// within 10% of the asymptotic values, and the first two even moments of
/// the semicircle (AI, AII) and quarter-circle (U, O) data within 3
/// jackknife standard errors of the exact finite-N moments. The asymptotic
/// Catalan values differ from the finite-N truth by about 1% here, well
/// above the statistical resolution of the batch, so the statistically
/// meaningful 3 SE gate is against the exact values, whose leading terms
/// carry the Catalan structure checked exactly by criterion 4.
inline CriterionResult criterion_laws(const AcceptanceOptions& opt) {
    CriterionResult r{6, "macroscopic spectral laws", true, "", 0};
    const int count = opt.quick ? 30 : 100;
    const int side = 100;
    std::ostringstream bad;

    auto radius_gate = [&](const char* label, double got, double want) {
        if (!(std::abs(got - want) < 0.10 * want)) {
            r.passed = false;
            bad << " " << label << " radius " << got << " vs " << want;
        }
    };
    // observed per-eigenvalue even moment vs exact, 3 jackknife SE
    auto moment_gate = [&](const std::string& label, const std::vector<SpectrumSample>& sp,
                           MomentKind kind, int n, const Rational& exact_reduced) {
        const auto est = empirical_moment(sp, n, kind);
        const double per_ev = est.mean / (side - 1);
        const double target = static_cast<double>(exact_reduced) / (side - 1);
        const double se = est.std_error / (side - 1);
        if (!(std::abs(per_ev - target) < 3 * se)) {
            r.passed = false;
            bad << " " << label << " moment " << 2 * n << ": " << per_ev << " vs " << target << " ("
                << std::abs(per_ev - target) / se << " SE)";
        }
    };
    auto exact_reduced = [&](Ensemble e, MomentKind kind, int n, int param) {
        MomentSpec ms;
        ms.ensemble = e;
        ms.kind = kind;
        ms.n = n;
        ms.variant = MomentVariant::Reduced;
        ms.dim = param;
        return exact_moment(ms, opt.budget, opt.threads);
    };

    // Ginibre discs and quarter-circle singular moments
    {
        const auto su = sample_spectra(detail_acc::spec_of(Ensemble::U, side, -1, 611), count);
        radius_gate("U disc", law_fit(su, SpectralLaw::GinibreDisc).radius, 1.0 / std::sqrt(side));
        for (int n = 1; n <= 2; ++n)
            moment_gate("U quarter-circle", su, MomentKind::Singular, n,
                        exact_reduced(Ensemble::U, MomentKind::Singular, n, side));

        const auto so = sample_spectra(detail_acc::spec_of(Ensemble::O, side, -1, 612), count);
        radius_gate("O disc", law_fit(so, SpectralLaw::GinibreDisc).radius, std::sqrt(2.0 / side));
        for (int n = 1; n <= 2; ++n)
            moment_gate("O quarter-circle", so, MomentKind::Singular, n,
                        exact_reduced(Ensemble::O, MomentKind::Singular, n, side));

        const auto ss = sample_spectra(detail_acc::spec_of(Ensemble::S, side / 2, -1, 613), count);
        radius_gate("S disc", law_fit(ss, SpectralLaw::GinibreDisc).radius, 1.0 / std::sqrt(side));
    }
    // semicircles: radius vs 2/sqrt(side), even trace moments vs exact
    for (auto [fam, seed] : {std::pair{Ensemble::AI, 614}, {Ensemble::AII, 615}}) {
        const int param = (fam == Ensemble::AII) ? side / 2 : side;
        const auto sp = sample_spectra(detail_acc::spec_of(fam, param, -1, seed), count);
        const LawFit fit = law_fit(sp, SpectralLaw::Semicircle);
        radius_gate(ensemble_name(fam).c_str(), fit.radius, 2.0 / std::sqrt(side));
        for (int n = 1; n <= 2; ++n)
            moment_gate(ensemble_name(fam) + " semicircle", sp, MomentKind::Trace, 2 * n,
                        exact_reduced(fam, MomentKind::Trace, 2 * n, param));
    }

    std::ostringstream d;
    d << "side " << side << ", " << count
      << " samples; disc radii 10%, even moments 3 SE against exact finite-N values";
    if (!r.passed) d << "; out of tolerance:" << bad.str();
    r.details = d.str();
    return r;
}

/// 7. Structural invariants of the samplers at fixed seeds.
inline CriterionResult criterion_structure(const AcceptanceOptions&) {
    CriterionResult r{7, "structural invariants", true, "", 0};
    std::ostringstream bad;
    auto gate = [&](const char* label, double value, double tol) {
        if (!(value < tol)) {
            r.passed = false;
            bad << " " << label << "=" << value << " (tol " << tol << ")";
        }
    };

    for (Ensemble f : {Ensemble::O, Ensemble::U, Ensemble::S, Ensemble::AI, Ensemble::AII,
                       Ensemble::AIII, Ensemble::BDI, Ensemble::CII}) {
        const int param = (f == Ensemble::S || f == Ensemble::AII || f == Ensemble::CII) ? 16 : 32;
        const EnsembleSpec spec = detail_acc::spec_of(f, param, is_chiral(f) ? param / 2 : -1, 907);
        RngStream rng(spec.seed, 0);
        const ComplexMatrix u = ensemble_sample(spec, rng);
        const StochasticMatrix m = to_stochastic(u);
        const std::string nm = ensemble_name(f);
        gate((nm + " row sums").c_str(), m.row_sum_deviation, 1e-10);
        gate((nm + " col sums").c_str(), m.col_sum_deviation, 1e-10);
        if (is_symmetric_family(f))
            gate((nm + " M symmetry").c_str(),
                 (m.entries - m.entries.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        const SpectrumSample s = reduced_spectrum(m, is_symmetric_family(f));
        gate((nm + " PF residual").c_str(), s.pf_residual, 1e-8);

        if (f == Ensemble::S) {
            const int N = spec.N;
            ComplexMatrix j = ComplexMatrix::Zero(2 * N, 2 * N);
            j.topRightCorner(N, N) = ComplexMatrix::Identity(N, N);
            j.bottomLeftCorner(N, N) = -ComplexMatrix::Identity(N, N);
            gate("S symplectic structure", (u * j * u.transpose() - j).cwiseAbs().maxCoeff(), 1e-8);
        }
        if (f == Ensemble::AII)
            gate("AII antisymmetry", (u + u.transpose()).cwiseAbs().maxCoeff(), 1e-13);
    }
    r.details = r.passed ? "bistochasticity, symmetry, PF residual, symplectic and antisymmetry gates"
                         : "violations:" + bad.str();
    return r;
}

/// Runs all seven top-level checks, one pass/fail line each.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                                   std::ostream* progress = nullptr) {
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult> results;
    auto run = [&](auto&& fn) {
        const auto t0 = Clock::now();
        CriterionResult r = fn(opt);
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (progress)
            (*progress) << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                        << " — " << r.details << " (" << r.seconds << " s)\n";
        results.push_back(std::move(r));
    };
    run(criterion_tables);
    run(criterion_closed_forms);
    run(criterion_oracle);
    run(criterion_catalan);
    run(criterion_monte_carlo);
    run(criterion_laws);
    run(criterion_structure);
    return results;
}

} // namespace unistoch
