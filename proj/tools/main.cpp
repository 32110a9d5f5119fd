// Command line interface: sampling, exact moments, orbit-count tables,
// Weingarten tables, large-N coefficients and the verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 configuration error, 3 budget
// refusal.

#include "unistoch/acceptance.hpp"
#include "unistoch/count_tables.hpp"
#include "unistoch/moments.hpp"
#include "unistoch/reference_tables.hpp"
#include "unistoch/sampler.hpp"
#include "unistoch/spectra.hpp"
#include "unistoch/version.hpp"
#include "unistoch/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

using namespace unistoch;
using nlohmann::json;

namespace {

json to_json(const Rational& q) {
    return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json to_json(const RationalFunction& f) {
    json num = json::array(), den = json::array();
    for (const Rational& c : f.num().coeffs()) num.push_back(to_string(c));
    for (const Rational& c : f.den().coeffs()) den.push_back(to_string(c));
    return json{{"num_coeffs", num}, {"den_coeffs", den}, {"display", f.to_string()}};
}

std::ostream& open_out(std::optional<std::ofstream>& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.emplace(path);
    if (!*file) throw std::runtime_error("cannot open output file: " + path);
    return *file;
}

Rational parse_alpha(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoi(s));
    return Rational(std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 1)));
}

struct SampleConfig {
    std::string ensemble = "U";
    int dim = 100;
    int a = -1;
    int count = 100;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
    std::string hist;
    std::string summary;
    std::string format = "json"; // json lines, or csv (one row per eigenvalue)
    int hist_bins = 0;
    bool emit_matrix = false;
};

int cmd_sample(const SampleConfig& cfg) {
    EnsembleSpec spec;
    spec.family = ensemble_from_name(cfg.ensemble);
    spec.N = cfg.dim;
    if (is_chiral(spec.family)) {
        if (cfg.a < 0) throw std::invalid_argument("chiral ensembles need --a (b = N - a)");
        spec.a = cfg.a;
        spec.b = cfg.dim - cfg.a;
    }
    spec.seed = cfg.seed;
    spec.stream = cfg.stream;
    spec.validate();

    std::optional<std::ofstream> out_file;
    std::ostream& out = open_out(out_file, cfg.out);

    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("--format must be json or csv");
    const bool csv = (cfg.format == "csv");
    if (csv) out << "sample,kind,re,im\n";

    const bool symmetric = is_symmetric_family(spec.family);
    std::vector<SpectrumSample> spectra;
    spectra.reserve(cfg.count);
    for (int i = 0; i < cfg.count; ++i) {
        RngStream rng(spec.seed, spec.stream + i);
        const ComplexMatrix u = ensemble_sample(spec, rng);
        const StochasticMatrix m = to_stochastic(u);
        SpectrumSample s = reduced_spectrum(m, symmetric);
        if (csv) {
            for (const auto& ev : s.eigenvalues)
                out << i << ",eigenvalue," << ev.real() << "," << ev.imag() << "\n";
            for (double sv : s.singular_values) out << i << ",singular," << sv << ",0\n";
            spectra.push_back(std::move(s));
            continue;
        }

        json rec{{"version", kVersion},
                 {"family", ensemble_name(spec.family)},
                 {"N", spec.N},
                 {"side", spec.matrix_side()},
                 {"seed", spec.seed},
                 {"stream", spec.stream + i},
                 {"checks",
                  {{"unitarity", m.unitarity_residual},
                   {"row_sum_dev", m.row_sum_deviation},
                   {"col_sum_dev", m.col_sum_deviation},
                   {"pf_residual", s.pf_residual},
                   {"degenerate_pf", s.degenerate_pf}}}};
        if (is_chiral(spec.family)) {
            rec["a"] = spec.a;
            rec["b"] = spec.b;
        }
        json re = json::array(), im = json::array(), sv = json::array();
        for (const auto& ev : s.eigenvalues) {
            re.push_back(ev.real());
            im.push_back(ev.imag());
        }
        for (double v : s.singular_values) sv.push_back(v);
        rec["eigenvalues_re"] = std::move(re);
        if (!symmetric) rec["eigenvalues_im"] = std::move(im);
        rec["singular_values"] = std::move(sv);
        if (cfg.emit_matrix) {
            json rows = json::array();
            for (int r = 0; r < m.entries.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c));
                rows.push_back(std::move(row));
            }
            rec["matrix"] = std::move(rows);
        }
        out << rec.dump() << "\n";
        spectra.push_back(std::move(s));
    }

    if (!cfg.hist.empty()) {
        // eigenvalue histogram for the symmetric (real-spectrum) families,
        // singular-value histogram otherwise
        std::vector<double> values;
        for (const auto& s : spectra) {
            if (symmetric)
                for (double v : s.real_eigenvalues) values.push_back(v);
            else
                for (double v : s.singular_values) values.push_back(v);
        }
        const Histogram h = histogram(values, cfg.hist_bins);
        std::ofstream hf(cfg.hist);
        if (!hf) throw std::runtime_error("cannot open histogram file: " + cfg.hist);
        hf << "bin_left,bin_right,density\n";
        for (std::size_t b = 0; b < h.left.size(); ++b)
            hf << h.left[b] << "," << h.right[b] << "," << h.density[b] << "\n";
    }

    // summary: config echo plus batch statistics
    {
        json summary{{"version", kVersion},
                     {"family", ensemble_name(spec.family)},
                     {"N", spec.N},
                     {"side", spec.matrix_side()},
                     {"count", cfg.count},
                     {"seed", spec.seed},
                     {"stream", spec.stream}};
        if (is_chiral(spec.family)) {
            summary["a"] = spec.a;
            summary["b"] = spec.b;
            summary["alpha"] = spec.alpha();
        }
        if (spec.matrix_side() < 2 || cfg.count < 2) {
            summary["note"] = "reduced spectra too small for batch statistics";
        } else {
            json moments = json::object();
            for (int n = 1; n <= 4; ++n) {
                const auto est = empirical_moment(spectra, n, MomentKind::Trace);
                moments["m" + std::to_string(n)] = {{"mean", est.mean}, {"std_error", est.std_error}};
            }
            for (int n = 1; n <= 2; ++n) {
                const auto est = empirical_moment(spectra, n, MomentKind::Singular);
                moments["s" + std::to_string(n)] = {{"mean", est.mean}, {"std_error", est.std_error}};
            }
            summary["reduced_moments"] = std::move(moments);
            if (symmetric) {
                const LawFit fit = law_fit(spectra, SpectralLaw::Semicircle);
                summary["semicircle"] = {{"radius", fit.radius},
                                         {"moment_observed", fit.moment_observed},
                                         {"moment_predicted", fit.moment_predicted}};
            } else {
                const LawFit disc = law_fit(spectra, SpectralLaw::GinibreDisc);
                summary["disc"] = {{"radius", disc.radius},
                                   {"real_axis_count_mean", disc.real_axis_count_mean}};
                const LawFit q = law_fit(spectra, SpectralLaw::QuarterCircle);
                summary["quarter_circle"] = {{"radius", q.radius},
                                             {"moment_observed", q.moment_observed},
                                             {"moment_predicted", q.moment_predicted}};
            }
        }
        if (cfg.summary.empty()) {
            std::cerr << summary.dump(2) << "\n";
        } else {
            std::ofstream sf(cfg.summary);
            if (!sf) throw std::runtime_error("cannot open summary file: " + cfg.summary);
            sf << summary.dump(2) << "\n";
        }
    }
    return 0;
}

struct MomentConfig {
    std::string ensemble = "U";
    int n = 1;
    std::string quantity = "trace";
    bool full = false;
    bool shifted = false;
    bool symbolic = false;
    int dim = 0;
    int a = -1, b = -1;
    std::string alpha = "0";
    double budget = 2e7;
    int threads = 0;
};

json moment_provenance(Ensemble e, MomentKind kind, int n) {
    json p = json::object();
    switch (e) {
    case Ensemble::U:
        p["table"] = (kind == MomentKind::Trace ? "FU_" : "GU_") + std::to_string(n);
        p["weingarten"] = "U order " + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        break;
    case Ensemble::O:
        p["table"] = (kind == MomentKind::Trace ? "FO_" : "GO_") + std::to_string(n);
        p["weingarten"] = "O order " + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        break;
    case Ensemble::AI:
        p["table"] = "FAI_" + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        p["weingarten"] = "O at dimension N+1";
        break;
    case Ensemble::AII:
        p["table"] = "FAII_" + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        p["weingarten"] = "O at dimension 1-2N";
        break;
    case Ensemble::AIII:
        p["table"] = "FAIII_" + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        p["weingarten"] = "AIII order " + std::to_string(2 * (kind == MomentKind::Trace ? n : 2 * n));
        break;
    case Ensemble::BDI:
        p["table"] = "FBDI_" + std::to_string(kind == MomentKind::Trace ? n : 2 * n);
        p["weingarten"] = "BDI order " + std::to_string(2 * (kind == MomentKind::Trace ? n : 2 * n));
        break;
    case Ensemble::S: p["route"] = "literal contraction (no orbit-table route)"; break;
    case Ensemble::CII: p["route"] = "none (Monte Carlo only)"; break;
    }
    return p;
}

int cmd_exact_moment(const MomentConfig& cfg) {
    const Ensemble e = ensemble_from_name(cfg.ensemble);
    const MomentKind kind = (cfg.quantity == "singular") ? MomentKind::Singular : MomentKind::Trace;
    MomentVariant variant = cfg.full ? MomentVariant::Full : MomentVariant::Reduced;
    if (cfg.shifted) variant = MomentVariant::Shifted;

    json out{{"version", kVersion},
             {"ensemble", cfg.ensemble},
             {"n", cfg.n},
             {"quantity", cfg.quantity},
             {"variant", cfg.shifted ? "shifted" : (cfg.full ? "full" : "reduced")},
             {"provenance", moment_provenance(e, kind, cfg.n)}};

    if (cfg.symbolic) {
        const Rational alpha = parse_alpha(cfg.alpha);
        if (is_chiral(e)) out["alpha"] = cfg.alpha;
        const RationalFunction f =
            closed_form_moment(e, kind, cfg.n, variant, alpha, cfg.budget, cfg.threads);
        out["closed_form"] = to_json(f);
    } else {
        MomentSpec spec;
        spec.ensemble = e;
        spec.kind = kind;
        spec.n = cfg.n;
        spec.variant = variant;
        spec.a = cfg.a;
        spec.b = cfg.b;
        if (is_chiral(e)) {
            if (cfg.a < 0 || cfg.b < 0)
                throw std::invalid_argument("chiral exact moments need --a and --b");
            spec.dim = cfg.a + cfg.b;
        } else {
            if (cfg.dim <= 0) throw std::invalid_argument("exact-moment needs --dim (or --symbolic)");
            spec.dim = cfg.dim;
        }
        out["N"] = cfg.dim > 0 ? cfg.dim : cfg.a + cfg.b;
        if (is_chiral(e)) {
            out["a"] = cfg.a;
            out["b"] = cfg.b;
        }
        Rational value;
        if (e == Ensemble::S)
            value = direct_contraction(Ensemble::S, kind, cfg.n, cfg.dim, -1, -1, cfg.budget) -
                    (variant == MomentVariant::Reduced ? 1 : 0);
        else
            value = exact_moment(spec, cfg.budget, cfg.threads);
        out["value"] = to_json(value);
        out["value_decimal"] = static_cast<double>(value);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_tables(const std::string& family, int n, bool check, double budget, int threads) {
    const TableFamily fam = family_from_name(family);
    const CountTable& t = table_cache().get(fam, n, budget, threads);

    json cols = json::array();
    for (const auto& p : t.columns) cols.push_back(p.to_string());
    json out{{"version", kVersion}, {"family", family}, {"n", n}, {"col_partitions", cols}};

    if (t.is_g()) {
        json cells = json::array();
        for (const auto& [mk, row] : t.g_cells)
            cells.push_back({{"m", mk.first}, {"k", mk.second}, {"counts", row}});
        out["g_entries"] = std::move(cells);
    } else {
        json labels = json::array();
        for (int m = 1; m <= t.row_count; ++m) labels.push_back("m=" + std::to_string(m));
        out["row_labels"] = std::move(labels);
        out["entries"] = t.cells;
    }

    const ChecksumReport cs = table_checksums(t);
    out["checksums"] = {{"total", cs.total.str()},
                        {"expected_total", cs.expected_total.str()},
                        {"all_ok", cs.all_ok}};

    int rc = 0;
    if (check) {
        const auto& refs = reference_tables();
        auto it = refs.find({fam, n});
        if (it == refs.end()) {
            out["golden"] = "no reference stored for this table";
        } else {
            const bool match = (t.cells == it->second);
            out["golden"] = match ? "match" : "MISMATCH";
            if (!match) rc = 1;
        }
        if (!cs.all_ok) rc = 1;
    }
    std::cout << out.dump(2) << "\n";
    return rc;
}

// even canonical representative of each coset type, in cycle notation
void attach_representatives(json& entries, int order) {
    std::map<std::string, std::string> reps;
    for_each_matching(order, [&](const Matching& m) {
        Permutation rep = m.canonical_rep();
        if (rep.sign() < 0)
            rep = rep * Permutation::from_cycles(rep.degree(), {{1, 2}}); // stay in the coset
        reps.try_emplace(coset_type(rep).to_string(), rep.cycle_string());
    });
    for (auto& e : entries) e["even_representative"] = reps.at(e["partition"].get<std::string>());
}

int cmd_weingarten(const std::string& family, int order, int dim, int a, int b, bool symbolic) {
    json out{{"version", kVersion}, {"family", family}, {"order", order}};
    json entries = json::array();

    auto emit_table = [&](const auto& table) {
        for (const auto& [lam, val] : table) {
            json e{{"partition", lam.to_string()}};
            if constexpr (std::is_same_v<std::decay_t<decltype(val)>, Rational>) {
                e["value_num"] = numerator(val).str();
                e["value_den"] = denominator(val).str();
            } else {
                e["closed_form"] = to_json(val);
            }
            entries.push_back(std::move(e));
        }
    };

    const bool chiral = (family == "AIII" || family == "BDI");
    if (chiral) {
        if (a < 0 || b < 0) throw std::invalid_argument("chiral Weingarten tables need --a and --b");
        out["a"] = a;
        out["b"] = b;
        if (symbolic)
            throw std::invalid_argument("symbolic chiral Weingarten tables are not supported; "
                                        "fix a signature with --a/--b");
        if (family == "AIII") emit_table(wg_aiii_table(order, a, b));
        else emit_table(wg_bdi_table(order, a, b));
    } else if (symbolic) {
        const RationalFunction N = RationalFunction::variable();
        if (family == "U") emit_table(wg_u_table(order, N));
        else if (family == "O") emit_table(wg_o_table(order, N));
        else if (family == "AI") emit_table(wg_ai_table(order, N));
        else if (family == "Sp" || family == "AII") {
            const RationalFunction shifted = (family == "Sp")
                                                 ? RationalFunction(-2) * N
                                                 : RationalFunction(1) - RationalFunction(2) * N;
            out["sign_channel"] =
                "values are for even coset representatives; odd representatives flip the sign";
            std::map<Partition, RationalFunction> table;
            for (const auto& [lam, v] : wg_o_table(order, shifted))
                table.emplace(lam, RationalFunction((order % 2) ? -1 : 1) * v);
            emit_table(table);
            attach_representatives(entries, order);
        } else {
            throw std::invalid_argument("unknown Weingarten family: " + family);
        }
    } else {
        if (dim == 0) throw std::invalid_argument("pointwise Weingarten tables need --dim");
        const Rational N(dim);
        if (family == "U") emit_table(wg_u_table(order, N));
        else if (family == "O") emit_table(wg_o_table(order, N));
        else if (family == "AI") emit_table(wg_ai_table(order, N));
        else if (family == "Sp" || family == "AII") {
            out["sign_channel"] =
                "values are for even coset representatives; odd representatives flip the sign";
            const Rational shifted = (family == "Sp") ? Rational(-2 * dim) : Rational(1 - 2 * dim);
            std::map<Partition, Rational> table;
            for (const auto& [lam, v] : wg_o_table(order, shifted))
                table.emplace(lam, Rational((order % 2) ? -1 : 1) * v);
            emit_table(table);
            attach_representatives(entries, order);
        } else {
            throw std::invalid_argument("unknown Weingarten family: " + family);
        }
    }
    if (dim != 0) out["dimension"] = dim;
    out["entries"] = std::move(entries);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_asymptotics(const std::string& ensemble, const std::string& quantity, int n, int terms,
                    bool full, double budget, int threads) {
    const Ensemble e = ensemble_from_name(ensemble);
    if (e != Ensemble::U && e != Ensemble::O && e != Ensemble::AI)
        throw std::invalid_argument("asymptotics supports ensembles U, O and AI");
    const MomentKind kind = (quantity == "singular") ? MomentKind::Singular : MomentKind::Trace;
    // T coefficients of (1/N) <tr ...> = sum_j T_{n,j} N^{n-j}; for AI the
    // relevant quantity is the even trace moment of order 2n. The reduced
    // trace is the default; with --full the removed unit eigenvalue
    // re-enters at j = n + 1 and the low-order cancellations disappear.
    const int form_n = (kind == MomentKind::Trace && e == Ensemble::AI) ? 2 * n : n;
    const MomentVariant variant = full ? MomentVariant::Full : MomentVariant::Reduced;
    const RationalFunction f = closed_form_moment(e, kind, form_n, variant, 0, budget, threads);
    if (terms <= 0) terms = 2 * n + 2;
    const auto t = laurent_coefficients(f, n, terms);
    json list = json::array();
    for (int j = 1; j <= terms; ++j)
        list.push_back(
            {{"j", j}, {"num", numerator(t[j - 1]).str()}, {"den", denominator(t[j - 1]).str()}});
    json out{{"version", kVersion},
             {"ensemble", ensemble},
             {"quantity", quantity},
             {"n", n},
             {"variant", full ? "full" : "reduced"},
             {"closed_form", to_json(f)},
             {"T", std::move(list)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(bool quick, int threads, double budget) {
    AcceptanceOptions opt;
    opt.quick = quick;
    opt.threads = threads;
    opt.budget = budget;
    const auto results = run_acceptance(opt, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "all criteria passed" : "some criteria FAILED (see lines above)") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random bistochastic matrices from compact groups: exact Weingarten moments, "
                 "combinatorial tables and Monte Carlo spectra"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SampleConfig sample_cfg;
    auto* sample = app.add_subcommand("sample", "draw matrices and emit reduced spectra");
    sample->add_option("--ensemble", sample_cfg.ensemble, "O U S AI AII AIII BDI CII")->required();
    sample->add_option("--dim", sample_cfg.dim, "dimension parameter N (side is 2N for S/AII/CII)")
        ->required();
    sample->add_option("--a", sample_cfg.a, "chiral signature a (b = N - a)");
    sample->add_option("--count", sample_cfg.count, "number of samples");
    sample->add_option("--seed", sample_cfg.seed, "rng seed");
    sample->add_option("--stream", sample_cfg.stream, "rng stream offset");
    sample->add_option("--out", sample_cfg.out, "json-lines output path (default stdout)");
    sample->add_option("--hist", sample_cfg.hist, "csv histogram path");
    sample->add_option("--hist-bins", sample_cfg.hist_bins, "histogram bin count (default auto)");
    sample->add_option("--summary", sample_cfg.summary, "summary json path (default stderr)");
    sample->add_flag("--emit-matrix", sample_cfg.emit_matrix, "embed the stochastic matrices");
    sample->add_option("--format", sample_cfg.format, "json (lines) or csv (row per eigenvalue)");

    MomentConfig mom_cfg;
    auto* mom = app.add_subcommand("exact-moment", "exact spectral moments");
    mom->add_option("--ensemble", mom_cfg.ensemble)->required();
    mom->add_option("--n", mom_cfg.n)->required();
    mom->add_option("--quantity", mom_cfg.quantity, "trace | singular");
    bool mom_reduced_flag = false;
    mom->add_flag("--full", mom_cfg.full, "full moment");
    mom->add_flag("--reduced", mom_reduced_flag, "reduced moment (default)")
        ->excludes("--full");
    mom->add_flag("--shifted", mom_cfg.shifted, "shifted chiral moment");
    mom->add_flag("--symbolic", mom_cfg.symbolic, "reconstruct the closed form in N");
    mom->add_option("--dim", mom_cfg.dim, "dimension parameter N");
    mom->add_option("--a", mom_cfg.a);
    mom->add_option("--b", mom_cfg.b);
    mom->add_option("--alpha", mom_cfg.alpha, "chiral ray for --symbolic: 0 or 1/2");
    mom->add_option("--budget", mom_cfg.budget, "enumeration/oracle budget");
    mom->add_option("--threads", mom_cfg.threads);

    std::string tab_family = "FU";
    int tab_n = 2;
    bool tab_check = false;
    double tab_budget = 2e7;
    int tab_threads = 0;
    auto* tab = app.add_subcommand("tables", "orbit-count tables");
    tab->add_option("--family", tab_family, "FU GU FO GO FAI FAII FAIII FBDI")->required();
    tab->add_option("--n", tab_n)->required();
    tab->add_flag("--check", tab_check, "compare against the stored reference");
    tab->add_option("--budget", tab_budget);
    tab->add_option("--threads", tab_threads);

    std::string wg_family = "U";
    int wg_order = 1, wg_dim = 0, wg_a = -1, wg_b = -1;
    bool wg_symbolic = false;
    auto* wg = app.add_subcommand("weingarten", "Weingarten function tables");
    wg->add_option("--family", wg_family, "U O Sp AI AII AIII BDI")->required();
    wg->add_option("--order", wg_order)->required();
    wg->add_option("--dim", wg_dim);
    wg->add_option("--a", wg_a);
    wg->add_option("--b", wg_b);
    wg->add_flag("--symbolic", wg_symbolic);

    std::string as_ensemble = "U", as_quantity = "singular";
    int as_n = 1, as_terms = 0;
    bool as_full = false;
    double as_budget = 2e7;
    int as_threads = 0;
    auto* as = app.add_subcommand("asymptotics", "large-N T coefficients");
    as->add_option("--ensemble", as_ensemble, "U O AI")->required();
    as->add_option("--quantity", as_quantity, "trace | singular");
    as->add_option("--n", as_n)->required();
    as->add_option("--terms", as_terms, "number of T_{n,j} terms (default 2n+2)");
    as->add_flag("--full", as_full, "expand the full trace instead of the reduced one");
    as->add_option("--budget", as_budget);
    as->add_option("--threads", as_threads);

    bool v_quick = false;
    int v_threads = 0;
    double v_budget = 2e8;
    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_flag("--quick", v_quick, "smaller Monte Carlo batches");
    ver->add_option("--threads", v_threads);
    ver->add_option("--budget", v_budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed()) return cmd_sample(sample_cfg);
        if (mom->parsed()) return cmd_exact_moment(mom_cfg);
        if (tab->parsed()) return cmd_tables(tab_family, tab_n, tab_check, tab_budget, tab_threads);
        if (wg->parsed()) return cmd_weingarten(wg_family, wg_order, wg_dim, wg_a, wg_b, wg_symbolic);
        if (as->parsed())
            return cmd_asymptotics(as_ensemble, as_quantity, as_n, as_terms, as_full, as_budget,
                                   as_threads);
        if (ver->parsed()) return cmd_verify(v_quick, v_threads, v_budget);
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
