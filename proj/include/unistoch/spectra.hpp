#pragma once

#include "unistoch/sampler.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

namespace unistoch {

/// Spectrum of one sampled stochastic matrix with the unit Perron-Frobenius
/// eigenvalue removed.
struct SpectrumSample {
    std::vector<std::complex<double>> eigenvalues; // N-1 entries, reduced
    std::vector<double> real_eigenvalues;          // filled for symmetric families
    std::vector<double> singular_values;           // N-1 entries, reduced
    double pf_residual = 0;                        // |lambda_PF - 1|
    double pf_singular_residual = 0;
    bool degenerate_pf = false; // more than one eigenvalue within 1e-6 of 1
    bool symmetric = false;
};

/// Removes the entry closest to the target (the PF eigenvalue is identified
/// as closest to 1, not largest in modulus, so round-off cannot select a
/// bulk eigenvalue of modulus marginally above 1).
template <class T>
std::pair<std::vector<T>, double> remove_closest(std::vector<T> values, const T& target) {
    int best = 0;
    double best_dist = std::abs(values[0] - target);
    for (int i = 1; i < static_cast<int>(values.size()); ++i) {
        const double d = std::abs(values[i] - target);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    values.erase(values.begin() + best);
    return {std::move(values), best_dist};
}

/// Full eigen + singular decomposition with PF removal. The symmetric flag
/// selects the self-adjoint solver (exactly real spectrum).
inline SpectrumSample reduced_spectrum(const StochasticMatrix& m, bool symmetric) {
    SpectrumSample out;
    out.symmetric = symmetric;
    const int n = static_cast<int>(m.entries.rows());

    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(m.entries);
        if (es.info() != Eigen::Success) throw std::runtime_error("reduced_spectrum: eigensolver failed");
        std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
        auto [reduced, resid] = remove_closest(ev, 1.0);
        out.pf_residual = resid;
        out.real_eigenvalues = reduced;
        out.eigenvalues.assign(reduced.begin(), reduced.end());
        out.degenerate_pf =
            std::count_if(reduced.begin(), reduced.end(), [](double x) { return std::abs(x - 1.0) < 1e-6; }) > 0;
    } else {
        Eigen::EigenSolver<RealMatrix> es(m.entries);
        if (es.info() != Eigen::Success) throw std::runtime_error("reduced_spectrum: eigensolver failed");
        std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
        auto [reduced, resid] = remove_closest(ev, std::complex<double>(1.0, 0.0));
        out.pf_residual = resid;
        out.eigenvalues = std::move(reduced);
        out.degenerate_pf = std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                                          [](const std::complex<double>& x) {
                                              return std::abs(x - 1.0) < 1e-6;
                                          }) > 0;
    }

    // singular values: M M^T is bistochastic, its unit eigenvalue is removed
    Eigen::JacobiSVD<RealMatrix> svd(m.entries);
    std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + n);
    auto [reduced_sv, sresid] = remove_closest(sv, 1.0);
    out.pf_singular_residual = sresid;
    out.singular_values = std::move(reduced_sv);
    return out;
}

/// Reduced singular values only (cheaper when eigenvalues are not needed).
inline std::vector<double> reduced_singulars(const StochasticMatrix& m) {
    const int n = static_cast<int>(m.entries.rows());
    Eigen::JacobiSVD<RealMatrix> svd(m.entries);
    std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + n);
    return remove_closest(sv, 1.0).first;
}

/// Mean and jackknife standard error of a per-sample statistic.
struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
    int samples = 0;
};

inline MonteCarloEstimate jackknife(const std::vector<double>& per_sample) {
    MonteCarloEstimate e;
    const int n = static_cast<int>(per_sample.size());
    e.samples = n;
    if (n == 0) return e;
    double sum = 0;
    for (double v : per_sample) sum += v;
    e.mean = sum / n;
    if (n < 2) return e;
    // leave-one-out means; for the sample mean the jackknife variance
    // coincides with s^2/n, computed here in its general form
    double var = 0;
    for (double v : per_sample) {
        const double loo = (sum - v) / (n - 1);
        var += (loo - e.mean) * (loo - e.mean);
    }
    var *= double(n - 1) / n;
    e.std_error = std::sqrt(var);
    return e;
}

/// Monte Carlo estimate of a reduced trace or singular moment over a batch
/// of spectra.
inline MonteCarloEstimate empirical_moment(const std::vector<SpectrumSample>& samples, int n,
                                           MomentKind kind) {
    if (samples.size() < 2) throw std::invalid_argument("empirical_moment: need at least 2 samples");
    std::vector<double> per;
    per.reserve(samples.size());
    for (const auto& s : samples) {
        if (kind == MomentKind::Trace) {
            std::complex<double> acc = 0;
            for (const auto& ev : s.eigenvalues) acc += std::pow(ev, n);
            per.push_back(acc.real());
        } else {
            double acc = 0;
            for (double sv : s.singular_values) acc += std::pow(sv, 2 * n);
            per.push_back(acc);
        }
    }
    return jackknife(per);
}

enum class SpectralLaw { GinibreDisc, Semicircle, QuarterCircle };

/// Radius estimate plus the Catalan moment diagnostics of a macroscopic law
/// fit. For the disc the radius is the 95th-percentile modulus; for the
/// (quarter-)semicircle it is moment-matched through X^2 = 4 <x^2>.
struct LawFit {
    SpectralLaw law{};
    double radius = 0;
    // even-moment diagnostics: observed <x^{2n}>, the C_n (X^2/4)^n
    // prediction at the fitted radius, and the jackknife SE of the
    // difference, for n = 1, 2, 3
    std::array<double, 3> moment_observed{};
    std::array<double, 3> moment_predicted{};
    std::array<double, 3> moment_diff_se{};
    double real_axis_count_mean = 0; // Ginibre families only
};

namespace detail_spec {

inline double catalan_d(int n) { return n == 1 ? 1 : (n == 2 ? 2 : 5); }

} // namespace detail_spec

/// Fits one macroscopic law to a batch of spectra. The eigenvalue set used
/// depends on the law: disc and semicircle use (reduced) eigenvalues,
/// quarter-circle uses reduced singular values.
inline LawFit law_fit(const std::vector<SpectrumSample>& samples, SpectralLaw law) {
    if (samples.size() < 2) throw std::invalid_argument("law_fit: need at least 2 samples");
    LawFit fit;
    fit.law = law;

    if (law == SpectralLaw::GinibreDisc) {
        std::vector<double> moduli;
        std::vector<double> real_counts;
        for (const auto& s : samples) {
            int on_axis = 0;
            double scale = 0;
            for (const auto& ev : s.eigenvalues) scale = std::max(scale, std::abs(ev));
            for (const auto& ev : s.eigenvalues) {
                moduli.push_back(std::abs(ev));
                if (std::abs(ev.imag()) < 1e-8 * scale) ++on_axis;
            }
            real_counts.push_back(on_axis);
        }
        if (moduli.empty()) throw std::invalid_argument("law_fit: reduced spectra are empty");
        std::sort(moduli.begin(), moduli.end());
        const std::size_t idx = static_cast<std::size_t>(0.95 * (moduli.size() - 1));
        fit.radius = moduli[idx];
        fit.real_axis_count_mean = jackknife(real_counts).mean;
        return fit;
    }

    // per-sample even moments of the fitted density
    const bool quarter = (law == SpectralLaw::QuarterCircle);
    if ((quarter && samples.front().singular_values.empty()) ||
        (!quarter && samples.front().eigenvalues.empty()))
        throw std::invalid_argument("law_fit: reduced spectra are empty");
    std::array<std::vector<double>, 3> per_moment;
    for (const auto& s : samples) {
        double count = 0;
        std::array<double, 3> acc{};
        if (quarter) {
            for (double sv : s.singular_values) {
                const double x2 = sv * sv;
                acc[0] += x2;
                acc[1] += x2 * x2;
                acc[2] += x2 * x2 * x2;
                ++count;
            }
        } else {
            for (const auto& ev : s.eigenvalues) {
                const double x2 = ev.real() * ev.real();
                acc[0] += x2;
                acc[1] += x2 * x2;
                acc[2] += x2 * x2 * x2;
                ++count;
            }
        }
        for (int i = 0; i < 3; ++i) per_moment[i].push_back(acc[i] / count);
    }

    const double m2 = jackknife(per_moment[0]).mean;
    fit.radius = 2.0 * std::sqrt(m2);

    // difference diagnostics with jackknife over samples: each replicate
    // re-estimates the radius, so the n = 1 check is exact by construction
    const int nsamp = static_cast<int>(samples.size());
    for (int n = 1; n <= 3; ++n) {
        const auto mn = jackknife(per_moment[n - 1]);
        fit.moment_observed[n - 1] = mn.mean;
        fit.moment_predicted[n - 1] = detail_spec::catalan_d(n) * std::pow(m2, n);
        std::vector<double> diff_rep;
        diff_rep.reserve(nsamp);
        double sum_m2 = 0, sum_mn = 0;
        for (int i = 0; i < nsamp; ++i) {
            sum_m2 += per_moment[0][i];
            sum_mn += per_moment[n - 1][i];
        }
        for (int i = 0; i < nsamp; ++i) {
            const double loo_m2 = (sum_m2 - per_moment[0][i]) / (nsamp - 1);
            const double loo_mn = (sum_mn - per_moment[n - 1][i]) / (nsamp - 1);
            diff_rep.push_back(loo_mn - detail_spec::catalan_d(n) * std::pow(loo_m2, n));
        }
        double mean_diff = 0;
        for (double d : diff_rep) mean_diff += d;
        mean_diff /= nsamp;
        double var = 0;
        for (double d : diff_rep) var += (d - mean_diff) * (d - mean_diff);
        fit.moment_diff_se[n - 1] = std::sqrt(var * double(nsamp - 1) / nsamp);
    }
    return fit;
}

/// Freedman-Diaconis histogram as (bin_left, bin_right, density) rows with
/// unit total mass.
struct Histogram {
    std::vector<double> left, right, density;
};

inline Histogram histogram(std::vector<double> values, int bins_override = 0) {
    if (values.empty()) throw std::invalid_argument("histogram: no data");
    std::sort(values.begin(), values.end());
    const double lo = values.front(), hi = values.back();
    int bins = bins_override;
    if (bins <= 0) {
        const std::size_t n = values.size();
        const double q1 = values[n / 4], q3 = values[(3 * n) / 4];
        const double width = 2.0 * (q3 - q1) / std::cbrt(double(n));
        bins = width > 0 ? std::max(1, static_cast<int>(std::ceil((hi - lo) / width))) : 1;
        bins = std::min(bins, 10000);
    }
    Histogram h;
    const double span = (hi > lo) ? (hi - lo) : 1.0;
    const double bw = span / bins;
    h.left.resize(bins);
    h.right.resize(bins);
    h.density.assign(bins, 0.0);
    for (int b = 0; b < bins; ++b) {
        h.left[b] = lo + b * bw;
        h.right[b] = lo + (b + 1) * bw;
    }
    for (double v : values) {
        int b = static_cast<int>((v - lo) / bw);
        b = std::clamp(b, 0, bins - 1);
        h.density[b] += 1.0;
    }
    for (double& d : h.density) d /= values.size() * bw;
    return h;
}

/// Draws `count` samples and decomposes each; the RNG stream is advanced
/// per-sample from (seed, stream + index) so batches can be regenerated and
/// parallelized deterministically.
inline std::vector<SpectrumSample> sample_spectra(const EnsembleSpec& spec, int count) {
    std::vector<SpectrumSample> out;
    out.reserve(count);
    const bool symmetric = is_symmetric_family(spec.family);
    for (int i = 0; i < count; ++i) {
        RngStream rng(spec.seed, spec.stream + i);
        out.push_back(reduced_spectrum(sample_stochastic(spec, rng), symmetric));
    }
    return out;
}

} // namespace unistoch
