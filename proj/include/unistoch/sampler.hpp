#pragma once

#include "unistoch/errors.hpp"
#include "unistoch/moments.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace unistoch {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Which compact group or symmetric space a sample is drawn from, plus the
/// dimension and signature parameters and the RNG coordinates. N is the
/// dimension parameter of the exact formulas: the matrix side for O, U, AI,
/// AIII, BDI and half the side for S, AII, CII.
struct EnsembleSpec {
    Ensemble family = Ensemble::U;
    int N = 2;
    int a = -1, b = -1; // chiral families; a + b = N
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    int matrix_side() const {
        return (family == Ensemble::S || family == Ensemble::AII || family == Ensemble::CII) ? 2 * N
                                                                                             : N;
    }

    void validate() const {
        if (N < 1) throw std::invalid_argument("EnsembleSpec: N must be >= 1");
        if (is_chiral(family)) {
            if (a < 0 || b < 0 || a + b != N)
                throw std::invalid_argument("EnsembleSpec: chiral families need a + b = N, a,b >= 0");
        }
    }

    double alpha() const { return is_chiral(family) ? double(a - b) / N : 0.0; }
};

/// Deterministic RNG stream: (seed, stream) keys a splitmix64 expansion that
/// seeds a mersenne twister; gaussians come from a polar Box-Muller
/// transform, so the sample sequence is reproducible bit for bit.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ull * (stream + 1));
        auto splitmix = [&x]() {
            x += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        };
        std::seed_seq seq{splitmix(), splitmix(), splitmix(), splitmix()};
        gen_.seed(seq);
    }

    double uniform() { // in (0, 1]
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace detail_samp {

inline ComplexMatrix complex_ginibre(int n, RngStream& rng) {
    ComplexMatrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = rng.complex_gaussian();
    return g;
}

inline RealMatrix real_ginibre(int n, RngStream& rng) {
    RealMatrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = rng.gaussian();
    return g;
}

// QR with the phase correction: dividing column j by the phase of R_jj makes
// the distribution Haar rather than merely orthonormal.
inline ComplexMatrix haar_from_ginibre(const ComplexMatrix& g) {
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < q.cols(); ++j) {
        const std::complex<double> d = r(j, j);
        const double ad = std::abs(d);
        if (ad > 0) q.col(j) /= (d / ad);
    }
    return q;
}

inline RealMatrix haar_from_ginibre(const RealMatrix& g) {
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ() * RealMatrix::Identity(g.rows(), g.cols());
    const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < q.cols(); ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

// dual partner of a column under the quaternion structure [[A,B],[-B*,A*]]
inline Eigen::VectorXcd quaternion_partner(const Eigen::VectorXcd& v) {
    const int n = static_cast<int>(v.size()) / 2;
    Eigen::VectorXcd w(2 * n);
    w.head(n) = -v.tail(n).conjugate();
    w.tail(n) = v.head(n).conjugate();
    return w;
}

// Quaternion-structured Gram-Schmidt: columns are orthogonalized against all
// previous columns and their dual partners, normalized with a real positive
// coefficient. Equivalent to quaternionic QR of a quaternion Ginibre matrix,
// hence Haar on Sp(2N); the block structure holds to machine precision.
inline ComplexMatrix haar_symplectic(int N, RngStream& rng) {
    ComplexMatrix s(2 * N, 2 * N);
    for (int j = 0; j < N; ++j) {
        Eigen::VectorXcd v(2 * N);
        for (int i = 0; i < 2 * N; ++i) v(i) = rng.complex_gaussian();
        for (int pass = 0; pass < 2; ++pass) { // re-orthogonalize once for stability
            for (int k = 0; k < j; ++k) {
                v -= s.col(k) * (s.col(k).adjoint() * v)(0);
                v -= s.col(N + k) * (s.col(N + k).adjoint() * v)(0);
            }
        }
        v /= v.norm();
        s.col(j) = v;
        s.col(N + j) = quaternion_partner(v);
    }
    return s;
}

} // namespace detail_samp

/// Haar-distributed element of O(N), U(N) or Sp(2N) (complex 2N x 2N with
/// the quaternion block structure). Unitarity holds to ~1e-13.
inline ComplexMatrix haar_sample(Ensemble family, int N, RngStream& rng) {
    switch (family) {
    case Ensemble::O: return detail_samp::haar_from_ginibre(detail_samp::real_ginibre(N, rng)).cast<std::complex<double>>();
    case Ensemble::U: return detail_samp::haar_from_ginibre(detail_samp::complex_ginibre(N, rng));
    case Ensemble::S: return detail_samp::haar_symplectic(N, rng);
    default: throw std::invalid_argument("haar_sample: not a compact group family");
    }
}

/// Representative of the symmetric-space coset per family:
///   AI:   U = V V^T,                V Haar in U(N)
///   AII:  U = V J V^T,              V Haar in U(2N)   (antisymmetric)
///   AIII: U = V Jtilde_a V^dagger,  V Haar in U(N)    (Hermitian, U^2 = 1)
///   BDI:  U = V Jtilde_a V^T,       V Haar in O(N)    (real symmetric)
///   CII:  U = V Ktilde_a V^D,       V Haar in Sp(2N)  (self-dual, U^2 = 1)
inline ComplexMatrix symmetric_space_sample(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    const int N = spec.N;
    switch (spec.family) {
    case Ensemble::AI: {
        const ComplexMatrix v = haar_sample(Ensemble::U, N, rng);
        return v * v.transpose();
    }
    case Ensemble::AII: {
        const ComplexMatrix v = haar_sample(Ensemble::U, 2 * N, rng);
        ComplexMatrix j = ComplexMatrix::Zero(2 * N, 2 * N);
        j.topRightCorner(N, N) = ComplexMatrix::Identity(N, N);
        j.bottomLeftCorner(N, N) = -ComplexMatrix::Identity(N, N);
        return v * j * v.transpose();
    }
    case Ensemble::AIII: {
        const ComplexMatrix v = haar_sample(Ensemble::U, N, rng);
        Eigen::VectorXcd sig(N);
        for (int i = 0; i < N; ++i) sig(i) = (i < spec.a) ? 1.0 : -1.0;
        return v * sig.asDiagonal() * v.adjoint();
    }
    case Ensemble::BDI: {
        const ComplexMatrix v = haar_sample(Ensemble::O, N, rng);
        Eigen::VectorXcd sig(N);
        for (int i = 0; i < N; ++i) sig(i) = (i < spec.a) ? 1.0 : -1.0;
        return v * sig.asDiagonal() * v.transpose();
    }
    case Ensemble::CII: {
        const ComplexMatrix v = haar_sample(Ensemble::S, N, rng);
        Eigen::VectorXcd sig(2 * N); // Jtilde_a twice
        for (int i = 0; i < 2 * N; ++i) sig(i) = ((i % N) < spec.a) ? 1.0 : -1.0;
        ComplexMatrix j = ComplexMatrix::Zero(2 * N, 2 * N);
        j.topRightCorner(N, N) = ComplexMatrix::Identity(N, N);
        j.bottomLeftCorner(N, N) = -ComplexMatrix::Identity(N, N);
        const ComplexMatrix vdual = j * v.transpose() * j.transpose();
        return v * sig.asDiagonal() * vdual;
    }
    default: throw std::invalid_argument("symmetric_space_sample: not a symmetric-space family");
    }
}

/// One unitary draw from any of the eight ensembles.
inline ComplexMatrix ensemble_sample(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    switch (spec.family) {
    case Ensemble::O:
    case Ensemble::U:
    case Ensemble::S: return haar_sample(spec.family, spec.N, rng);
    default: return symmetric_space_sample(spec, rng);
    }
}

/// The induced bistochastic matrix M_ij = |U_ij|^2, with the defining
/// numerical checks recorded.
struct StochasticMatrix {
    RealMatrix entries;
    double unitarity_residual = 0;
    double row_sum_deviation = 0;
    double col_sum_deviation = 0;
};

inline StochasticMatrix to_stochastic(const ComplexMatrix& u, double unitarity_tol = 1e-10) {
    const int n = static_cast<int>(u.rows());
    StochasticMatrix m;
    m.unitarity_residual = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (m.unitarity_residual > unitarity_tol)
        throw std::runtime_error("to_stochastic: input is not numerically unitary, residual " +
                                 std::to_string(m.unitarity_residual));
    m.entries = u.cwiseAbs2();
    m.row_sum_deviation = (m.entries.rowwise().sum().array() - 1.0).abs().maxCoeff();
    m.col_sum_deviation = (m.entries.colwise().sum().array() - 1.0).abs().maxCoeff();
    return m;
}

inline StochasticMatrix sample_stochastic(const EnsembleSpec& spec, RngStream& rng) {
    return to_stochastic(ensemble_sample(spec, rng));
}

} // namespace unistoch
