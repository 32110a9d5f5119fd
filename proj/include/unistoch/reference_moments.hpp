#pragma once

#include "unistoch/moments.hpp"
#include "unistoch/polynomial.hpp"

#include <vector>

namespace unistoch {

/// One frozen reduced-moment closed form, as a rational function of the
/// ensemble dimension parameter N (half the matrix side for S and AII).
/// Chiral forms are specialized to a fixed asymmetry ray alpha = (a-b)/N.
struct ReferenceMoment {
    Ensemble ensemble;
    MomentKind kind;
    int n;
    MomentVariant variant;
    Rational alpha; // chiral families only
    RationalFunction form;
    // Set when the published form is known to disagree with the ensemble it
    // claims to describe; `corrected` then holds the recomputed form.
    bool known_defect = false;
    RationalFunction corrected;
};

namespace detail_ref {

inline Polynomial np(std::initializer_list<Rational> ascending) { return Polynomial(ascending); }

// (N + c)
inline Polynomial ln(const Rational& c) { return Polynomial({c, Rational(1)}); }

inline RationalFunction make(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

} // namespace detail_ref

/// Every reduced trace/singular closed form printed for the Lie-group and
/// circular families, plus the chiral first/second moments on the alpha = 0
/// and alpha = 1/2 rays, and the symplectic pair.
inline std::vector<ReferenceMoment> reference_moments() {
    using namespace detail_ref;
    using E = Ensemble;
    using K = MomentKind;
    using V = MomentVariant;
    const Polynomial N = Polynomial::variable();
    std::vector<ReferenceMoment> out;

    auto add = [&](Ensemble e, MomentKind k, int n, MomentVariant v, Rational alpha,
                   RationalFunction f) {
        ReferenceMoment ref;
        ref.ensemble = e;
        ref.kind = k;
        ref.n = n;
        ref.variant = v;
        ref.alpha = std::move(alpha);
        ref.form = std::move(f);
        out.push_back(std::move(ref));
    };

    // unitary group
    add(E::U, K::Trace, 2, V::Reduced, 0, make(1, ln(1)));
    add(E::U, K::Trace, 3, V::Reduced, 0, make(2, ln(1) * ln(2)));
    add(E::U, K::Trace, 4, V::Reduced, 0, make(np({6, 12, 1}), N * ln(1) * ln(2) * ln(3)));
    add(E::U, K::Trace, 5, V::Reduced, 0, make(34, ln(1) * ln(2) * ln(3) * ln(4)));
    add(E::U, K::Singular, 1, V::Reduced, 0, make(ln(-1), ln(1)));
    add(E::U, K::Singular, 2, V::Reduced, 0, make(2 * ln(-1) * ln(4), ln(3) * ln(2) * ln(1)));
    add(E::U, K::Singular, 3, V::Reduced, 0,
        make(np({-256, -46, 217, 60, 5}), ln(5) * ln(4) * ln(3) * ln(2) * ln(1) * ln(1)));

    // orthogonal group
    add(E::O, K::Trace, 2, V::Reduced, 0, make(2, ln(2)));
    add(E::O, K::Trace, 3, V::Reduced, 0, make(8, ln(2) * ln(4)));
    add(E::O, K::Trace, 4, V::Reduced, 0, make(4 * np({36, 23, 1}), ln(1) * ln(2) * ln(4) * ln(6)));
    add(E::O, K::Trace, 5, V::Reduced, 0,
        make(16 * np({24, 29}), ln(1) * ln(2) * ln(4) * ln(6) * ln(8)));
    add(E::O, K::Singular, 1, V::Reduced, 0, make(np({-2, 2}), ln(2)));
    add(E::O, K::Singular, 2, V::Reduced, 0,
        make(np({-4, 4}) * np({12, 17, 2}), ln(1) * ln(2) * ln(4) * ln(6)));

    // circular ensembles
    add(E::AI, K::Trace, 1, V::Reduced, 0, make(ln(-1), ln(1)));
    add(E::AI, K::Trace, 2, V::Reduced, 0, make(ln(-1) * ln(5), ln(1) * ln(3)));
    add(E::AI, K::Trace, 3, V::Reduced, 0, make(np({-29, 22, 3}), ln(1) * ln(3) * ln(5)));
    add(E::AI, K::Trace, 4, V::Reduced, 0,
        make(2 * np({-323, 92, 146, 20, 1}), ln(1) * ln(2) * ln(3) * ln(5) * ln(7)));

    add(E::AII, K::Trace, 1, V::Reduced, 0, RationalFunction(-1));
    add(E::AII, K::Trace, 2, V::Reduced, 0, RationalFunction(1));
    add(E::AII, K::Trace, 3, V::Reduced, 0, make(-3, np({1, 2})));
    add(E::AII, K::Trace, 4, V::Reduced, 0, make(np({5, 2}), np({1, 2}) * ln(1)));

    // chiral ensembles on fixed-asymmetry rays
    for (Rational alpha : {Rational(0), Rational(1, 2)}) {
        const Rational a2 = alpha * alpha;
        const Rational a4 = a2 * a2;
        add(E::AIII, K::Trace, 1, V::Reduced, alpha, make(np({-1, 0, a2}), ln(1)));
        add(E::AIII, K::Trace, 2, V::Reduced, alpha,
            make(np({-3, Rational(3) - 4 * a2, 2 * a2 + 1, a4}), ln(1) * ln(3)));
        add(E::AIII, K::Trace, 1, V::Shifted, alpha, make(Polynomial(a2 - 1), ln(1)));
        add(E::BDI, K::Trace, 1, V::Reduced, alpha, make(np({-2, 1, a2}), ln(2)));
        add(E::BDI, K::Trace, 1, V::Shifted, alpha, make(Rational(1 - a2) * ln(-2), ln(2)));
    }

    // symplectic group (dimension parameter N, matrix side 2N)
    add(E::S, K::Trace, 2, V::Reduced, 0, make(2, np({1, 2})));
    // The published s_1^S is inconsistent with the ensemble: the first
    // column of a Haar symplectic matrix is uniform on the sphere, so
    // <|U_11|^4> = 1/(N(2N+1)) and the reduced value is (2N-1)/(2N+1).
    // Monte Carlo and the literal contraction both confirm the corrected
    // form; the published one is kept as the comparison target so the
    // discrepancy is reported, not hidden.
    add(E::S, K::Singular, 1, V::Reduced, 0, make(np({1, 1, 2}), ln(-1) * np({1, 2})));
    out.back().known_defect = true;
    out.back().corrected = make(np({-1, 2}), np({1, 2}));

    return out;
}

} // namespace unistoch
