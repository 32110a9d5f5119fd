#pragma once

#include "unistoch/errors.hpp"
#include "unistoch/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unistoch {

/// Dense univariate polynomial over the rationals, coefficients ascending.
class Polynomial {
public:
    Polynomial() = default; // zero

    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    /* implicit */ Polynomial(const Rational& constant) : c_{constant} { trim(); }
    /* implicit */ Polynomial(int constant) : c_{Rational(constant)} { trim(); }

    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
    /// b*N + a
    static Polynomial affine(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    template <class T>
    T evaluate(const T& x) const {
        T acc = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const {
        std::vector<Rational> c = c_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    /// Quotient and remainder, denominator must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::invalid_argument("Polynomial divmod: division by zero");
        Polynomial rem = a;
        std::vector<Rational> q(a.c_.size() > b.c_.size() - 1 ? a.c_.size() - b.c_.size() + 1 : 0,
                                Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int shift = rem.degree() - b.degree();
            const Rational f = rem.leading() / b.leading();
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
            sub.insert(sub.end(), b.c_.begin(), b.c_.end());
            for (auto& x : sub) x *= f;
            rem = rem - Polynomial(std::move(sub));
        }
        return {Polynomial(std::move(q)), rem};
    }

    /// Monic gcd via the Euclidean algorithm.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return (Rational(1) / a.leading()) * a;
    }

    /// p(s*N + t), used for the dimension shifts N+1, -2N, 1-2N.
    Polynomial compose_affine(const Rational& s, const Rational& t) const {
        return evaluate(Polynomial::affine(t, s));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string(const std::string& var = "N") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& x = c_[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            if (!first) os << (x > 0 ? " + " : " - ");
            else if (x < 0) os << "-";
            Rational ax = x > 0 ? x : Rational(-x);
            if (ax != 1 || i == 0) os << unistoch::to_string(ax);
            if (i > 0) {
                if (ax != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Ratio of two polynomials in the symbolic dimension, kept in a canonical
/// form: coprime, integer coefficients, content-1 parts, positive leading
/// denominator (the integer contents sit in a coprime scalar pair).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    /* implicit */ RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) { normalize(); }
    /* implicit */ RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) { normalize(); }
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable(), Polynomial(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    /// Exact evaluation; throws PoleError on a pole of the reduced form.
    Rational evaluate(const Rational& x) const {
        Rational d = den_.evaluate(x);
        if (d == 0) throw PoleError("RationalFunction: evaluation at a pole");
        return num_.evaluate(x) / d;
    }

    /// f(s*N + t).
    RationalFunction compose_affine(const Rational& s, const Rational& t) const {
        return RationalFunction(num_.compose_affine(s, t), den_.compose_affine(s, t));
    }

    std::string to_string(const std::string& var = "N") const {
        if (den_ == Polynomial(1)) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    /// Scales p to a primitive integer polynomial; returns the pulled-out
    /// rational content.
    static Rational make_primitive(Polynomial& p) {
        if (p.is_zero()) return 0;
        BigInt lcm_den = 1;
        for (const Rational& c : p.coeffs())
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
        BigInt gcd_num = 0;
        for (const Rational& c : p.coeffs())
            gcd_num = boost::multiprecision::gcd(gcd_num, BigInt(numerator(c) * (lcm_den / denominator(c))));
        std::vector<Rational> scaled;
        for (const Rational& c : p.coeffs())
            scaled.push_back(Rational(numerator(c) * (lcm_den / denominator(c)) / gcd_num));
        p = Polynomial(std::move(scaled));
        return Rational(gcd_num, lcm_den);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational scalar = make_primitive(num_) / make_primitive(den_);
        if (den_.leading() < 0) {
            den_ = Rational(-1) * den_;
            scalar = -scalar;
        }
        num_ = Rational(numerator(scalar)) * num_;
        den_ = Rational(denominator(scalar)) * den_;
    }

    Polynomial num_;
    Polynomial den_;
};

/// Coefficient of N^exponent in the expansion of f at N -> infinity.
inline Rational laurent_coefficient_at_infinity(const RationalFunction& f, int exponent) {
    if (f.is_zero()) return 0;
    const int dp = f.num().degree();
    const int dq = f.den().degree();
    const int lead = dp - dq; // largest exponent present
    const int idx = lead - exponent;
    if (idx < 0) return 0;
    // series of reversed(num)/reversed(den) in t = 1/N up to order idx
    auto rev = [](const Polynomial& p) {
        std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
        return c;
    };
    const std::vector<Rational> a = rev(f.num());
    const std::vector<Rational> b = rev(f.den());
    std::vector<Rational> s(static_cast<std::size_t>(idx) + 1, Rational(0));
    for (int i = 0; i <= idx; ++i) {
        Rational acc = i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)] : Rational(0);
        for (int j = 1; j <= i && j < static_cast<int>(b.size()); ++j)
            acc -= b[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(i - j)];
        s[static_cast<std::size_t>(i)] = acc / b[0];
    }
    return s[static_cast<std::size_t>(idx)];
}

} // namespace unistoch
