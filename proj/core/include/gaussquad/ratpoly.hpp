#pragma once

// Dense univariate polynomials.
//
// Polynomial<F> stores coefficients in ascending degree order. The zero
// polynomial is the empty coefficient vector and every constructor and
// operation trims trailing zeros, so equality is coefficientwise.
// RatPoly (F = Rational) carries all exact work; HPPoly (F = HPScalar) is
// used when nodes are only known numerically.

#include <gaussquad/errors.hpp>
#include <gaussquad/numerics.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gaussquad {

template <class F>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }

    Polynomial(std::initializer_list<F> ascending) : c_(ascending) { trim(); }

    static Polynomial constant(const F& value) { return Polynomial(std::vector<F>{value}); }

    static Polynomial monomial(const F& coeff, std::size_t degree) {
        std::vector<F> c(degree + 1, F(0));
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    /// The identity polynomial x.
    static Polynomial identity() { return monomial(F(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    const std::vector<F>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^i; zero beyond the degree.
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

    const F& leading() const {
        if (c_.empty()) {
            throw ArithmeticError("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    Polynomial monic() const {
        const F lc = leading();
        std::vector<F> c = c_;
        for (auto& x : c) {
            x = x / lc;
        }
        return Polynomial(std::move(c));
    }

    /// Horner evaluation.
    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * F(static_cast<long>(i)));
        }
        return Polynomial(std::move(d));
    }

    /// p(scale * x + shift).
    Polynomial compose_affine(const F& scale, const F& shift) const {
        const Polynomial inner{shift, scale};
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * inner + constant(*it);
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] = c_[i] + o.c_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const F& s, const Polynomial& p) {
        std::vector<F> c = p.c_;
        for (auto& x : c) {
            x = s * x;
        }
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<F> c = c_;
        for (auto& x : c) {
            x = -x;
        }
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<F> c_;
};

using RatPoly = Polynomial<Rational>;
using HPPoly = Polynomial<HPScalar>;

/// Monic polynomial (x - r0)(x - r1)... ; the empty product is 1.
template <class F>
Polynomial<F> poly_from_roots(std::span<const F> roots) {
    Polynomial<F> p = Polynomial<F>::constant(F(1));
    for (const F& r : roots) {
        p = p * Polynomial<F>{-r, F(1)};
    }
    return p;
}

/// Euclidean division f = q g + r with deg r < deg g. Throws ArithmeticError for g = 0.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divrem(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (g.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    std::vector<F> rem = f.coeffs();
    const int dg = g.degree();
    const int df = f.degree();
    if (df < dg) {
        return {Polynomial<F>{}, f};
    }
    std::vector<F> quo(static_cast<std::size_t>(df - dg + 1), F(0));
    const F& lc = g.leading();
    for (int k = df - dg; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dg);
        F factor = rem[top] / lc;
        quo[static_cast<std::size_t>(k)] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (int j = 0; j <= dg; ++j) {
            const auto idx = static_cast<std::size_t>(k + j);
            rem[idx] = rem[idx] - factor * g.coeffs()[static_cast<std::size_t>(j)];
        }
        rem[top] = F(0); // exact cancellation for HPScalar too
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> poly_derivative(const Polynomial<F>& f) {
    return f.derivative();
}

/// Exact Horner evaluation.
inline Rational poly_eval_rat(const RatPoly& f, const Rational& x) {
    return f(x);
}

/// Horner evaluation of a rational polynomial at a floating point; the result
/// carries the precision of x.
HPScalar poly_eval_hp(const RatPoly& f, const HPScalar& x);

/// Numerical copy of a rational polynomial at the given precision.
HPPoly to_hp(const RatPoly& f, Digits d);

/// P = Z * zeta^{-1} mod zetap, deg P < deg zetap, so that P(r) = Z(r)/zeta(r)
/// at every root r of zetap. Extended Euclid over Q[x] with monic remainders.
/// Throws SharedRootError if zeta and zetap share a root and ArithmeticError if
/// zetap is zero.
RatPoly poly_mod_inverse_eval(const RatPoly& Z, const RatPoly& zeta, const RatPoly& zetap);

/// Exact integral over [0, 1].
template <class F>
F poly_definite_integral_01(const Polynomial<F>& f) {
    F sum(0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        sum = sum + f.coeffs()[i] / F(static_cast<long>(i + 1));
    }
    return sum;
}

/// Exact integral over [-1, 1] (full measure du, not the half measure).
template <class F>
F poly_definite_integral_pm1(const Polynomial<F>& f) {
    F sum(0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += 2) {
        sum = sum + F(2) * f.coeffs()[i] / F(static_cast<long>(i + 1));
    }
    return sum;
}

/// Human-readable form in descending powers, e.g. "t^3 - 3/2 t^2 + 1/2 t".
std::string to_string(const RatPoly& f, char var = 't');

} // namespace gaussquad
