#pragma once

// Truncated formal series in descending powers of the variable:
//
//     sigma = c[0] x^-1 + c[1] x^-2 + ... + c[K-1] x^-K
//
// The moment series of a measure (c[m] = m-th moment) is the formal expansion
// of its Cauchy transform at infinity. Multiplying it by a node polynomial T
// splits into a polynomial part (which determines the interpolatory weights)
// and a descending tail (which determines the error coefficients):
//
//     T * sigma = Tprime + tail,      error series Theta = tail / T.
//
// Every operation takes explicit truncation lengths and refuses to read past
// the coefficients it was given.

#include <gaussquad/ratpoly.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace gaussquad {

template <class F>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<F> coeffs) : c_(std::move(coeffs)) {}

    /// Truncation order K.
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<F>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^{-(m+1)}.
    const F& operator[](std::size_t m) const {
        if (m >= c_.size()) {
            throw TruncationError("series coefficient " + std::to_string(m) + " requested, only " +
                                  std::to_string(c_.size()) + " available");
        }
        return c_[m];
    }

    Series prefix(std::size_t count) const {
        if (count > c_.size()) {
            throw TruncationError("series prefix of " + std::to_string(count) + " requested, only " +
                                  std::to_string(c_.size()) + " available");
        }
        return Series(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(count)));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<F> c_;
};

using SeriesTail = Series<Rational>;

/// Moments of dt on [0, 1]: c[m] = 1/(m+1).
SeriesTail moment_series_t(std::size_t K);

/// Half-measure moments on [-1, 1]: c[m] = 1/(m+1) for even m, 0 for odd m.
/// This is the expansion of (1/2) ln((u+1)/(u-1)).
SeriesTail moment_series_u(std::size_t K);

/// Numerical copy of a rational series.
Series<HPScalar> to_hp(const SeriesTail& s, Digits d);

template <class F>
struct SplitResult {
    Polynomial<F> poly; ///< polynomial part of T * sigma
    Series<F> tail;     ///< first L coefficients of the remaining descending series
};

/// Splits T * sigma into polynomial part and L tail coefficients.
/// Requires sigma.size() >= deg(T) + L; throws TruncationError otherwise.
template <class F>
SplitResult<F> product_split(const Polynomial<F>& T, const Series<F>& sigma, std::size_t L) {
    const int d = T.degree();
    if (d < 0) {
        return {Polynomial<F>{}, Series<F>(std::vector<F>(L, F(0)))};
    }
    const auto deg = static_cast<std::size_t>(d);
    if (sigma.size() < deg + L) {
        throw TruncationError("product split needs " + std::to_string(deg + L) + " series coefficients, got " +
                              std::to_string(sigma.size()));
    }
    const auto& c = T.coeffs();
    // x^j for j >= 0 collects c[i] * s[i - j - 1], i = j+1..deg
    std::vector<F> poly(deg, F(0));
    for (std::size_t j = 0; j < deg; ++j) {
        F acc(0);
        for (std::size_t i = j + 1; i <= deg; ++i) {
            acc = acc + c[i] * sigma[i - j - 1];
        }
        poly[j] = acc;
    }
    // x^{-(l+1)} collects c[i] * s[i + l], i = 0..deg
    std::vector<F> tail(L, F(0));
    for (std::size_t l = 0; l < L; ++l) {
        F acc(0);
        for (std::size_t i = 0; i <= deg; ++i) {
            acc = acc + c[i] * sigma[i + l];
        }
        tail[l] = acc;
    }
    return {Polynomial<F>(std::move(poly)), Series<F>(std::move(tail))};
}

/// Long division of a descending series by a polynomial: returns the K leading
/// coefficients of tail / T. Needs tail.size() >= K - deg(T) (when K > deg T).
template <class F>
Series<F> series_divide(const Series<F>& tail, const Polynomial<F>& T, std::size_t K) {
    const int d = T.degree();
    if (d < 0) {
        throw ArithmeticError("series division by the zero polynomial");
    }
    const auto deg = static_cast<std::size_t>(d);
    const auto& c = T.coeffs();
    // tail / T = t^{-deg} * tail / (c[deg] + c[deg-1] t^{-1} + ...); the first deg
    // quotient coefficients vanish and k[l + deg] follows from tail[l].
    std::vector<F> k(K, F(0));
    for (std::size_t m = deg; m < K; ++m) {
        const std::size_t l = m - deg;
        F acc = tail[l];
        for (std::size_t i = 0; i < deg; ++i) {
            acc = acc - c[i] * k[i + l];
        }
        k[m] = acc / c[deg];
    }
    return Series<F>(std::move(k));
}

/// Rule moments sum_j w_j a_j^m for m = 0..K-1, i.e. the expansion of
/// sum_j w_j / (x - a_j) at infinity.
template <class F>
Series<F> cauchy_expansion(std::span<const F> nodes, std::span<const F> weights, std::size_t K) {
    if (nodes.size() != weights.size()) {
        throw DomainError("node and weight counts differ");
    }
    std::vector<F> out(K, F(0));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        F power = weights[j];
        for (std::size_t m = 0; m < K; ++m) {
            out[m] = out[m] + power;
            power = power * nodes[j];
        }
    }
    return Series<F>(std::move(out));
}

/// Expansion of num / den for polynomials with deg num < deg den, K coefficients.
template <class F>
Series<F> rational_function_expansion(const Polynomial<F>& num, const Polynomial<F>& den, std::size_t K) {
    const int d = den.degree();
    if (d < 1 || num.degree() >= d) {
        throw DomainError("expansion needs a proper rational function");
    }
    // num * x^{-d} written as descending series: num[d-1-l] at x^{-(l+1)} after shifting.
    // Equivalently num/den = (num x^{-d}) / (den x^{-d}); solve den * q = num coefficientwise.
    const auto deg = static_cast<std::size_t>(d);
    const auto& c = den.coeffs();
    std::vector<F> q(K, F(0));
    for (std::size_t m = 0; m < K; ++m) {
        // coefficient of x^{deg-1-m} in den * q equals num's coefficient there
        F acc = (m < deg) ? num.coeff(deg - 1 - m) : F(0);
        for (std::size_t i = 1; i <= deg && i <= m; ++i) {
            acc = acc - c[deg - i] * q[m - i];
        }
        q[m] = acc / c[deg];
    }
    return Series<F>(std::move(q));
}

} // namespace gaussquad
