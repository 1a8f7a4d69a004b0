#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that the library does not use, so agreement is evidence rather than an echo:
//
//   legendre_nodes_classical    Newton on the classical Legendre recurrence
//                               (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
//   lagrange_weights            integrate each Lagrange basis polynomial
//   moment_system_weights       solve the Vandermonde moment system exactly
//   annihilation_node_poly      solve for the monic T whose product with the
//                               moment series has a tail starting past t^-(n+1)
//   newton_sqrt                 Newton on x^2 - a (no library sqrt)

#include <gaussquad/interprule.hpp>
#include <gaussquad/numerics.hpp>
#include <gaussquad/ratpoly.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using gaussquad::Convention;
using gaussquad::Digits;
using gaussquad::HPScalar;
using gaussquad::Polynomial;
using gaussquad::Rational;
using gaussquad::RatPoly;

inline HPScalar pow10_neg(int k, Digits d) {
    return HPScalar::parse("1e-" + std::to_string(k), d);
}

/// |a - b| <= 10^-k
inline bool within(const HPScalar& a, const HPScalar& b, int k) {
    return (a - b).abs() <= pow10_neg(k, Digits{k + 10});
}

/// Solves A x = b over Q by Gauss-Jordan elimination with nonzero pivoting.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::runtime_error("singular system");
        }
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = A[col][col].reciprocal();
        for (std::size_t j = col; j < n; ++j) {
            A[col][j] *= inv;
        }
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) {
                continue;
            }
            const Rational f = A[r][col];
            for (std::size_t j = col; j < n; ++j) {
                A[r][j] -= f * A[col][j];
            }
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline Rational measure_moment(Convention c, std::size_t m) {
    if (c == Convention::T01) {
        return Rational(1L, static_cast<long>(m + 1));
    }
    return m % 2 == 0 ? Rational(1L, static_cast<long>(m + 1)) : Rational(0);
}

/// sum_j w_j a_j^m = moment_m for m = 0..n.
inline std::vector<Rational> moment_system_weights(const std::vector<Rational>& nodes, Convention c) {
    const std::size_t n = nodes.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t j = 0; j < n; ++j) {
            A[m][j] = gaussquad::pow(nodes[j], static_cast<unsigned>(m));
        }
        b[m] = measure_moment(c, m);
    }
    return solve_exact(std::move(A), std::move(b));
}

/// Integral of l_j(x) = prod_{k != j} (x - a_k)/(a_j - a_k) over the convention's measure.
template <class F>
std::vector<F> lagrange_weights(const std::vector<F>& nodes, Convention c) {
    std::vector<F> out;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Polynomial<F> basis = Polynomial<F>::constant(F(1));
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (k == j) {
                continue;
            }
            const F denom = nodes[j] - nodes[k];
            basis = basis * Polynomial<F>{-nodes[k] / denom, F(1) / denom};
        }
        if (c == Convention::T01) {
            out.push_back(gaussquad::poly_definite_integral_01(basis));
        } else {
            out.push_back(gaussquad::poly_definite_integral_pm1(basis) / F(2));
        }
    }
    return out;
}

/// Monic degree n+1 polynomial in t whose product with sum t^-(m+1)/(m+1)
/// has vanishing coefficients at t^-1 .. t^-(n+1).
inline RatPoly annihilation_node_poly(int n) {
    const auto deg = static_cast<std::size_t>(n + 1);
    // tail_l = sum_{i=0}^{deg} c_i / (i + l + 1) = 0, c_deg = 1, l = 0..n
    std::vector<std::vector<Rational>> A(deg, std::vector<Rational>(deg));
    std::vector<Rational> b(deg);
    for (std::size_t l = 0; l < deg; ++l) {
        for (std::size_t i = 0; i < deg; ++i) {
            A[l][i] = Rational(1L, static_cast<long>(i + l + 1));
        }
        b[l] = -Rational(1L, static_cast<long>(deg + l + 1));
    }
    std::vector<Rational> alpha = solve_exact(std::move(A), std::move(b));
    alpha.emplace_back(1);
    return RatPoly(std::move(alpha));
}

inline HPScalar newton_sqrt(const Rational& a, Digits d) {
    const gaussquad::ScopedPrecision scope(Digits{d.value + 10});
    const HPScalar target(a);
    HPScalar x(std::sqrt(a.to_double()));
    const HPScalar half = HPScalar(Rational(1, 2));
    for (int i = 0; i < 20; ++i) {
        x = half * (x + target / x);
    }
    return x.with_digits(d);
}

struct ClassicalRule {
    std::vector<HPScalar> nodes;   ///< ascending in [-1, 1]
    std::vector<HPScalar> weights; ///< half measure: 1 / ((1 - x^2) P'(x)^2)
};

/// Gauss-Legendre nodes with `count` points by Newton on P_count, evaluated with
/// the classical three-term recurrence; initial guesses cos(pi (i + 3/4)/(count + 1/2)).
inline ClassicalRule legendre_nodes_classical(int count, Digits d) {
    const gaussquad::ScopedPrecision scope(Digits{d.value + 15});
    const HPScalar tol = pow10_neg(d.value + 8, Digits{d.value + 15});
    auto eval = [count](const HPScalar& x) {
        HPScalar p0(1L);
        HPScalar p1 = x;
        if (count == 0) {
            return std::pair{p0, HPScalar(0L)};
        }
        for (int k = 1; k < count; ++k) {
            HPScalar p2 = (HPScalar(2L * k + 1) * x * p1 - HPScalar(static_cast<long>(k)) * p0) / HPScalar(k + 1L);
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
        HPScalar dp = HPScalar(static_cast<long>(count)) * (x * p1 - p0) / (x * x - HPScalar(1L));
        return std::pair{p1, dp};
    };
    ClassicalRule out;
    for (int i = 0; i < count; ++i) {
        HPScalar x(std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5)));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = eval(x);
            HPScalar dx = p / dp;
            x -= dx;
            if (dx.abs() < tol) {
                break;
            }
        }
        auto [p, dp] = eval(x);
        out.nodes.push_back(x.with_digits(d));
        out.weights.push_back((HPScalar(1L) / ((HPScalar(1L) - x * x) * dp * dp)).with_digits(d));
    }
    // cos guesses run from +1 down to -1
    std::reverse(out.nodes.begin(), out.nodes.end());
    std::reverse(out.weights.begin(), out.weights.end());
    return out;
}

/// Random rational in [lo, hi] with denominator up to max_den.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
    return Rational(num_dist(rng), den);
}

/// `count` distinct random rationals in [0, 1].
inline std::vector<Rational> random_nodes01(std::mt19937_64& rng, std::size_t count) {
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational r = random_rational(rng, 0, 1, 24);
        if (std::find(out.begin(), out.end(), r) == out.end()) {
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
