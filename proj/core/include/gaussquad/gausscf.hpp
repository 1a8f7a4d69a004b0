#pragma once

// Gaussian rules from the continued fraction of the half-measure moment series
//
//     phi(u) = u^-1 + (1/3) u^-3 + (1/5) u^-5 + ... = 1/(u - (1/3)/(u - (4/15)/(u - ...)))
//
// The convergents V^(m)/W^(m) obey X^(k+1) = u X^(k) + v^(k) X^(k-1) with
// v^(k) = -k^2/((2k-1)(2k+1)); W^(m) is the monic Legendre polynomial of
// degree m. Taking the roots of W^(n+1) as nodes and V^(n+1)/W^(n+1)' at the
// nodes as weights gives the (n+1)-point rule of degree 2n+1.

#include <gaussquad/interprule.hpp>
#include <gaussquad/ratpoly.hpp>

namespace gaussquad {

/// Largest rule index supported by default (13 nodes).
inline constexpr int kMaxGaussIndex = 12;

/// v^(m) = -m^2 / ((2m-1)(2m+1)) for m >= 1. v^(0) = 1 is the leading numerator.
Rational cf_coefficient(int m);

struct LegendrePair {
    int m = 0;
    RatPoly W; ///< monic, degree m
    RatPoly V; ///< degree m-1 (zero for m = 0)
};

/// Convergent numerator/denominator of order m via the three-term recurrence.
LegendrePair legendre_pair(int m);

/// (n+1)-point rule in the U11 convention; nodepoly is W^(n+1). Use
/// QuadRule::to_t01() for the [0, 1] form. Throws DomainError for n outside
/// [0, kMaxGaussIndex] and RootIsolationError if root extraction fails.
QuadRule gauss_rule(int n, Digits precision = current_digits());

/// Rational polynomial rho, deg rho <= n, with rho(b_j) = R_j at every node of
/// gauss_rule(n): the inverse of W' modulo W, times V.
RatPoly weight_polynomial(int n);

struct LeadingError {
    Rational c;       ///< coefficient of u^-(2n+3) in phi - V/W (u variable)
    Rational k_first; ///< first nonzero t-variable error coefficient k^(2n+2) = c / 4^(n+1)
};

/// c = prod_{k=1..n+1} k^2 / ((2k-1)(2k+1)).
LeadingError leading_error_constant(int n);

} // namespace gaussquad
