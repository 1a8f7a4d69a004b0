#pragma once

#include <gaussquad/numerics.hpp>
#include <gaussquad/ratpoly.hpp>

#include <vector>

namespace gaussquad {

struct RootSet {
    std::vector<HPScalar> roots; ///< strictly increasing, inside (-1, 1)
    HPScalar residual_bound;     ///< max |W(r)| / |W'(r)| over the roots
};

/// Real roots of a polynomial with definite parity whose roots are all real,
/// simple and inside (-1, 1) (the monic Legendre family).
///
/// W(u) = u^s Q(u^2) with s in {0, 1}. Roots of Q in (0, 1) are bracketed by
/// exact sign changes on a uniform grid that is doubled up to 2^10 panels,
/// then polished in u by safeguarded Newton steps on Q(u^2) (same nonzero
/// roots as W, and sign-definite at a bracket end sitting on u = 0) at the
/// requested precision plus guard digits until |du| <= 10^-(P-5). Positive
/// roots are mirrored, and 0 is appended for odd W.
///
/// Throws DomainError if W has no definite parity and RootIsolationError if
/// the grid cannot separate deg Q roots or polishing stalls.
RootSet real_roots_symmetric(const RatPoly& W, Digits precision = current_digits());

} // namespace gaussquad
