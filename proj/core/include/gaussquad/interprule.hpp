#pragma once

// Interpolatory quadrature rules.
//
// A rule with nodes a_0 < ... < a_n has node polynomial T = prod (x - a_j).
// Splitting T * sigma (sigma = moment series of the measure) gives the
// polynomial part Tprime, and the weights are the residues
//
//     R_j = Tprime(a_j) / T'(a_j).
//
// Two measure conventions are supported: T01 (dt on [0, 1]) and U11 (the half
// measure du/2 on [-1, 1]); both have unit mass and are related by t = (u+1)/2.

#include <gaussquad/momseries.hpp>
#include <gaussquad/numerics.hpp>
#include <gaussquad/ratpoly.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gaussquad {

enum class Convention {
    T01, ///< t on [0, 1], measure dt
    U11, ///< u on [-1, 1], measure du/2
};

std::string_view to_string(Convention c);

/// Moment series of the convention's measure.
SeriesTail moment_series(Convention c, std::size_t K);

struct QuadRule {
    Convention convention = Convention::T01;
    std::vector<HPScalar> nodes; ///< strictly increasing
    std::vector<HPScalar> weights;
    std::optional<std::vector<Rational>> exact_nodes;
    std::optional<std::vector<Rational>> exact_weights;
    std::optional<RatPoly> nodepoly; ///< monic, roots are the nodes
    int degree = 0;                  ///< claimed degree of precision
    bool outside_interval = false;   ///< some node lies outside the convention's interval

    std::size_t size() const noexcept { return nodes.size(); }
    bool is_exact() const noexcept { return exact_nodes.has_value() && exact_weights.has_value(); }

    /// Same rule expressed on [0, 1]: a_j = (b_j + 1)/2, weights unchanged.
    QuadRule to_t01() const;
};

/// Interpolatory rule on exact nodes; weights are exact and also stored at precision d.
/// Throws DuplicateNodeError for repeated nodes and DomainError for an empty node set.
QuadRule interpolatory_rule(std::span<const Rational> nodes, Convention convention,
                            Digits d = current_digits());

/// Interpolatory rule on numerical nodes (same construction in floating arithmetic).
QuadRule interpolatory_rule(std::span<const HPScalar> nodes, Convention convention);

/// Closed Newton-Cotes rule with nodes i/n, i = 0..n, on [0, 1]. Requires n >= 1.
QuadRule newton_cotes(int n, Digits d = current_digits());

/// Rule moments sum_j R_j a_j^m, m = 0..K-1, in the rule's own variable.
struct RuleExpansion {
    std::optional<SeriesTail> exact;
    Series<HPScalar> values;
};

RuleExpansion cauchy_expansion_of_rule(const QuadRule& rule, std::size_t K);

/// Error coefficients k[m] = integral of t^m over [0, 1] minus the rule applied
/// to t^m, always in the t variable (U11 rules are mapped first).
struct ErrorSeries {
    std::optional<std::vector<Rational>> exact;
    std::vector<HPScalar> values;

    std::size_t size() const noexcept { return values.size(); }
    bool is_exact() const noexcept { return exact.has_value(); }
};

/// Computes k[0..K-1] twice: directly from the moment deficits and by dividing
/// the product-split tail by the node polynomial. Returns the common value and
/// throws ConsistencyError if the two disagree (exactly for exact data,
/// beyond 10^-(P-8) otherwise).
ErrorSeries error_coefficients(const QuadRule& rule, std::size_t K);

using Integrand = std::function<HPScalar(const HPScalar&)>;

/// Delta * sum_j R_j f(x_j) with x_j = g + Delta a_j (T01) or g + Delta (b_j + 1)/2 (U11).
/// Exceptions thrown by f are rethrown as IntegrandError carrying the node index.
HPScalar apply_rule(const QuadRule& rule, const Integrand& f, const HPScalar& g, const HPScalar& delta);

/// Decimal precision represented by a value's binary precision.
Digits digits_of(const HPScalar& x) noexcept;

} // namespace gaussquad
