#include "oracles.hpp"

#include <gaussquad/errors.hpp>
#include <gaussquad/gausscf.hpp>

#include <doctest.h>

using namespace gaussquad;
using oracle::within;

namespace {

// (1/2) integral over v in [-1,1] of (W(u) - W(v)) / (u - v)
RatPoly divided_difference_integral(const RatPoly& W) {
    const auto& c = W.coeffs();
    std::vector<Rational> out(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = 1; i < c.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t k = i - 1 - j;
            if (k % 2 == 0) {
                out[j] += c[i] * Rational(1L, static_cast<long>(k + 1));
            }
        }
    }
    return RatPoly(out);
}

bool has_parity(const RatPoly& p, int m) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if ((static_cast<int>(i) + m) % 2 != 0 && !p.coeffs()[i].is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("gausscf") {

TEST_CASE("continued fraction coefficients") {
    CHECK(cf_coefficient(1) == Rational(-1, 3));
    CHECK(cf_coefficient(2) == Rational(-4, 15));
    CHECK(cf_coefficient(3) == Rational(-9, 35));
    CHECK(cf_coefficient(4) == Rational(-16, 63));
    CHECK_THROWS_AS(cf_coefficient(0), DomainError);
}

TEST_CASE("low order convergents") {
    const auto p0 = legendre_pair(0);
    CHECK(p0.W == RatPoly::constant(1));
    CHECK(p0.V.is_zero());
    const auto p1 = legendre_pair(1);
    CHECK(p1.W == RatPoly{0, 1});
    CHECK(p1.V == RatPoly::constant(1));
    const auto p2 = legendre_pair(2);
    CHECK(p2.W == RatPoly{Rational(-1, 3), 0, 1});
    CHECK(p2.V == RatPoly{0, 1});
    const auto p3 = legendre_pair(3);
    CHECK(p3.W == RatPoly{0, Rational(-3, 5), 0, 1});
    CHECK(p3.V == RatPoly{Rational(-4, 15), 0, 1});
    CHECK_THROWS_AS(legendre_pair(-1), DomainError);
}

TEST_CASE("convergent invariants") {
    for (int m = 1; m <= 12; ++m) {
        const auto p = legendre_pair(m);
        CHECK(p.W.degree() == m);
        CHECK(p.W.leading() == Rational(1));
        CHECK(p.V.degree() == m - 1);
        CHECK(p.V.leading() == Rational(1));
        CHECK(has_parity(p.W, m));
        CHECK(has_parity(p.V, m - 1));
    }
}

TEST_CASE("numerator is the polynomial part of W times the moment series") {
    for (int m = 1; m <= 10; ++m) {
        const auto p = legendre_pair(m);
        CHECK(product_split(p.W, moment_series_u(static_cast<std::size_t>(m)), 0).poly == p.V);
        CHECK(divided_difference_integral(p.W) == p.V);
    }
}

TEST_CASE("denominators are orthogonal under the half measure") {
    for (int n = 1; n <= 8; ++n) {
        const RatPoly W = legendre_pair(n).W;
        for (int m = 0; m < n; ++m) {
            CHECK(poly_definite_integral_pm1(W * legendre_pair(m).W).is_zero());
        }
        CHECK_FALSE(poly_definite_integral_pm1(W * W).is_zero());
    }
}

TEST_CASE("convergent approximates the moment series to order 2m") {
    for (int m = 1; m <= 8; ++m) {
        const auto p = legendre_pair(m);
        const std::size_t K = 2 * static_cast<std::size_t>(m) + 2;
        const auto phi = moment_series_u(K);
        const auto approx = rational_function_expansion(p.V, p.W, K);
        for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(m); ++i) {
            CHECK(phi[i] == approx[i]);
        }
        // first difference sits at u^-(2m+1) and equals the leading error constant
        CHECK(phi[K - 2] - approx[K - 2] == leading_error_constant(m - 1).c);
    }
}

TEST_CASE("gauss rule with one node") {
    const QuadRule r = gauss_rule(0);
    CHECK(r.convention == Convention::U11);
    REQUIRE(r.size() == 1);
    CHECK(r.nodes[0].is_zero());
    CHECK(within(r.weights[0], HPScalar(1L), 48));
    CHECK(r.degree == 1);
    CHECK(*r.nodepoly == RatPoly{0, 1});
}

TEST_CASE("gauss rule with two and three nodes") {
    const HPScalar s3 = oracle::newton_sqrt(Rational(1, 3), Digits{50});
    const QuadRule r1 = gauss_rule(1);
    CHECK(within(r1.nodes[0], -s3, 48));
    CHECK(within(r1.nodes[1], s3, 48));
    CHECK(r1.nodes[1].to_sig_string(16) == "0.5773502691896258");
    CHECK(r1.degree == 3);

    const HPScalar s35 = oracle::newton_sqrt(Rational(3, 5), Digits{50});
    const QuadRule r2 = gauss_rule(2);
    CHECK(r2.nodes[1].is_zero());
    CHECK(within(r2.nodes[2], s35, 48));
    CHECK(within(r2.weights[0], HPScalar(Rational(5, 18)), 48));
    CHECK(within(r2.weights[1], HPScalar(Rational(4, 9)), 48));
}

TEST_CASE("gauss nodes and weights against the classical recurrence") {
    for (int n = 0; n <= 10; ++n) {
        const QuadRule r = gauss_rule(n);
        const auto ref = oracle::legendre_nodes_classical(n + 1, Digits{50});
        REQUIRE(r.size() == ref.nodes.size());
        for (std::size_t j = 0; j < r.size(); ++j) {
            CHECK(within(r.nodes[j], ref.nodes[j], 45));
            CHECK(within(r.weights[j], ref.weights[j], 45));
        }
    }
}

TEST_CASE("gauss rules are symmetric with positive weights summing to one") {
    for (int n = 0; n <= 12; ++n) {
        const QuadRule r = gauss_rule(n);
        HPScalar sum(0L);
        for (std::size_t j = 0; j < r.size(); ++j) {
            CHECK(r.weights[j].sign() > 0);
            CHECK(r.nodes[j] == -r.nodes[r.size() - 1 - j]);
            CHECK(within(r.weights[j], r.weights[r.size() - 1 - j], 46));
            sum += r.weights[j];
        }
        CHECK(within(sum, HPScalar(1L), 46));
    }
}

TEST_CASE("gauss rule index bounds") {
    CHECK_THROWS_AS(gauss_rule(-1), DomainError);
    CHECK_THROWS_AS(gauss_rule(kMaxGaussIndex + 1), DomainError);
}

TEST_CASE("gauss rule at higher precision") {
    const QuadRule r = gauss_rule(4, Digits{100});
    const auto ref = oracle::legendre_nodes_classical(5, Digits{100});
    for (std::size_t j = 0; j < r.size(); ++j) {
        CHECK(within(r.nodes[j], ref.nodes[j], 95));
        CHECK(within(r.weights[j], ref.weights[j], 95));
    }
}

TEST_CASE("weight polynomial") {
    CHECK(weight_polynomial(0) == RatPoly::constant(1));
    CHECK(weight_polynomial(1) == RatPoly::constant(Rational(1, 2)));
    CHECK(weight_polynomial(2) == RatPoly{Rational(4, 9), 0, Rational(-5, 18)});
    for (int n = 0; n <= 8; ++n) {
        const RatPoly rho = weight_polynomial(n);
        CHECK(rho.degree() <= n);
        const QuadRule r = gauss_rule(n);
        for (std::size_t j = 0; j < r.size(); ++j) {
            CHECK(within(poly_eval_hp(rho, r.nodes[j]), r.weights[j], 44));
        }
    }
}

TEST_CASE("leading error constants") {
    CHECK(leading_error_constant(0).c == Rational(1, 3));
    CHECK(leading_error_constant(0).k_first == Rational(1, 12));
    CHECK(leading_error_constant(1).c == Rational(4, 45));
    CHECK(leading_error_constant(1).k_first == Rational(1, 180));
    CHECK(leading_error_constant(2).k_first == Rational(1, 2800));
    for (int n = 0; n <= 6; ++n) {
        const auto e = error_coefficients(gauss_rule(n), 2 * static_cast<std::size_t>(n) + 3);
        REQUIRE(e.is_exact());
        for (std::size_t m = 0; m <= 2 * static_cast<std::size_t>(n) + 1; ++m) {
            CHECK((*e.exact)[m].is_zero());
        }
        CHECK((*e.exact)[2 * static_cast<std::size_t>(n) + 2] == leading_error_constant(n).k_first);
    }
}

} // TEST_SUITE
