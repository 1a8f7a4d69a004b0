#include "oracles.hpp"

#include <gaussquad/errors.hpp>
#include <gaussquad/numerics.hpp>

#include <doctest.h>
#include <mpfr.h>

#include <random>
#include <thread>

using namespace gaussquad;
using oracle::within;

namespace {

// mpmath, 60 digits
const char* const kLn1e5 = "11.5129254649702284200899572734218210380055074431438648801666";
const char* const kNineMinusLog10Two = "8.69897000433601880478626110527550697323181011853789145868957";

HPScalar mpfr_reference_log(const HPScalar& x) {
    HPScalar out = x;
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

} // namespace

TEST_SUITE("numerics") {

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(4, 15) == Rational(4, 45));
    CHECK(Rational(2, 4).numerator() == "1");
    CHECK(Rational(2, 4).denominator() == "2");
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).reciprocal() == Rational(-4, 3));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(5, 7), 0) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational division by zero raises") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), ArithmeticError);
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), ArithmeticError);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("12.375") == Rational(99, 8));
    CHECK(Rational::parse("1e5") == Rational(100000));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("2.5e-1") == Rational(1, 4));
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(1815);
    for (int i = 0; i < 300; ++i) {
        const Rational a = oracle::random_rational(rng, -50, 50, 97);
        const Rational b = oracle::random_rational(rng, -50, 50, 97);
        const Rational c = oracle::random_rational(rng, -50, 50, 97);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.reciprocal() == Rational(1));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("precision control") {
    CHECK(current_digits().value == kDefaultDigits);
    CHECK_THROWS_AS(set_default_digits(Digits{30}), DomainError);
    {
        const ScopedPrecision scope(Digits{120});
        CHECK(current_digits().value == 120);
        CHECK(HPScalar(1L).bits() == bits_for(Digits{120}));
    }
    CHECK(current_digits().value == kDefaultDigits);
    CHECK(bits_for(Digits{50}) >= 166);
}

TEST_CASE("mixed precision uses the larger operand") {
    const HPScalar a(Rational(1, 3), Digits{40});
    const HPScalar b(Rational(1, 7), Digits{90});
    CHECK((a + b).bits() == b.bits());
    CHECK((b * a).bits() == b.bits());
}

TEST_CASE("rational to HP conversion") {
    const HPScalar third(Rational(1, 3));
    CHECK(within(third * HPScalar(3L), HPScalar(1L), 48));
    CHECK(HPScalar(Rational(1, 8)).to_double() == 0.125);
}

TEST_CASE("HP division by zero raises") {
    CHECK_THROWS_AS(HPScalar(1L) / HPScalar(0L), ArithmeticError);
}

TEST_CASE("HP parse") {
    CHECK(HPScalar::parse("0.125").to_double() == 0.125);
    CHECK(HPScalar::parse("-2.5e3").to_double() == -2500.0);
    CHECK_THROWS_AS(HPScalar::parse("1.5x"), Error);
    CHECK_THROWS_AS(HPScalar::parse(""), Error);
    CHECK_THROWS_AS(HPScalar::parse("nan"), Error);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(HPScalar::parse("0.125").to_sig_string(2) == "0.12");
    CHECK(HPScalar::parse("0.375").to_sig_string(2) == "0.38");
    CHECK(HPScalar::parse("2.5").to_fixed_string(0) == "2");
    CHECK(HPScalar::parse("3.5").to_fixed_string(0) == "4");
    CHECK(HPScalar::parse("-1.25").to_fixed_string(1) == "-1.2");
    CHECK(HPScalar(0L).to_fixed_string(3) == "0.000");
    CHECK(HPScalar::parse("9.9996").to_sig_string(3) == "10.0");
    CHECK(HPScalar::parse("8406.24312084").to_fixed_string(5) == "8406.24312");
    CHECK(HPScalar(Rational(1, 3)).to_sig_string(16) == "0.3333333333333333");
}

TEST_CASE("natural log matches reference values") {
    CHECK(hp_ln(HPScalar(1L)).is_zero());
    const HPScalar x(100000L);
    CHECK(within(hp_ln(x), HPScalar::parse(kLn1e5, Digits{60}), 47));
    CHECK(within(hp_ln(x), mpfr_reference_log(x), 47));
    CHECK_THROWS_AS(hp_ln(HPScalar(0L)), DomainError);
    CHECK_THROWS_AS(hp_ln(HPScalar(-1L)), DomainError);
}

TEST_CASE("natural log at higher precision") {
    const ScopedPrecision scope(Digits{100});
    for (const char* s : {"2", "0.001", "123456.789", "1e40", "1.0000001"}) {
        const HPScalar x = HPScalar::parse(s);
        const HPScalar ref = mpfr_reference_log(x);
        CHECK_MESSAGE((hp_ln(x) - ref).abs() <= oracle::pow10_neg(95, Digits{110}) * (ref.abs() + HPScalar(1L)), s);
    }
}

TEST_CASE("log is additive on random arguments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(1.0, 1e6);
    const HPScalar tol = oracle::pow10_neg(44, Digits{60});
    for (int i = 0; i < 100; ++i) {
        const HPScalar x(dist(rng));
        const HPScalar y(dist(rng));
        const HPScalar lhs = hp_ln(x * y);
        const HPScalar rhs = hp_ln(x) + hp_ln(y);
        CHECK((lhs - rhs).abs() <= tol * lhs.abs());
    }
}

TEST_CASE("scaled decimal log") {
    CHECK(within(hp_log10_scaled(HPScalar(1L)), HPScalar(9L), 48));
    CHECK(within(hp_log10_scaled(HPScalar(Rational(1, 2))), HPScalar::parse(kNineMinusLog10Two, Digits{60}), 47));
    CHECK(hp_log10_scaled(HPScalar::parse("1e-9")).abs() < oracle::pow10_neg(40, Digits{50}));
    CHECK(hp_log10_scaled(HPScalar(Rational(1, 2))).to_sig_string(10) == "8.698970004");
    CHECK_THROWS_AS(hp_log10_scaled(HPScalar(0L)), DomainError);
    CHECK_THROWS_AS(hp_log10_scaled(HPScalar(-2L)), DomainError);
}

TEST_CASE("log is safe to call from several threads") {
    const HPScalar expected = hp_ln(HPScalar(100000L));
    std::vector<int> ok(4, 0);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < ok.size(); ++t) {
        pool.emplace_back([&ok, t, &expected] {
            int good = 1;
            for (int i = 0; i < 50; ++i) {
                good &= hp_ln(HPScalar(100000L)) == expected ? 1 : 0;
            }
            ok[t] = good;
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (int v : ok) {
        CHECK(v == 1);
    }
}

TEST_CASE("sqrt and ldexp") {
    CHECK(within(sqrt(HPScalar(Rational(1, 3))), oracle::newton_sqrt(Rational(1, 3), Digits{50}), 48));
    CHECK(ldexp(HPScalar(3L), -2).to_double() == 0.75);
    CHECK_THROWS_AS(sqrt(HPScalar(-1L)), DomainError);
}

} // TEST_SUITE
