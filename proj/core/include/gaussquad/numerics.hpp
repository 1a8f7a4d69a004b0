#pragma once

// Exact rationals and configurable-precision floating scalars.
//
// Rational wraps GMP's mpq_class and keeps it canonical (den > 0, reduced).
// HPScalar wraps an MPFR value; every value carries its own precision and the
// result of a binary operation takes the larger precision of its operands.
// New values are created at the calling thread's current precision, which
// defaults to 50 significant decimal digits and can be changed with
// ScopedPrecision or set_default_digits().

#include <gaussquad/errors.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gaussquad {

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : v_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)

    Rational(long num, long den);

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "p", "p/q", or a plain decimal such as "-12.375" or "1e5".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return v_; }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

    Rational abs() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Significant decimal digits.
struct Digits {
    int value = 50;
};

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinimumDigits = 40;

/// Current precision of the calling thread.
Digits current_digits() noexcept;

/// Sets the process-wide default (picked up by threads that have not overridden it)
/// and the calling thread's current precision. Throws DomainError below kMinimumDigits.
void set_default_digits(Digits d);

/// Binary precision used for a given decimal precision.
mpfr_prec_t bits_for(Digits d) noexcept;

/// RAII override of the calling thread's precision. Unlike set_default_digits it
/// accepts any positive precision; the internal guard-digit logic relies on that.
class ScopedPrecision {
public:
    explicit ScopedPrecision(Digits d);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    int saved_;
};

class HPScalar {
public:
    HPScalar();
    HPScalar(long value); // NOLINT(google-explicit-constructor)
    HPScalar(int value) : HPScalar(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    explicit HPScalar(const Rational& q);
    HPScalar(const Rational& q, Digits d);
    explicit HPScalar(double value);

    /// Correctly rounded conversion at an explicit binary precision.
    static HPScalar from_rational(const Rational& q, mpfr_prec_t bits);

    /// Parses a decimal literal at the current precision; throws DomainError on malformed text.
    static HPScalar parse(std::string_view text);
    static HPScalar parse(std::string_view text, Digits d);

    HPScalar(const HPScalar& o);
    HPScalar(HPScalar&& o) noexcept;
    HPScalar& operator=(const HPScalar& o);
    HPScalar& operator=(HPScalar&& o) noexcept;
    ~HPScalar();

    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }

    /// Copy rounded to the given precision.
    HPScalar with_bits(mpfr_prec_t bits) const;
    HPScalar with_digits(Digits d) const { return with_bits(bits_for(d)); }

    int sign() const noexcept { return mpfr_sgn(v_); }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Binary exponent e with |x| = m * 2^e, m in [0.5, 1). Undefined for zero.
    long exponent() const noexcept { return mpfr_get_exp(v_); }

    HPScalar abs() const;

    /// Round-half-even rendering with `sig` significant digits, fixed notation.
    std::string to_sig_string(int sig) const;
    /// Round-half-even rendering with `decimals` digits after the point.
    std::string to_fixed_string(int decimals) const;

    HPScalar& operator+=(const HPScalar& o);
    HPScalar& operator-=(const HPScalar& o);
    HPScalar& operator*=(const HPScalar& o);
    HPScalar& operator/=(const HPScalar& o);

    friend HPScalar operator+(const HPScalar& a, const HPScalar& b);
    friend HPScalar operator-(const HPScalar& a, const HPScalar& b);
    friend HPScalar operator*(const HPScalar& a, const HPScalar& b);
    friend HPScalar operator/(const HPScalar& a, const HPScalar& b);
    HPScalar operator-() const;

    friend bool operator==(const HPScalar& a, const HPScalar& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPScalar& a, const HPScalar& b);

private:
    explicit HPScalar(mpfr_prec_t bits, int /*tag*/);
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const HPScalar& x);

/// x * 2^k, exact.
HPScalar ldexp(const HPScalar& x, long k);

/// Correctly rounded square root. Not needed by the quadrature pipeline itself;
/// root isolation and closed-form test values use it.
HPScalar sqrt(const HPScalar& x);

/// Natural logarithm by reduction to [1, 2) and the series ln m = 2 atanh((m-1)/(m+1)).
/// Throws DomainError for x <= 0.
HPScalar hp_ln(const HPScalar& x);

/// log10(1e9 * w) = 9 + ln(w)/ln(10). Throws DomainError for w <= 0.
HPScalar hp_log10_scaled(const HPScalar& w);

} // namespace gaussquad
