#include <gaussquad/numerics.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <memory>
#include <ostream>

namespace gaussquad {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) {
        throw DomainError("empty rational literal");
    }
    auto bad = [&]() { return DomainError("malformed rational literal '" + std::string(text) + "'"); };

    auto parse_int = [&](const std::string& digits) {
        mpz_class z;
        if (digits.empty() || z.set_str(digits, 10) != 0) {
            throw bad();
        }
        return z;
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class num = parse_int(s.substr(0, slash));
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) {
            throw ArithmeticError("rational with zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }

    // Decimal literal: [sign] digits [. digits] [e [sign] digits]
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string mantissa;
    long scale = 0;
    bool seen_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        mantissa += s[pos++];
        seen_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mantissa += s[pos++];
            --scale;
            seen_digit = true;
        }
    }
    if (!seen_digit) {
        throw bad();
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        std::string exp_text = s.substr(pos);
        if (exp_text.empty()) {
            throw bad();
        }
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != exp_text.size() || std::labs(e) > 100000) {
            throw bad();
        }
        scale += e;
        pos = s.size();
    }
    if (pos != s.size()) {
        throw bad();
    }
    mpz_class num = parse_int(mantissa);
    if (negative) {
        num = -num;
    }
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    mpq_class q = scale >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator();
    }
    return numerator() + "/" + denominator();
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw ArithmeticError("reciprocal of zero");
    }
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

// ---------------------------------------------------------------- precision

namespace {

std::atomic<int> g_default_digits{kDefaultDigits};

int& thread_digits() {
    thread_local int digits = g_default_digits.load(std::memory_order_relaxed);
    return digits;
}

} // namespace

Digits current_digits() noexcept {
    return Digits{thread_digits()};
}

void set_default_digits(Digits d) {
    if (d.value < kMinimumDigits) {
        throw DomainError("precision must be at least " + std::to_string(kMinimumDigits) + " digits");
    }
    g_default_digits.store(d.value, std::memory_order_relaxed);
    thread_digits() = d.value;
}

mpfr_prec_t bits_for(Digits d) noexcept {
    constexpr double kLog2Of10 = 3.3219280948873623;
    return static_cast<mpfr_prec_t>(std::ceil(std::max(d.value, 1) * kLog2Of10)) + 8;
}

ScopedPrecision::ScopedPrecision(Digits d) : saved_(thread_digits()) {
    if (d.value < 1) {
        throw DomainError("precision must be positive");
    }
    thread_digits() = d.value;
}

ScopedPrecision::~ScopedPrecision() {
    thread_digits() = saved_;
}

// ---------------------------------------------------------------- HPScalar

HPScalar::HPScalar(mpfr_prec_t bits, int /*tag*/) {
    mpfr_init2(v_, bits);
}

HPScalar::HPScalar() : HPScalar(bits_for(current_digits()), 0) {
    mpfr_set_zero(v_, 1);
}

HPScalar::HPScalar(long value) : HPScalar(bits_for(current_digits()), 0) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

HPScalar::HPScalar(const Rational& q) : HPScalar(q, current_digits()) {}

HPScalar::HPScalar(const Rational& q, Digits d) : HPScalar(bits_for(d), 0) {
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

HPScalar HPScalar::from_rational(const Rational& q, mpfr_prec_t bits) {
    HPScalar r(bits, 0);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

HPScalar::HPScalar(double value) : HPScalar(bits_for(current_digits()), 0) {
    mpfr_set_d(v_, value, MPFR_RNDN);
}

HPScalar HPScalar::parse(std::string_view text) {
    return parse(text, current_digits());
}

HPScalar HPScalar::parse(std::string_view text, Digits d) {
    HPScalar r(bits_for(d), 0);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) {
        mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    }
    if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(r.v_)) {
        throw DomainError("malformed decimal literal '" + s + "'");
    }
    return r;
}

HPScalar::HPScalar(const HPScalar& o) : HPScalar(o.bits(), 0) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPScalar::HPScalar(HPScalar&& o) noexcept : HPScalar(o.bits(), 0) {
    mpfr_swap(v_, o.v_);
}

HPScalar& HPScalar::operator=(const HPScalar& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPScalar& HPScalar::operator=(HPScalar&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

HPScalar::~HPScalar() {
    mpfr_clear(v_);
}

HPScalar HPScalar::with_bits(mpfr_prec_t bits) const {
    HPScalar r(bits, 0);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

HPScalar HPScalar::abs() const {
    HPScalar r(bits(), 0);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

struct MpfrString {
    explicit MpfrString(char* ptr) : p(ptr) {}
    MpfrString(const MpfrString&) = delete;
    MpfrString& operator=(const MpfrString&) = delete;
    ~MpfrString() { mpfr_free_str(p); }
    char* p;
};

// Digits string and decimal exponent such that value = 0.DIGITS * 10^exp.
std::pair<std::string, mpfr_exp_t> decimal_digits(mpfr_srcptr x, std::size_t n) {
    mpfr_exp_t exp = 0;
    MpfrString s{mpfr_get_str(nullptr, &exp, 10, n, x, MPFR_RNDN)};
    std::string digits(s.p);
    if (!digits.empty() && digits[0] == '-') {
        digits.erase(0, 1);
    }
    return {digits, exp};
}

std::string place_point(const std::string& digits, mpfr_exp_t exp) {
    // value = 0.digits * 10^exp
    if (exp <= 0) {
        return "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    }
    auto e = static_cast<std::size_t>(exp);
    if (e >= digits.size()) {
        return digits + std::string(e - digits.size(), '0');
    }
    return digits.substr(0, e) + "." + digits.substr(e);
}

} // namespace

std::string HPScalar::to_sig_string(int sig) const {
    if (sig < 1) {
        throw DomainError("significant digit count must be positive");
    }
    if (is_zero()) {
        return sig == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(sig - 1), '0');
    }
    auto [digits, exp] = decimal_digits(v_, static_cast<std::size_t>(sig));
    std::string body = place_point(digits, exp);
    return sign() < 0 ? "-" + body : body;
}

std::string HPScalar::to_fixed_string(int decimals) const {
    if (decimals < 0) {
        throw DomainError("decimal count must be non-negative");
    }
    // x * 10^decimals is exact at this precision; rint then rounds half to even.
    const auto extra = static_cast<mpfr_prec_t>(std::ceil(decimals * 2.33)) + 8;
    mpfr_t scaled;
    mpfr_init2(scaled, bits() + extra);
    mpfr_set(scaled, v_, MPFR_RNDN);
    mpfr_t p10;
    mpfr_init2(p10, extra);
    mpfr_ui_pow_ui(p10, 10, static_cast<unsigned long>(decimals), MPFR_RNDN);
    mpfr_mul(scaled, scaled, p10, MPFR_RNDN);
    mpfr_rint(scaled, scaled, MPFR_RNDN);
    mpz_class integer;
    mpfr_get_z(integer.get_mpz_t(), scaled, MPFR_RNDN);
    mpfr_clear(p10);
    mpfr_clear(scaled);

    const bool negative = integer < 0;
    std::string digits = mpz_class(::abs(integer)).get_str();
    const auto d = static_cast<std::size_t>(decimals);
    if (digits.size() <= d) {
        digits.insert(0, d + 1 - digits.size(), '0');
    }
    std::string body = d == 0 ? digits : digits.substr(0, digits.size() - d) + "." + digits.substr(digits.size() - d);
    return negative ? "-" + body : body;
}

HPScalar& HPScalar::operator+=(const HPScalar& o) {
    return *this = *this + o;
}

HPScalar& HPScalar::operator-=(const HPScalar& o) {
    return *this = *this - o;
}

HPScalar& HPScalar::operator*=(const HPScalar& o) {
    return *this = *this * o;
}

HPScalar& HPScalar::operator/=(const HPScalar& o) {
    return *this = *this / o;
}

HPScalar operator+(const HPScalar& a, const HPScalar& b) {
    HPScalar r(std::max(a.bits(), b.bits()), 0);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPScalar operator-(const HPScalar& a, const HPScalar& b) {
    HPScalar r(std::max(a.bits(), b.bits()), 0);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPScalar operator*(const HPScalar& a, const HPScalar& b) {
    HPScalar r(std::max(a.bits(), b.bits()), 0);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPScalar operator/(const HPScalar& a, const HPScalar& b) {
    if (b.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    HPScalar r(std::max(a.bits(), b.bits()), 0);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPScalar HPScalar::operator-() const {
    HPScalar r(bits(), 0);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const HPScalar& a, const HPScalar& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const HPScalar& x) {
    return os << x.to_sig_string(std::max(1, static_cast<int>(std::min<std::streamsize>(os.precision(), 1000))));
}

HPScalar ldexp(const HPScalar& x, long k) {
    HPScalar r = x;
    mpfr_mul_2si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

HPScalar sqrt(const HPScalar& x) {
    if (x.sign() < 0) {
        throw DomainError("square root of a negative value");
    }
    HPScalar r = x;
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- logarithms

namespace {

// 2 * atanh(z) = 2 (z + z^3/3 + z^5/5 + ...), for |z| <= 1/3, evaluated at the
// precision of z. Stops once a term no longer moves the sum.
HPScalar two_atanh(const HPScalar& z) {
    if (z.is_zero()) {
        return z;
    }
    const HPScalar z2 = z * z;
    HPScalar power = z;
    HPScalar sum = z;
    const long stop_exponent = sum.exponent() - static_cast<long>(z.bits()) - 2;
    for (long k = 3;; k += 2) {
        power *= z2;
        HPScalar term = power / HPScalar(k).with_bits(z.bits());
        if (term.is_zero() || term.exponent() < stop_exponent) {
            break;
        }
        sum += term;
    }
    return ldexp(sum, 1);
}

} // namespace

HPScalar hp_ln(const HPScalar& x) {
    if (x.sign() <= 0) {
        throw DomainError("logarithm of a non-positive value");
    }
    const mpfr_prec_t out_bits = x.bits();
    const mpfr_prec_t work = out_bits + 32;

    // x = m * 2^k with m in [1, 2)
    const long k = x.exponent() - 1;
    HPScalar m = ldexp(x.with_bits(work), -k);

    const HPScalar one = HPScalar(1L).with_bits(work);
    HPScalar result = two_atanh((m - one) / (m + one));
    if (k != 0) {
        // ln 2 = 2 atanh(1/3)
        const HPScalar ln2 = two_atanh(one / HPScalar(3L).with_bits(work));
        result += ln2 * HPScalar(k).with_bits(work);
    }
    return result.with_bits(out_bits);
}

HPScalar hp_log10_scaled(const HPScalar& w) {
    if (w.sign() <= 0) {
        throw DomainError("logarithm of a non-positive value");
    }
    const mpfr_prec_t out_bits = w.bits();
    const mpfr_prec_t work = out_bits + 16;
    HPScalar ln_w = hp_ln(w.with_bits(work));
    HPScalar ln_10 = hp_ln(HPScalar(10L).with_bits(work));
    return (HPScalar(9L).with_bits(work) + ln_w / ln_10).with_bits(out_bits);
}

} // namespace gaussquad
