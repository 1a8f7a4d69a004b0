#include <gaussquad/ratpoly.hpp>

#include <sstream>

namespace gaussquad {

HPScalar poly_eval_hp(const RatPoly& f, const HPScalar& x) {
    HPScalar acc = HPScalar(0L).with_bits(x.bits());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * x + HPScalar::from_rational(*it, x.bits());
    }
    return acc;
}

HPPoly to_hp(const RatPoly& f, Digits d) {
    std::vector<HPScalar> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        c.emplace_back(q, d);
    }
    return HPPoly(std::move(c));
}

RatPoly poly_mod_inverse_eval(const RatPoly& Z, const RatPoly& zeta, const RatPoly& zetap) {
    if (zetap.is_zero()) {
        throw ArithmeticError("modulus polynomial is zero");
    }
    if (zetap.degree() == 0) {
        // Q[x]/(c) is the zero ring.
        return {};
    }

    // Invariant: r_i == s_i * zeta (mod zetap), remainders kept monic.
    RatPoly r0 = zetap.monic();
    RatPoly s0;
    RatPoly r1 = poly_divrem(zeta, zetap).second;
    RatPoly s1 = RatPoly::constant(Rational(1));
    if (!r1.is_zero()) {
        const Rational lc = r1.leading();
        r1 = r1.monic();
        s1 = lc.reciprocal() * s1;
    }
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        RatPoly s = s0 - q * s1;
        if (!r.is_zero()) {
            const Rational lc = r.leading();
            r = r.monic();
            s = lc.reciprocal() * s;
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = std::move(s);
    }
    if (r0.degree() > 0) {
        throw SharedRootError("zeta and zetap share a root (gcd of degree " + std::to_string(r0.degree()) + ")");
    }
    // r0 == 1 == s0 * zeta (mod zetap)
    return poly_divrem(Z * s0, zetap).second;
}

std::string to_string(const RatPoly& f, char var) {
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit) {
            os << mag << " ";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

} // namespace gaussquad
