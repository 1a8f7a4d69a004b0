#include <gaussquad/gausscf.hpp>

#include <gaussquad/rootfind.hpp>

namespace gaussquad {

Rational cf_coefficient(int m) {
    if (m < 1) {
        throw DomainError("continued-fraction coefficient index must be >= 1");
    }
    const long k = m;
    return Rational(-k * k, (2 * k - 1) * (2 * k + 1));
}

LegendrePair legendre_pair(int m) {
    if (m < 0) {
        throw DomainError("convergent order must be non-negative");
    }
    const RatPoly u = RatPoly::identity();
    RatPoly v_prev;                               // V
    RatPoly w_prev = RatPoly::constant(1);        // W
    if (m == 0) {
        return {0, w_prev, v_prev};
    }
    RatPoly v_cur = RatPoly::constant(1);         // V' = v
    RatPoly w_cur = u;                            // W' = w W
    for (int k = 1; k < m; ++k) {
        const Rational vk = cf_coefficient(k);
        RatPoly v_next = u * v_cur + vk * v_prev;
        RatPoly w_next = u * w_cur + vk * w_prev;
        v_prev = std::move(v_cur);
        w_prev = std::move(w_cur);
        v_cur = std::move(v_next);
        w_cur = std::move(w_next);
    }
    return {m, w_cur, v_cur};
}

QuadRule gauss_rule(int n, Digits precision) {
    if (n < 0 || n > kMaxGaussIndex) {
        throw DomainError("Gauss rule index must lie in [0, " + std::to_string(kMaxGaussIndex) + "]");
    }
    const LegendrePair pair = legendre_pair(n + 1);
    const RatPoly dW = pair.W.derivative();
    RootSet roots = real_roots_symmetric(pair.W, precision);

    const mpfr_prec_t out_bits = bits_for(precision);
    const mpfr_prec_t work = bits_for(Digits{precision.value + 10});
    QuadRule rule;
    rule.convention = Convention::U11;
    rule.degree = 2 * n + 1;
    rule.nodepoly = pair.W;
    rule.weights.reserve(roots.roots.size());
    for (const auto& b : roots.roots) {
        const HPScalar bw = b.with_bits(work);
        rule.weights.push_back((poly_eval_hp(pair.V, bw) / poly_eval_hp(dW, bw)).with_bits(out_bits));
    }
    rule.nodes = std::move(roots.roots);
    return rule;
}

RatPoly weight_polynomial(int n) {
    if (n < 0) {
        throw DomainError("Gauss rule index must be non-negative");
    }
    const LegendrePair pair = legendre_pair(n + 1);
    return poly_mod_inverse_eval(pair.V, pair.W.derivative(), pair.W);
}

LeadingError leading_error_constant(int n) {
    if (n < 0) {
        throw DomainError("Gauss rule index must be non-negative");
    }
    Rational c(1);
    for (int k = 1; k <= n + 1; ++k) {
        c *= -cf_coefficient(k);
    }
    const Rational k_first = c / pow(Rational(4), static_cast<unsigned>(n + 1));
    return {c, k_first};
}

} // namespace gaussquad
