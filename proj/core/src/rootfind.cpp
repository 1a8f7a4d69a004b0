#include <gaussquad/rootfind.hpp>

#include <algorithm>

namespace gaussquad {

namespace {

constexpr int kGuardDigits = 10;
constexpr long kMaxPanels = 1L << 10;
constexpr int kMaxPolishSteps = 1000;

struct Bracket {
    Rational lo;
    Rational hi;
    int sign_lo = 0; // sign of Q at lo
};

struct Isolation {
    std::vector<Bracket> brackets;
    std::vector<Rational> exact_roots; // grid points where Q vanished exactly
};

Isolation isolate(const RatPoly& Q) {
    const int want = Q.degree();
    for (long panels = 2; panels <= kMaxPanels; panels *= 2) {
        Isolation iso;
        Rational prev_x(0);
        int prev_sign = Q(prev_x).sign();
        for (long i = 1; i <= panels; ++i) {
            const Rational x(i, panels);
            const int s = Q(x).sign();
            if (s == 0) {
                iso.exact_roots.push_back(x);
                continue; // the sign on the far side is compared with prev_sign below
            }
            if (prev_sign != 0 && s != prev_sign) {
                const bool straddles_zero = !iso.exact_roots.empty() && iso.exact_roots.back() > prev_x;
                if (!straddles_zero) {
                    iso.brackets.push_back({prev_x, x, prev_sign});
                }
            }
            prev_x = x;
            prev_sign = s;
        }
        if (static_cast<int>(iso.brackets.size() + iso.exact_roots.size()) == want) {
            return iso;
        }
    }
    throw RootIsolationError("root isolation failed: could not separate " + std::to_string(want) +
                             " roots with " + std::to_string(kMaxPanels) + " panels");
}

// Safeguarded Newton on g(u) = Q(u^2) inside [lo, hi], where g changes sign.
HPScalar polish(const RatPoly& Q, const RatPoly& dQ, const Bracket& b, mpfr_prec_t work, const HPScalar& tol) {
    const HPScalar half = HPScalar::from_rational(Rational(1, 2), work);
    HPScalar lo = sqrt(HPScalar::from_rational(b.lo, work));
    HPScalar hi = sqrt(HPScalar::from_rational(b.hi, work));
    // orient so that g(lo) < 0
    if (b.sign_lo > 0) {
        std::swap(lo, hi);
    }
    auto g = [&](const HPScalar& u) { return poly_eval_hp(Q, u * u); };
    auto dg = [&](const HPScalar& u) { return ldexp(u * poly_eval_hp(dQ, u * u), 1); };

    HPScalar x = (lo + hi) * half;
    HPScalar dx = (hi - lo).abs();
    HPScalar dx_old = dx;
    HPScalar fx = g(x);
    HPScalar dfx = dg(x);
    for (int step = 0; step < kMaxPolishSteps; ++step) {
        const HPScalar lhs = ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx);
        const bool newton_leaves = lhs.sign() > 0;
        const bool newton_slow = (ldexp(fx, 1)).abs() > (dx_old * dfx).abs();
        dx_old = dx;
        if (dfx.is_zero() || newton_leaves || newton_slow) {
            dx = (hi - lo) * half;
            x = lo + dx;
        } else {
            dx = fx / dfx;
            x = x - dx;
        }
        if (dx.abs() <= tol) {
            return x;
        }
        fx = g(x);
        dfx = dg(x);
        if (fx.is_zero()) {
            return x;
        }
        if (fx.sign() < 0) {
            lo = x;
        } else {
            hi = x;
        }
    }
    throw RootIsolationError("root polishing stalled", sqrt(HPScalar(b.lo)).to_sig_string(20),
                             sqrt(HPScalar(b.hi)).to_sig_string(20));
}

} // namespace

RootSet real_roots_symmetric(const RatPoly& W, Digits precision) {
    const int deg = W.degree();
    if (deg < 0) {
        throw DomainError("roots of the zero polynomial");
    }
    const int s = deg % 2;
    for (int i = 0; i <= deg; ++i) {
        if (i % 2 != s && !W.coeffs()[static_cast<std::size_t>(i)].is_zero()) {
            throw DomainError("polynomial has no definite parity");
        }
    }
    std::vector<Rational> qc;
    for (int i = s; i <= deg; i += 2) {
        qc.push_back(W.coeffs()[static_cast<std::size_t>(i)]);
    }
    const RatPoly Q(std::move(qc));

    const Digits work_digits{precision.value + kGuardDigits};
    const mpfr_prec_t work = bits_for(work_digits);
    const mpfr_prec_t out_bits = bits_for(precision);
    const HPScalar tol = HPScalar::parse("1e-" + std::to_string(precision.value - 5), work_digits);

    std::vector<HPScalar> positive;
    if (Q.degree() > 0) {
        if (Q(Rational(0)).is_zero()) {
            throw RootIsolationError("multiple root at the origin");
        }
        if (Q(Rational(1)).is_zero()) {
            throw RootIsolationError("root on the interval boundary");
        }
        const Isolation iso = isolate(Q);
        const RatPoly dQ = Q.derivative();
        for (const auto& b : iso.brackets) {
            positive.push_back(polish(Q, dQ, b, work, tol));
        }
        for (const auto& r : iso.exact_roots) {
            positive.push_back(sqrt(HPScalar::from_rational(r, work)));
        }
        std::sort(positive.begin(), positive.end(), [](const HPScalar& a, const HPScalar& b) { return a < b; });
    }

    RootSet out;
    out.roots.reserve(static_cast<std::size_t>(deg));
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        out.roots.push_back(-it->with_bits(out_bits));
    }
    if (s == 1) {
        out.roots.push_back(HPScalar(0L).with_bits(out_bits));
    }
    for (const auto& r : positive) {
        out.roots.push_back(r.with_bits(out_bits));
    }

    const RatPoly dW = W.derivative();
    HPScalar bound = HPScalar(0L).with_bits(out_bits);
    for (const auto& r : out.roots) {
        const HPScalar rw = r.with_bits(work);
        const HPScalar ratio = (poly_eval_hp(W, rw) / poly_eval_hp(dW, rw)).abs();
        if (ratio > bound) {
            bound = ratio.with_bits(out_bits);
        }
    }
    out.residual_bound = bound;
    return out;
}

} // namespace gaussquad
