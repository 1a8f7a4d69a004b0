#include <gaussquad/interprule.hpp>

#include <algorithm>
#include <cmath>

namespace gaussquad {

std::string_view to_string(Convention c) {
    return c == Convention::T01 ? "t" : "u";
}

SeriesTail moment_series(Convention c, std::size_t K) {
    return c == Convention::T01 ? moment_series_t(K) : moment_series_u(K);
}

Digits digits_of(const HPScalar& x) noexcept {
    constexpr double kLog10Of2 = 0.30102999566398120;
    return Digits{static_cast<int>(std::floor(static_cast<double>(x.bits() - 8) * kLog10Of2))};
}

namespace {

template <class F>
bool outside(const F& x, Convention c) {
    const F lo = c == Convention::T01 ? F(0) : F(-1);
    const F hi = F(1);
    return x < lo || x > hi;
}

template <class F>
std::vector<F> sorted_distinct(std::span<const F> nodes) {
    if (nodes.empty()) {
        throw DomainError("a rule needs at least one node");
    }
    std::vector<F> v(nodes.begin(), nodes.end());
    std::sort(v.begin(), v.end(), [](const F& a, const F& b) { return a < b; });
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1]) {
            throw DuplicateNodeError("duplicate quadrature node at sorted position " + std::to_string(i));
        }
    }
    return v;
}

} // namespace

QuadRule QuadRule::to_t01() const {
    if (convention == Convention::T01) {
        return *this;
    }
    QuadRule r;
    r.convention = Convention::T01;
    r.degree = degree;
    r.outside_interval = outside_interval;
    r.weights = weights;
    r.nodes.reserve(nodes.size());
    for (const auto& b : nodes) {
        r.nodes.push_back(ldexp(b + HPScalar(1L).with_bits(b.bits()), -1));
    }
    if (exact_nodes) {
        std::vector<Rational> a;
        a.reserve(exact_nodes->size());
        for (const auto& b : *exact_nodes) {
            a.push_back((b + 1) / 2);
        }
        r.exact_nodes = std::move(a);
    }
    r.exact_weights = exact_weights;
    if (nodepoly) {
        // T(t) = W(2t - 1), made monic
        r.nodepoly = nodepoly->compose_affine(Rational(2), Rational(-1)).monic();
    }
    return r;
}

QuadRule interpolatory_rule(std::span<const Rational> nodes_in, Convention convention, Digits d) {
    const std::vector<Rational> nodes = sorted_distinct(nodes_in);
    const RatPoly T = poly_from_roots<Rational>(nodes);
    const auto n = nodes.size();
    const RatPoly Tprime = product_split(T, moment_series(convention, n), 0).poly;
    const RatPoly Tdot = T.derivative();

    QuadRule rule;
    rule.convention = convention;
    rule.degree = static_cast<int>(n) - 1;
    std::vector<Rational> weights;
    weights.reserve(n);
    for (const auto& a : nodes) {
        weights.push_back(Tprime(a) / Tdot(a));
        rule.outside_interval = rule.outside_interval || outside(a, convention);
    }
    for (std::size_t j = 0; j < n; ++j) {
        rule.nodes.emplace_back(nodes[j], d);
        rule.weights.emplace_back(weights[j], d);
    }
    rule.exact_nodes = nodes;
    rule.exact_weights = std::move(weights);
    rule.nodepoly = T;
    return rule;
}

QuadRule interpolatory_rule(std::span<const HPScalar> nodes_in, Convention convention) {
    const std::vector<HPScalar> nodes = sorted_distinct(nodes_in);
    const Digits d = digits_of(nodes.front());
    const HPPoly T = poly_from_roots<HPScalar>(nodes);
    const auto n = nodes.size();
    const HPPoly Tprime = product_split(T, to_hp(moment_series(convention, n), d), 0).poly;
    const HPPoly Tdot = T.derivative();

    QuadRule rule;
    rule.convention = convention;
    rule.degree = static_cast<int>(n) - 1;
    for (const auto& a : nodes) {
        rule.nodes.push_back(a);
        rule.weights.push_back(Tprime(a) / Tdot(a));
        rule.outside_interval = rule.outside_interval || outside(a, convention);
    }
    return rule;
}

QuadRule newton_cotes(int n, Digits d) {
    if (n < 1) {
        throw DomainError("Newton-Cotes rules need n >= 1");
    }
    std::vector<Rational> nodes;
    for (int i = 0; i <= n; ++i) {
        nodes.emplace_back(static_cast<long>(i), static_cast<long>(n));
    }
    QuadRule rule = interpolatory_rule(nodes, Convention::T01, d);
    // Symmetric rules with an odd node count also integrate x^{n+1}.
    if (n % 2 == 0) {
        rule.degree = n + 1;
    }
    return rule;
}

RuleExpansion cauchy_expansion_of_rule(const QuadRule& rule, std::size_t K) {
    RuleExpansion out;
    out.values = cauchy_expansion<HPScalar>(rule.nodes, rule.weights, K);
    if (rule.is_exact()) {
        out.exact = cauchy_expansion<Rational>(*rule.exact_nodes, *rule.exact_weights, K);
    }
    return out;
}

ErrorSeries error_coefficients(const QuadRule& rule_in, std::size_t K) {
    const QuadRule rule = rule_in.to_t01();
    if (rule.nodes.empty()) {
        throw DomainError("error coefficients of an empty rule");
    }
    const Digits d = digits_of(rule.nodes.front());
    const SeriesTail moments = moment_series_t(std::max<std::size_t>(K, 1));

    // Route 1: moment deficits.
    std::optional<std::vector<Rational>> direct_exact;
    if (rule.is_exact()) {
        const SeriesTail sums = cauchy_expansion<Rational>(*rule.exact_nodes, *rule.exact_weights, K);
        std::vector<Rational> k;
        k.reserve(K);
        for (std::size_t m = 0; m < K; ++m) {
            k.push_back(moments[m] - sums[m]);
        }
        direct_exact = std::move(k);
    }
    const Series<HPScalar> sums_hp = cauchy_expansion<HPScalar>(rule.nodes, rule.weights, K);
    std::vector<HPScalar> direct_hp;
    direct_hp.reserve(K);
    for (std::size_t m = 0; m < K; ++m) {
        direct_hp.push_back(HPScalar(moments[m], d) - sums_hp[m]);
    }

    // Route 2: Theta = tail / T.
    const std::size_t n_nodes = rule.size();
    const std::size_t tail_len = K > n_nodes ? K - n_nodes : 0;
    std::optional<std::vector<Rational>> series_exact;
    std::vector<HPScalar> series_hp;
    if (rule.nodepoly) {
        const RatPoly& T = *rule.nodepoly;
        const auto split = product_split(T, moment_series_t(n_nodes + tail_len), tail_len);
        series_exact = series_divide(split.tail, T, K).coeffs();
    } else {
        const HPPoly T = poly_from_roots<HPScalar>(rule.nodes);
        const auto split = product_split(T, to_hp(moment_series_t(n_nodes + tail_len), d), tail_len);
        series_hp = series_divide(split.tail, T, K).coeffs();
    }

    ErrorSeries out;
    if (series_exact && direct_exact) {
        if (*series_exact != *direct_exact) {
            throw ConsistencyError("error coefficients from moment deficits and from tail/T differ");
        }
    }
    const HPScalar tol = HPScalar::parse("1e-" + std::to_string(std::max(d.value - 8, 1)), d);
    for (std::size_t m = 0; m < K; ++m) {
        const HPScalar other = series_exact ? HPScalar((*series_exact)[m], d) : series_hp[m];
        if ((other - direct_hp[m]).abs() > tol) {
            throw ConsistencyError("error coefficient k[" + std::to_string(m) +
                                   "] disagrees between moment deficits and tail/T");
        }
    }
    if (series_exact) {
        out.exact = *series_exact;
        for (const auto& k : *series_exact) {
            out.values.emplace_back(k, d);
        }
    } else if (direct_exact) {
        out.exact = *direct_exact;
        out.values = std::move(direct_hp);
    } else {
        out.values = std::move(series_hp);
    }
    return out;
}

HPScalar apply_rule(const QuadRule& rule, const Integrand& f, const HPScalar& g, const HPScalar& delta) {
    if (delta.is_zero()) {
        throw DomainError("interval width must be nonzero");
    }
    HPScalar sum = HPScalar(0L).with_bits(std::max(g.bits(), delta.bits()));
    for (std::size_t j = 0; j < rule.size(); ++j) {
        HPScalar a = rule.nodes[j];
        if (rule.convention == Convention::U11) {
            a = ldexp(a + HPScalar(1L).with_bits(a.bits()), -1);
        }
        const HPScalar x = g + delta * a;
        HPScalar y;
        try {
            y = f(x);
        } catch (const IntegrandError&) {
            throw;
        } catch (const std::exception& e) {
            throw IntegrandError(j, e.what());
        }
        sum += rule.weights[j] * y;
    }
    return delta * sum;
}

} // namespace gaussquad
