#include <gaussquad/momseries.hpp>

namespace gaussquad {

SeriesTail moment_series_t(std::size_t K) {
    if (K == 0) {
        throw DomainError("moment series needs at least one coefficient");
    }
    std::vector<Rational> c;
    c.reserve(K);
    for (std::size_t m = 0; m < K; ++m) {
        c.emplace_back(1L, static_cast<long>(m + 1));
    }
    return SeriesTail(std::move(c));
}

SeriesTail moment_series_u(std::size_t K) {
    if (K == 0) {
        throw DomainError("moment series needs at least one coefficient");
    }
    std::vector<Rational> c;
    c.reserve(K);
    for (std::size_t m = 0; m < K; ++m) {
        c.push_back(m % 2 == 0 ? Rational(1L, static_cast<long>(m + 1)) : Rational(0));
    }
    return SeriesTail(std::move(c));
}

Series<HPScalar> to_hp(const SeriesTail& s, Digits d) {
    std::vector<HPScalar> c;
    c.reserve(s.size());
    for (const auto& q : s.coeffs()) {
        c.emplace_back(q, d);
    }
    return Series<HPScalar>(std::move(c));
}

} // namespace gaussquad
