#include "cli.hpp"

#include <istream>
#include <regex>
#include <sstream>

namespace gaussquad::cli {

IntegrandSpec resolve_integrand(std::string_view name) {
    if (name == "reciprocal-log") {
        return {std::string(name),
                [](const HPScalar& x) { return HPScalar(1L).with_bits(x.bits()) / hp_ln(x); },
                std::nullopt};
    }
    if (name == "runge") {
        return {std::string(name),
                [](const HPScalar& x) {
                    const HPScalar one = HPScalar(1L).with_bits(x.bits());
                    return one / (one + HPScalar(25L) * x * x);
                },
                std::nullopt};
    }
    if (name.starts_with("poly:")) {
        std::vector<Rational> coeffs;
        std::stringstream ss{std::string(name.substr(5))};
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.push_back(Rational::parse(item));
            } catch (const Error& e) {
                throw UsageError("bad polynomial coefficient '" + item + "': " + e.what());
            }
        }
        if (coeffs.empty()) {
            throw UsageError("poly: needs at least one coefficient");
        }
        RatPoly p(coeffs);
        return {std::string(name), [p](const HPScalar& x) { return poly_eval_hp(p, x); }, p};
    }
    throw UsageError("unknown integrand '" + std::string(name) + "' (expected reciprocal-log, runge, or poly:<c0,c1,...>)");
}

Samples read_samples(std::istream& in, Digits precision) {
    std::string header;
    if (!std::getline(in, header)) {
        throw DataError("samples file is empty");
    }
    static const std::regex kHeader(R"(^#rule\s+(gauss|cotes)\s+n=(\d+)\s+convention=(t|u)\s*$)");
    std::smatch m;
    if (!std::regex_match(header, m, kHeader)) {
        throw DataError("bad samples header '" + header + "' (expected '#rule gauss n=<n> convention=t')");
    }
    Samples s;
    s.rule = m[1];
    s.n = std::stoi(m[2]);
    s.convention = m[3] == "t" ? Convention::T01 : Convention::U11;

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        try {
            s.values.push_back(HPScalar::parse(line.substr(line.find_first_not_of(" \t")), precision));
        } catch (const Error&) {
            throw DataError("samples line " + std::to_string(line_no) + ": not a decimal value: '" + line + "'");
        }
    }
    return s;
}

QuadRule make_rule(std::string_view rule, int n, Digits precision) {
    if (rule == "gauss") {
        if (n < 0 || n > kMaxGaussIndex) {
            throw UsageError("gauss rule needs 0 <= n <= " + std::to_string(kMaxGaussIndex));
        }
        return gauss_rule(n, precision);
    }
    if (rule == "cotes") {
        if (n < 1 || n > kMaxGaussIndex) {
            throw UsageError("cotes rule needs 1 <= n <= " + std::to_string(kMaxGaussIndex));
        }
        return newton_cotes(n, precision);
    }
    throw UsageError("unknown rule '" + std::string(rule) + "' (expected gauss or cotes)");
}

} // namespace gaussquad::cli
