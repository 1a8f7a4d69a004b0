#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace gaussquad::cli {

namespace {

constexpr int kValueDigits = 25;
constexpr int kMaxErrorCoefficients = 64;
constexpr int kMaxPrecision = 2000;

struct CommonFlags {
    std::optional<int> precision;
    std::string format = "text";
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--precision", flags.precision, "Working precision in significant decimal digits (default 50)");
    cmd.add_option("--format", flags.format, "Output format: text, csv or json");
}

int cmd_tables(std::optional<int> n, int n_min, int n_max, const CommonFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const Digits precision = resolve_precision(flags.precision, std::getenv("QUAD_PRECISION"));
    if (n) {
        n_min = n_max = *n;
    }
    if (n_min < 0 || n_min > n_max || n_max > kMaxGaussIndex) {
        throw UsageError("need 0 <= n-min <= n-max <= " + std::to_string(kMaxGaussIndex));
    }
    std::vector<TableEntry> entries;
    for (int k = n_min; k <= n_max; ++k) {
        entries.push_back(table_entry(k, precision));
    }
    write_tables(entries, format, out);
    return kExitOk;
}

int cmd_demo(int n_max, const CommonFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const Digits precision = resolve_precision(flags.precision, std::getenv("QUAD_PRECISION"));
    if (n_max < 0 || n_max > kMaxGaussIndex) {
        throw UsageError("need 0 <= n-max <= " + std::to_string(kMaxGaussIndex));
    }
    write_demo(demo_rows(n_max, precision), format, out);
    return kExitOk;
}

struct IntegrateFlags {
    std::string rule = "gauss";
    std::optional<int> n;
    std::optional<std::string> fn;
    std::optional<std::string> samples;
    std::string from = "0";
    std::string width = "1";
};

Rational parse_bound(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw UsageError(std::string(flag) + " expects a decimal or p/q literal, got '" + text + "'");
    }
}

int cmd_integrate(const IntegrateFlags& f, bool rule_given, const CommonFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const Digits precision = resolve_precision(flags.precision, std::getenv("QUAD_PRECISION"));
    const ScopedPrecision scope(precision);
    if (f.fn.has_value() == f.samples.has_value()) {
        throw UsageError("give exactly one of --fn or --samples");
    }
    const Rational g_exact = parse_bound(f.from, "--from");
    const Rational delta_exact = parse_bound(f.width, "--width");
    if (delta_exact.is_zero()) {
        throw UsageError("--width must be nonzero");
    }
    const HPScalar g(g_exact, precision);
    const HPScalar delta(delta_exact, precision);

    std::string rule_name = f.rule;
    int n = 0;
    HPScalar value;
    std::optional<Rational> exact;
    std::optional<std::string> error_text;

    if (f.samples) {
        std::ifstream in(*f.samples);
        if (!in) {
            throw DataError("cannot open samples file '" + *f.samples + "'");
        }
        const Samples s = read_samples(in, precision);
        if (rule_given && s.rule != f.rule) {
            throw DataError("samples file is for rule " + s.rule + ", --rule says " + f.rule);
        }
        if (f.n && *f.n != s.n) {
            throw DataError("samples file is for n=" + std::to_string(s.n) + ", --n says " + std::to_string(*f.n));
        }
        rule_name = s.rule;
        n = s.n;
        const QuadRule rule = make_rule(rule_name, n, precision);
        if (s.values.size() != rule.size()) {
            throw DataError("samples file: expected " + std::to_string(rule.size()) + " values, found " +
                            std::to_string(s.values.size()));
        }
        HPScalar sum = HPScalar(0L);
        for (std::size_t j = 0; j < rule.size(); ++j) {
            sum += rule.weights[j] * s.values[j];
        }
        value = delta * sum;
    } else {
        if (!f.n) {
            throw UsageError("--n is required");
        }
        n = *f.n;
        const IntegrandSpec spec = resolve_integrand(*f.fn);
        const QuadRule rule = make_rule(rule_name, n, precision);
        value = apply_rule(rule, spec.f, g, delta);
        if (spec.polynomial) {
            // p(g + delta t) = sum d_m t^m; integral = delta sum d_m/(m+1), error = delta sum d_m k_m
            const RatPoly mapped = spec.polynomial->compose_affine(delta_exact, g_exact);
            const std::size_t K = mapped.coeffs().size();
            exact = delta_exact * poly_definite_integral_01(mapped);
            const ErrorSeries es = error_coefficients(rule, std::max<std::size_t>(K, 1));
            if (es.exact) {
                Rational err(0);
                for (std::size_t m = 0; m < K; ++m) {
                    err += mapped.coeffs()[m] * (*es.exact)[m];
                }
                error_text = (delta_exact * err).to_string();
            } else {
                HPScalar err(0L);
                for (std::size_t m = 0; m < K; ++m) {
                    err += HPScalar(mapped.coeffs()[m], precision) * es.values[m];
                }
                error_text = (delta * err).to_sig_string(kValueDigits);
            }
        }
    }

    const std::string value_text = value.to_sig_string(kValueDigits);
    switch (format) {
    case Format::Text:
        out << "rule: " << rule_name << " n=" << n << "\n";
        out << "value: " << value_text << "\n";
        if (exact) {
            out << "exact: " << exact->to_string() << "\n";
            out << "error (exact - rule): " << *error_text << "\n";
        }
        break;
    case Format::Csv:
        out << "rule,n,value,exact,error\r\n";
        out << rule_name << ',' << n << ',' << value_text << ',' << (exact ? exact->to_string() : "") << ','
            << error_text.value_or("") << "\r\n";
        break;
    case Format::Json: {
        nlohmann::json doc{{"rule", rule_name}, {"n", n}, {"value", value_text}};
        if (exact) {
            doc["exact"] = exact->to_string();
            doc["error"] = *error_text;
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return kExitOk;
}

int cmd_error_coeffs(const std::string& rule_name, int n, int K, const CommonFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const Digits precision = resolve_precision(flags.precision, std::getenv("QUAD_PRECISION"));
    const ScopedPrecision scope(precision);
    if (K < 1 || K > kMaxErrorCoefficients) {
        throw UsageError("--K must lie in [1, " + std::to_string(kMaxErrorCoefficients) + "]");
    }
    const QuadRule rule = make_rule(rule_name, n, precision);
    const ErrorSeries es = error_coefficients(rule, static_cast<std::size_t>(K));
    auto text_of = [&](std::size_t m) {
        return es.exact ? (*es.exact)[m].to_string() : es.values[m].to_sig_string(kValueDigits);
    };
    switch (format) {
    case Format::Text:
        out << "error coefficients k(m) = 1/(m+1) - rule(t^m), rule " << rule_name << " n=" << n << "\n";
        for (std::size_t m = 0; m < es.size(); ++m) {
            out << "k(" << m << ") = " << text_of(m) << "\n";
        }
        break;
    case Format::Csv:
        out << "m,k,decimal\r\n";
        for (std::size_t m = 0; m < es.size(); ++m) {
            out << m << ',' << text_of(m) << ',' << es.values[m].to_sig_string(kValueDigits) << "\r\n";
        }
        break;
    case Format::Json: {
        nlohmann::json ks = nlohmann::json::array();
        for (std::size_t m = 0; m < es.size(); ++m) {
            ks.push_back({{"m", m}, {"value", text_of(m)}, {"decimal", es.values[m].to_sig_string(kValueDigits)}});
        }
        nlohmann::json doc{{"rule", rule_name}, {"n", n}, {"K", K}, {"exact", es.is_exact()}, {"k", ks}};
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return kExitOk;
}

} // namespace

Format parse_format(std::string_view s) {
    if (s == "text") {
        return Format::Text;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    throw UsageError("unknown format '" + std::string(s) + "' (expected text, csv or json)");
}

Digits resolve_precision(std::optional<int> flag, const char* env_value) {
    int digits = kDefaultDigits;
    if (flag) {
        digits = *flag;
    } else if (env_value != nullptr && *env_value != '\0') {
        try {
            std::size_t used = 0;
            digits = std::stoi(env_value, &used);
            if (used != std::string_view(env_value).size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw UsageError("QUAD_PRECISION must be an integer, got '" + std::string(env_value) + "'");
        }
    }
    if (digits < kMinimumDigits || digits > kMaxPrecision) {
        throw UsageError("precision must lie in [" + std::to_string(kMinimumDigits) + ", " +
                         std::to_string(kMaxPrecision) + "] digits");
    }
    return Digits{digits};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian quadrature by continued fractions of the moment series", "quad"};
    app.require_subcommand(1);

    CommonFlags tables_flags;
    std::optional<int> tables_n;
    int n_min = 0;
    int n_max = 6;
    auto* tables = app.add_subcommand("tables", "Nodes, weights, polynomials and leading error terms");
    tables->add_option("--n", tables_n, "Single rule index");
    tables->add_option("--n-min", n_min, "First rule index (default 0)");
    tables->add_option("--n-max", n_max, "Last rule index (default 6)");
    add_common(*tables, tables_flags);

    CommonFlags demo_flags;
    int demo_n_max = 6;
    auto* demo = app.add_subcommand("demo-1815", "Integral of 1/ln x over [100000, 200000] with 1..n+1 nodes");
    demo->add_option("--n-max", demo_n_max, "Largest rule index (default 6)");
    add_common(*demo, demo_flags);

    CommonFlags integrate_common;
    IntegrateFlags integrate_flags;
    auto* integrate = app.add_subcommand("integrate", "Apply a rule to a built-in integrand or a samples file");
    auto* rule_opt = integrate->add_option("--rule", integrate_flags.rule, "gauss or cotes (default gauss)");
    integrate->add_option("--n", integrate_flags.n, "Rule index");
    integrate->add_option("--fn", integrate_flags.fn, "reciprocal-log, runge, or poly:c0,c1,...");
    integrate->add_option("--samples", integrate_flags.samples, "File of node-aligned function values");
    integrate->add_option("--from", integrate_flags.from, "Left end g (default 0)");
    integrate->add_option("--width", integrate_flags.width, "Interval width Delta (default 1)");
    add_common(*integrate, integrate_common);

    CommonFlags ec_flags;
    std::string ec_rule = "gauss";
    int ec_n = 0;
    int ec_K = 8;
    auto* error_coeffs = app.add_subcommand("error-coeffs", "Error coefficients k(0..K-1) of a rule");
    error_coeffs->add_option("--rule", ec_rule, "gauss or cotes (default gauss)");
    error_coeffs->add_option("--n", ec_n, "Rule index")->required();
    error_coeffs->add_option("--K", ec_K, "Number of coefficients, at most 64 (default 8)");
    add_common(*error_coeffs, ec_flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tables) {
            return cmd_tables(tables_n, n_min, n_max, tables_flags, out);
        }
        if (*demo) {
            return cmd_demo(demo_n_max, demo_flags, out);
        }
        if (*integrate) {
            return cmd_integrate(integrate_flags, rule_opt->count() > 0, integrate_common, out);
        }
        if (*error_coeffs) {
            return cmd_error_coeffs(ec_rule, ec_n, ec_K, ec_flags, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace gaussquad::cli
