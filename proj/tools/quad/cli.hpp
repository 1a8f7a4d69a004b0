#pragma once

#include <gaussquad/gausscf.hpp>
#include <gaussquad/interprule.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussquad::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitData = 3,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

Format parse_format(std::string_view s);

/// Precision from the --precision flag, else QUAD_PRECISION, else the default.
Digits resolve_precision(std::optional<int> flag, const char* env_value);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ------------------------------------------------------------------ tables

struct TableEntry {
    int n = 0;
    RatPoly U, U_prime, T, T_prime, weight_polynomial;
    std::vector<HPScalar> nodes_u, nodes_t, weights, log10_scaled_weights;
    LeadingError leading;
};

TableEntry table_entry(int n, Digits precision);

void write_tables(const std::vector<TableEntry>& entries, Format format, std::ostream& out);

// ------------------------------------------------------------------ demo

struct DemoRow {
    int n = 0;
    HPScalar value;
    std::vector<HPScalar> products; ///< Delta R_j f(x_j)
};

/// Gauss rules n = 0..n_max applied to 1/ln x over [100000, 200000].
std::vector<DemoRow> demo_rows(int n_max, Digits precision);

void write_demo(const std::vector<DemoRow>& rows, Format format, std::ostream& out);

/// Leading characters two decimal renderings share.
std::string common_prefix(const std::string& a, const std::string& b);

// ------------------------------------------------------------------ integrands

struct IntegrandSpec {
    std::string name;
    Integrand f;
    std::optional<RatPoly> polynomial; ///< set for poly:<...>
};

/// reciprocal-log, runge, or poly:c0,c1,... (ascending rational coefficients in x).
/// Throws UsageError for unknown names.
IntegrandSpec resolve_integrand(std::string_view name);

/// Samples file: header "#rule <gauss|cotes> n=<n> convention=<t|u>", then one value per line.
struct Samples {
    std::string rule;
    int n = 0;
    Convention convention = Convention::T01;
    std::vector<HPScalar> values;
};

/// Throws DataError on malformed content.
Samples read_samples(std::istream& in, Digits precision);

QuadRule make_rule(std::string_view rule, int n, Digits precision);

} // namespace gaussquad::cli
