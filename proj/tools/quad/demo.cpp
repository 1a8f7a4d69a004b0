#include "cli.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>

namespace gaussquad::cli {

namespace {

constexpr int kDecimals = 7;
constexpr long kFrom = 100000;
constexpr long kWidth = 100000;
constexpr const char* kBessel = "8406.24312";

HPScalar reciprocal_log(const HPScalar& x) {
    return HPScalar(1L).with_bits(x.bits()) / hp_ln(x);
}

std::vector<std::string> stable_prefixes(const std::vector<DemoRow>& rows) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string cur = rows[i].value.to_fixed_string(kDecimals);
        if (i + 1 < rows.size()) {
            out.push_back(common_prefix(cur, rows[i + 1].value.to_fixed_string(kDecimals)));
        } else {
            out.push_back(cur);
        }
    }
    return out;
}

} // namespace

std::string common_prefix(const std::string& a, const std::string& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
    }
    return a.substr(0, i);
}

std::vector<DemoRow> demo_rows(int n_max, Digits precision) {
    const ScopedPrecision scope(precision);
    const HPScalar g(kFrom);
    const HPScalar delta(kWidth);
    std::vector<DemoRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const QuadRule rule = gauss_rule(n, precision);
        DemoRow row;
        row.n = n;
        row.value = apply_rule(rule, reciprocal_log, g, delta);
        for (std::size_t j = 0; j < rule.size(); ++j) {
            const HPScalar x = g + delta * ldexp(rule.nodes[j] + HPScalar(1L), -1);
            row.products.push_back(delta * rule.weights[j] * reciprocal_log(x));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_demo(const std::vector<DemoRow>& rows, Format format, std::ostream& out) {
    const auto stable = stable_prefixes(rows);
    switch (format) {
    case Format::Text: {
        out << "integral of dx / ln x from " << kFrom << " to " << 2 * kFrom << "\n\n";
        out << std::left << std::setw(4) << "n" << std::setw(7) << "nodes" << std::setw(16) << "value"
            << "stable digits\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << std::setw(4) << rows[i].n << std::setw(7) << rows[i].products.size() << std::setw(16)
                << rows[i].value.to_fixed_string(kDecimals) << stable[i] << "\n";
        }
        out << std::right << "\nBessel: " << kBessel << "\n\nper-node products Delta R f(x):\n";
        for (const auto& row : rows) {
            out << "n = " << row.n << "\n";
            for (const auto& p : row.products) {
                out << "    " << p.to_fixed_string(kDecimals) << "\n";
            }
        }
        break;
    }
    case Format::Csv:
        out << "n,node_index,product,value\r\n";
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < row.products.size(); ++j) {
                out << row.n << ',' << j << ',' << row.products[j].to_fixed_string(kDecimals) << ','
                    << row.value.to_fixed_string(kDecimals) << "\r\n";
            }
        }
        break;
    case Format::Json: {
        nlohmann::json doc;
        doc["integrand"] = "reciprocal-log";
        doc["from"] = std::to_string(kFrom);
        doc["width"] = std::to_string(kWidth);
        doc["bessel"] = kBessel;
        doc["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            nlohmann::json products = nlohmann::json::array();
            for (const auto& p : rows[i].products) {
                products.push_back(p.to_fixed_string(kDecimals));
            }
            doc["rows"].push_back({{"n", rows[i].n},
                                   {"value", rows[i].value.to_fixed_string(kDecimals)},
                                   {"stable_prefix", stable[i]},
                                   {"products", products}});
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
}

} // namespace gaussquad::cli
