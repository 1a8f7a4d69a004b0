#include "cli.hpp"

#include <gaussquad/momseries.hpp>

#include <json.hpp>

#include <iomanip>
#include <ostream>

namespace gaussquad::cli {

namespace {

constexpr int kNodeDigits = 16;
constexpr int kLogDigits = 10;

nlohmann::json coeff_list(const RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.to_string());
    }
    return arr;
}

nlohmann::json decimal_list(const std::vector<HPScalar>& xs, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) {
        arr.push_back(x.to_sig_string(digits));
    }
    return arr;
}

std::string leading_decimal(const TableEntry& e) {
    return HPScalar(e.leading.k_first).to_sig_string(kNodeDigits);
}

nlohmann::json entry_json(const TableEntry& e) {
    nlohmann::json j;
    j["n"] = e.n;
    j["convention"] = "t";
    j["nodes"] = decimal_list(e.nodes_t, kNodeDigits);
    j["nodes_u"] = decimal_list(e.nodes_u, kNodeDigits);
    j["weights"] = decimal_list(e.weights, kNodeDigits);
    j["log10_scaled_weights"] = decimal_list(e.log10_scaled_weights, kLogDigits);
    j["leading_error"] = {
        {"rational", e.leading.k_first.to_string()},
        {"decimal", leading_decimal(e)},
        {"order", 2 * e.n + 2},
        {"u_constant", e.leading.c.to_string()},
    };
    j["polynomials"] = {
        {"U", coeff_list(e.U)},
        {"U_prime", coeff_list(e.U_prime)},
        {"T", coeff_list(e.T)},
        {"T_prime", coeff_list(e.T_prime)},
        {"weight_polynomial", coeff_list(e.weight_polynomial)},
    };
    return j;
}

void write_text(const std::vector<TableEntry>& entries, std::ostream& out) {
    for (const auto& e : entries) {
        out << "n = " << e.n << "  (" << e.nodes_u.size() << " nodes, degree " << 2 * e.n + 1 << ")\n";
        out << "  U    = " << to_string(e.U, 'u') << "\n";
        out << "  U'   = " << to_string(e.U_prime, 'u') << "\n";
        out << "  T    = " << to_string(e.T, 't') << "\n";
        out << "  T'   = " << to_string(e.T_prime, 't') << "\n";
        out << "  weight polynomial = " << to_string(e.weight_polynomial, 'u') << "\n";
        out << "  leading error k(" << 2 * e.n + 2 << ") = " << e.leading.k_first << " = " << leading_decimal(e)
            << "   (u form: " << e.leading.c << ")\n";
        out << "  " << std::left << std::setw(4) << "j" << std::setw(22) << "node_t" << std::setw(22) << "node_u"
            << std::setw(22) << "weight"
            << "log10(1e9 R)\n";
        for (std::size_t j = 0; j < e.nodes_u.size(); ++j) {
            out << "  " << std::setw(4) << j << std::setw(22) << e.nodes_t[j].to_sig_string(kNodeDigits)
                << std::setw(22) << e.nodes_u[j].to_sig_string(kNodeDigits) << std::setw(22)
                << e.weights[j].to_sig_string(kNodeDigits) << e.log10_scaled_weights[j].to_sig_string(kLogDigits)
                << "\n";
        }
        out << std::right << "\n";
    }
}

void write_csv(const std::vector<TableEntry>& entries, std::ostream& out) {
    out << "n,node_index,node_t,node_u,weight,log10_weight_scaled,leading_error_rational,leading_error_decimal\r\n";
    for (const auto& e : entries) {
        const std::string lead_r = e.leading.k_first.to_string();
        const std::string lead_d = leading_decimal(e);
        for (std::size_t j = 0; j < e.nodes_u.size(); ++j) {
            out << e.n << ',' << j << ',' << e.nodes_t[j].to_sig_string(kNodeDigits) << ','
                << e.nodes_u[j].to_sig_string(kNodeDigits) << ',' << e.weights[j].to_sig_string(kNodeDigits) << ','
                << e.log10_scaled_weights[j].to_sig_string(kLogDigits) << ',' << lead_r << ',' << lead_d << "\r\n";
        }
    }
}

} // namespace

TableEntry table_entry(int n, Digits precision) {
    const ScopedPrecision scope(precision);
    const QuadRule rule = gauss_rule(n, precision);
    const QuadRule rule_t = rule.to_t01();
    const LegendrePair pair = legendre_pair(n + 1);

    TableEntry e;
    e.n = n;
    e.U = pair.W;
    e.U_prime = product_split(pair.W, moment_series_u(static_cast<std::size_t>(n + 1)), 0).poly;
    e.T = *rule_t.nodepoly;
    e.T_prime = product_split(e.T, moment_series_t(static_cast<std::size_t>(n + 1)), 0).poly;
    e.weight_polynomial = weight_polynomial(n);
    e.nodes_u = rule.nodes;
    e.nodes_t = rule_t.nodes;
    e.weights = rule.weights;
    for (const auto& w : rule.weights) {
        e.log10_scaled_weights.push_back(hp_log10_scaled(w));
    }
    e.leading = leading_error_constant(n);
    return e;
}

void write_tables(const std::vector<TableEntry>& entries, Format format, std::ostream& out) {
    switch (format) {
    case Format::Text:
        write_text(entries, out);
        break;
    case Format::Csv:
        write_csv(entries, out);
        break;
    case Format::Json: {
        nlohmann::json doc;
        if (entries.size() == 1) {
            doc = entry_json(entries.front());
        } else {
            doc = nlohmann::json::array();
            for (const auto& e : entries) {
                doc.push_back(entry_json(e));
            }
        }
        out << doc.dump(2) << "\n";
        break;
    }
    }
}

} // namespace gaussquad::cli
