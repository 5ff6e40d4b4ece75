#pragma once

#include "metric.hpp"
#include "types.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ftclust {

/// A matrix that parsed but violates the metric invariants.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics)
        : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    static std::string summarize(const std::vector<Diagnostic>& diags) {
        std::string out = "invalid distance matrix: " + std::to_string(diags.size()) + " violation(s)";
        if (!diags.empty()) {
            out += ", first " + diags.front().describe();
        }
        return out;
    }

    std::vector<Diagnostic> diagnostics_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Rows of finite decimal reals. Blank lines are skipped; line numbers count them.
inline std::vector<std::vector<double>> read_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<double> row;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view field = trim(rest.substr(0, comma));
            double value = 0.0;
            const char* end = field.data() + field.size();
            auto [ptr, ec] = std::from_chars(field.data(), end, value);
            if (field.empty() || ec != std::errc() || ptr != end) {
                throw ParseError("non-numeric field '" + std::string(field) + "'", lineno);
            }
            if (!std::isfinite(value)) {
                throw ParseError("non-finite value '" + std::string(field) + "'", lineno);
            }
            row.push_back(value);
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("expected " + std::to_string(rows.front().size()) + " fields, found " +
                                 std::to_string(row.size()),
                             lineno);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("empty input", 0);
    }
    return rows;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
    }
    return in;
}

}  // namespace detail

/// One point per CSV row; row order defines the indices.
inline Instance read_points(std::istream& in, double p = 2.0) {
    return Instance::from_points(detail::read_csv(in), p);
}

inline Instance load_points(const std::string& path, double p = 2.0) {
    auto in = detail::open_input(path);
    return read_points(in, p);
}

/// n x n CSV matrix. Symmetry, zero diagonal and non-negativity are mandatory.
inline Instance read_matrix(std::istream& in, bool check_triangle = false, double tol = 1e-9) {
    const auto rows = detail::read_csv(in);
    const std::size_t n = rows.size();
    if (rows.front().size() != n) {
        throw ParseError("matrix is " + std::to_string(n) + " x " + std::to_string(rows.front().size()) +
                             ", expected square",
                         0);
    }
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    Instance inst = Instance::from_matrix(n, std::move(flat));
    auto diags = validate(inst, check_triangle, tol);
    if (!diags.empty()) {
        throw ValidationError(std::move(diags));
    }
    return inst;
}

inline Instance load_matrix(const std::string& path, bool check_triangle = false, double tol = 1e-9) {
    auto in = detail::open_input(path);
    return read_matrix(in, check_triangle, tol);
}

/// Writes coordinates with round-trip precision, so read_points reproduces every distance.
inline void write_points(std::ostream& out, const Instance& inst) {
    const auto* cb = inst.coordinates();
    if (!cb) {
        throw std::invalid_argument("write_points needs a coordinate instance");
    }
    char buf[64];
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t d = 0; d < cb->dim; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g", cb->coords[i * cb->dim + d]);
            out << (d ? "," : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace ftclust
