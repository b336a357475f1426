#pragma once

#include <cctype>
#include <sstream>

#include "granular/table.hpp"

namespace granular {

// A table that arrived as a raw matrix, so labels exist without a graph.
struct labeled_table {
    information_table table;
    std::vector<std::string> labels;
    std::vector<std::string> warnings;  // advisory only (triangle inequality)
};

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

// CSV distance matrix, optional header row of labels. Validates symmetry,
// zero diagonal, and off-diagonal positivity; triangle-inequality violations
// are reported as warnings rather than rejected.
inline labeled_table load_matrix(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        rows.push_back(detail::split_csv_row(line));
    }
    if (rows.empty()) throw error("invalid distance matrix", "empty input");

    labeled_table out;
    bool header = false;
    for (const auto& cell : rows.front())
        if (!detail::is_integer_token(cell)) header = true;
    if (header) {
        out.labels = rows.front();
        rows.erase(rows.begin());
    }

    const int n = static_cast<int>(rows.size());
    if (n == 0) throw error("invalid distance matrix", "header without data rows");
    if (out.labels.empty())
        for (int i = 1; i <= n; ++i) out.labels.push_back("v" + std::to_string(i));
    if (static_cast<int>(out.labels.size()) != n)
        throw error("invalid distance matrix", "label count does not match row count");

    distance_matrix dm;
    dm.d.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw error("invalid distance matrix",
                        "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " cells, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (!detail::is_integer_token(rows[i][j]))
                throw error("invalid distance matrix", "non-integer cell '" + rows[i][j] + "'");
            dm.d[i][j] = std::stoi(rows[i][j]);
        }
    }

    for (int i = 0; i < n; ++i) {
        if (dm.d[i][i] != 0)
            throw error("invalid distance matrix", "non-zero diagonal at row " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j) {
            if (dm.d[i][j] != dm.d[j][i])
                throw error("invalid distance matrix",
                            "asymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if (i != j && dm.d[i][j] <= 0)
                throw error("invalid distance matrix", "non-positive off-diagonal entry");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dm.d[i][j] > dm.d[i][k] + dm.d[k][j]) {
                    out.warnings.push_back("triangle inequality violated at (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                    i = j = n;  // one warning is enough
                    break;
                }

    out.table = information_table{std::move(dm)};
    return out;
}

}  // namespace granular
