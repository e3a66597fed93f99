#ifndef HDNN_TABLES_HPP
#define HDNN_TABLES_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "hdnn/dataset.hpp"
#include "hdnn/errors.hpp"

namespace hdnn {

/// Dataset-by-classifier grid of reals. Cells may be NaN, rendered empty.
struct Table {
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    std::vector<std::vector<double>> cells;

    std::size_t rows() const { return row_names.size(); }
    std::size_t cols() const { return col_names.size(); }

    double& at(std::size_t r, std::size_t c) { return cells[r][c]; }
    double at(std::size_t r, std::size_t c) const { return cells[r][c]; }
};

namespace detail {

inline std::string cell_full(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string cell_2dp(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

/// Full-precision CSV: header row, dataset name in the first column.
inline std::string to_csv(const Table& t) {
    std::string out = "dataset";
    for (const auto& c : t.col_names) out += "," + c;
    out += "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
        out += t.row_names[r];
        for (std::size_t c = 0; c < t.cols(); ++c)
            out += "," + detail::cell_full(t.at(r, c));
        out += "\n";
    }
    return out;
}

/// Aligned markdown table, two decimal places.
inline std::string to_markdown(const Table& t) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"dataset"};
    header.insert(header.end(), t.col_names.begin(), t.col_names.end());
    grid.push_back(header);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        std::vector<std::string> row{t.row_names[r]};
        for (std::size_t c = 0; c < t.cols(); ++c)
            row.push_back(detail::cell_2dp(t.at(r, c)));
        grid.push_back(std::move(row));
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        os << "|";
        for (std::size_t c = 0; c < row.size(); ++c)
            os << " " << std::setw(static_cast<int>(width[c])) << std::left
               << row[c] << " |";
        os << "\n";
    };
    emit(grid[0]);
    os << "|";
    for (std::size_t c = 0; c < width.size(); ++c)
        os << std::string(width[c] + 2, '-') << "|";
    os << "\n";
    for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
    return os.str();
}

/// Inverse of to_csv. Empty cells become NaN.
inline Table parse_table_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = detail::split_line(line, ',');
        if (!saw_header) {
            if (cells.size() < 2)
                throw FormatError("table: header needs at least one value column");
            for (std::size_t c = 1; c < cells.size(); ++c)
                t.col_names.push_back(detail::trim(cells[c]));
            saw_header = true;
            continue;
        }
        if (cells.size() != t.cols() + 1)
            throw FormatError("table: row " + std::to_string(lineno) + " has " +
                              std::to_string(cells.size()) + " columns, expected " +
                              std::to_string(t.cols() + 1));
        t.row_names.push_back(detail::trim(cells[0]));
        std::vector<double> row;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            const std::string s = detail::trim(cells[c]);
            row.push_back(s.empty() ? std::nan("")
                                    : detail::parse_cell(s, lineno - 1, c));
        }
        t.cells.push_back(std::move(row));
    }
    if (!saw_header || t.rows() == 0)
        throw FormatError("table: no data rows");
    return t;
}

} // namespace hdnn

#endif
