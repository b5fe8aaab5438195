#include "dk/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dk/errors.hpp"

namespace dk {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open CSV file: " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw io_error("empty CSV file: " + path);
    table.header = split_line(strip_cr(line));
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        table.rows.push_back(split_line(line));
    }
    return table;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write CSV file: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
}

void write_matrix_csv(const std::string& path, const std::vector<std::string>& header,
                      const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write CSV file: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << format_double(m(r, c)) << (c + 1 < m.cols() ? "," : "\n");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace dk
