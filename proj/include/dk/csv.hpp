#ifndef DK_CSV_HPP
#define DK_CSV_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace dk {

/// In-memory comma-separated table. Header row required, UTF-8, '.' decimal.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column, -1 when absent.
    int column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Writes a numeric matrix with the given column names (full precision).
void write_matrix_csv(const std::string& path, const std::vector<std::string>& header,
                      const Eigen::MatrixXd& m);

/// Full round-trip formatting of a double.
std::string format_double(double v);

}  // namespace dk

#endif
