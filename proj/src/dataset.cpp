#include "dk/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "dk/csv.hpp"
#include "dk/errors.hpp"
#include "dk/rng.hpp"

namespace dk {

void SpatialDataset::validate() const {
    if (locations.rows() < 1) throw std::invalid_argument("dataset: N must be >= 1");
    if (dim() < 1 || dim() > 3) throw std::invalid_argument("dataset: d must be 1, 2 or 3");
    if (responses.size() != locations.rows())
        throw std::invalid_argument("dataset: response length must match location count");
    if (covariates.size() > 0 && covariates.rows() != locations.rows())
        throw std::invalid_argument("dataset: covariate rows must match location count");
    if (!locations.allFinite() || !responses.allFinite() ||
        (covariates.size() > 0 && !covariates.allFinite()))
        throw std::invalid_argument("dataset: all values must be finite");
}

SpatialDataset SpatialDataset::subset(const std::vector<int>& indices) const {
    SpatialDataset out;
    const auto n = static_cast<Eigen::Index>(indices.size());
    out.locations.resize(n, locations.cols());
    out.responses.resize(n);
    out.covariates.resize(n, covariates.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        const int r = indices[static_cast<std::size_t>(i)];
        out.locations.row(i) = locations.row(r);
        out.responses(i) = responses(r);
        if (covariates.cols() > 0) out.covariates.row(i) = covariates.row(r);
    }
    out.covariate_names = covariate_names;
    return out;
}

Eigen::MatrixXd Scaler::transform(const Eigen::MatrixXd& m) const {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double span = col_max(c) - col_min(c);
        if (span == 0.0)
            out.col(c).setZero();
        else
            out.col(c) = (m.col(c).array() - col_min(c)) / span;
    }
    return out;
}

Eigen::MatrixXd Scaler::inverse(const Eigen::MatrixXd& m) const {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double span = col_max(c) - col_min(c);
        out.col(c) = m.col(c).array() * span + col_min(c);
    }
    return out;
}

std::pair<Eigen::MatrixXd, Scaler> min_max_normalize(const Eigen::MatrixXd& m) {
    if (!m.allFinite()) throw std::invalid_argument("min_max_normalize: input must be finite");
    Scaler s;
    s.col_min = m.colwise().minCoeff();
    s.col_max = m.colwise().maxCoeff();
    return {s.transform(m), s};
}

std::vector<int> FoldAssignment::test_indices(int fold) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < fold_of.size(); ++i)
        if (fold_of[i] == fold) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> FoldAssignment::train_indices(int fold) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < fold_of.size(); ++i)
        if (fold_of[i] != fold) out.push_back(static_cast<int>(i));
    return out;
}

FoldAssignment kfold_split(int n, int k, std::uint64_t seed) {
    if (k < 2 || k > n) throw std::invalid_argument("kfold_split: need 2 <= k <= n");
    Rng rng = Rng::stream(seed, "kfold");
    std::vector<int> perm = rng.permutation(n);
    FoldAssignment fa;
    fa.k = k;
    fa.fold_of.assign(static_cast<std::size_t>(n), 0);
    // First n % k folds get one extra member.
    int pos = 0;
    for (int f = 0; f < k; ++f) {
        int size = n / k + (f < n % k ? 1 : 0);
        for (int j = 0; j < size; ++j)
            fa.fold_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos++)])] = f;
    }
    return fa;
}

namespace {

double parse_cell(const std::string& cell, const std::string& column, std::size_t row) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    // Trailing spaces are tolerated, anything else is a hard error.
    while (end && (*end == ' ' || *end == '\t')) ++end;
    const char* p = begin;
    while (*p == ' ' || *p == '\t') ++p;
    if (cell.empty() || end == begin || (end && *end != '\0') || p == end)
        throw io_error("non-numeric cell in column '" + column + "' at data row " +
                       std::to_string(row));
    if (!std::isfinite(v))
        throw io_error("non-finite cell in column '" + column + "' at data row " +
                       std::to_string(row));
    return v;
}

}  // namespace

SpatialDataset load_csv(const std::string& path, const CsvSchema& schema) {
    if (schema.coordinates.empty())
        throw config_error("CSV schema: at least one coordinate column required");
    CsvTable table = read_csv(path);

    auto require_column = [&](const std::string& name) {
        int idx = table.column(name);
        if (idx < 0) throw io_error("CSV schema: column '" + name + "' not found in " + path);
        return idx;
    };

    std::vector<int> coord_idx;
    for (const auto& c : schema.coordinates) coord_idx.push_back(require_column(c));
    int resp_idx = schema.response.empty() ? -1 : require_column(schema.response);
    std::vector<int> covar_idx;
    for (const auto& c : schema.covariates) covar_idx.push_back(require_column(c));

    const auto n = static_cast<Eigen::Index>(table.rows.size());
    if (n < 1) throw io_error("CSV has no data rows: " + path);

    SpatialDataset data;
    data.locations.resize(n, static_cast<Eigen::Index>(coord_idx.size()));
    data.responses = Eigen::VectorXd::Zero(n);
    data.covariates.resize(n, static_cast<Eigen::Index>(covar_idx.size()));
    data.covariate_names = schema.covariates;

    for (Eigen::Index r = 0; r < n; ++r) {
        const auto& row = table.rows[static_cast<std::size_t>(r)];
        auto cell = [&](int col, const std::string& name) -> double {
            if (col >= static_cast<int>(row.size()))
                throw io_error("short row " + std::to_string(r) + " in " + path);
            return parse_cell(row[static_cast<std::size_t>(col)], name, static_cast<std::size_t>(r));
        };
        for (std::size_t j = 0; j < coord_idx.size(); ++j)
            data.locations(r, static_cast<Eigen::Index>(j)) =
                cell(coord_idx[j], schema.coordinates[j]);
        if (resp_idx >= 0) data.responses(r) = cell(resp_idx, schema.response);
        for (std::size_t j = 0; j < covar_idx.size(); ++j)
            data.covariates(r, static_cast<Eigen::Index>(j)) =
                cell(covar_idx[j], schema.covariates[j]);
    }
    data.validate();
    return data;
}

void save_csv(const std::string& path, const SpatialDataset& data) {
    std::vector<std::string> header;
    for (int j = 0; j < data.dim(); ++j) header.push_back("s" + std::to_string(j + 1));
    header.push_back("z");
    for (int j = 0; j < data.covariate_count(); ++j)
        header.push_back(j < static_cast<int>(data.covariate_names.size())
                             ? data.covariate_names[static_cast<std::size_t>(j)]
                             : "x" + std::to_string(j + 1));

    std::vector<std::vector<std::string>> rows;
    rows.reserve(static_cast<std::size_t>(data.size()));
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < data.dim(); ++j) row.push_back(format_double(data.locations(i, j)));
        row.push_back(format_double(data.responses(i)));
        for (int j = 0; j < data.covariate_count(); ++j)
            row.push_back(format_double(data.covariates(i, j)));
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

GridMatch grid_match(const SpatialDataset& stations, const SpatialDataset& grid) {
    if (stations.size() < 1) throw std::invalid_argument("grid_match: empty station set");
    if (stations.dim() != grid.dim())
        throw std::invalid_argument("grid_match: dimension mismatch between stations and grid");

    GridMatch out;
    out.cell_of_station.resize(static_cast<std::size_t>(stations.size()));
    for (Eigen::Index i = 0; i < stations.size(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (Eigen::Index g = 0; g < grid.size(); ++g) {
            double d = (stations.locations.row(i) - grid.locations.row(g)).squaredNorm();
            if (d < best_d) {  // strict: equidistant cells keep the smaller index
                best_d = d;
                best = static_cast<int>(g);
            }
        }
        out.cell_of_station[static_cast<std::size_t>(i)] = best;
    }

    std::map<int, std::pair<double, int>> acc;  // grid row -> (sum z, count)
    for (Eigen::Index i = 0; i < stations.size(); ++i) {
        auto& slot = acc[out.cell_of_station[static_cast<std::size_t>(i)]];
        slot.first += stations.responses(i);
        slot.second += 1;
    }

    const auto m = static_cast<Eigen::Index>(acc.size());
    out.cells.locations.resize(m, grid.dim());
    out.cells.responses.resize(m);
    out.cells.covariates.resize(m, grid.covariates.cols());
    out.cells.covariate_names = grid.covariate_names;
    Eigen::Index r = 0;
    for (const auto& [g, slot] : acc) {
        out.cells.locations.row(r) = grid.locations.row(g);
        out.cells.responses(r) = slot.first / slot.second;
        if (grid.covariates.cols() > 0) out.cells.covariates.row(r) = grid.covariates.row(g);
        out.grid_index.push_back(g);
        out.station_count.push_back(slot.second);
        ++r;
    }
    return out;
}

}  // namespace dk
