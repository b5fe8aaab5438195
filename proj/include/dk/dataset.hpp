#ifndef DK_DATASET_HPP
#define DK_DATASET_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace dk {

/// Locations, responses and covariates observed at N sites.
///
/// `covariates` may have zero columns; its row count always matches
/// `locations`. Instances are immutable by convention after construction and
/// safe to share across threads.
struct SpatialDataset {
    Eigen::MatrixXd locations;              // N x d
    Eigen::VectorXd responses;              // N (zeros when the source had none)
    Eigen::MatrixXd covariates;             // N x P, P >= 0
    std::vector<std::string> covariate_names;

    Eigen::Index size() const { return locations.rows(); }
    int dim() const { return static_cast<int>(locations.cols()); }
    int covariate_count() const { return static_cast<int>(covariates.cols()); }

    /// Enforces finiteness, N >= 1, d in {1,2,3} and row-count agreement.
    void validate() const;

    /// Row subset in the given order.
    SpatialDataset subset(const std::vector<int>& indices) const;
};

/// Per-column min/max recorded by min_max_normalize for inverse mapping.
struct Scaler {
    Eigen::VectorXd col_min;
    Eigen::VectorXd col_max;

    Eigen::MatrixXd transform(const Eigen::MatrixXd& m) const;
    Eigen::MatrixXd inverse(const Eigen::MatrixXd& m) const;
};

/// Maps each column to (x - min)/(max - min); constant columns map to zeros.
std::pair<Eigen::MatrixXd, Scaler> min_max_normalize(const Eigen::MatrixXd& m);

/// k-fold assignment over [0, n); folds are non-empty and their sizes differ
/// by at most one.
struct FoldAssignment {
    std::vector<int> fold_of;  // length n, values in [0, k)
    int k = 0;

    std::vector<int> test_indices(int fold) const;
    std::vector<int> train_indices(int fold) const;
};

FoldAssignment kfold_split(int n, int k, std::uint64_t seed);

/// Column roles for CSV ingestion. `response` may be empty (no response
/// column, e.g. covariate grids); `covariates` may be empty.
struct CsvSchema {
    std::vector<std::string> coordinates;
    std::string response;
    std::vector<std::string> covariates;
};

/// Loads a dataset from CSV. Every declared column must exist and every
/// declared cell must parse as a number; violations are hard errors that
/// name the column or row.
SpatialDataset load_csv(const std::string& path, const CsvSchema& schema);

/// Writes a dataset with columns s1..sd, z, then covariates.
void save_csv(const std::string& path, const SpatialDataset& data);

/// Result of matching stations onto a covariate grid: one row per occupied
/// cell, responses averaged over its stations, covariates taken from the grid.
struct GridMatch {
    SpatialDataset cells;
    std::vector<int> cell_of_station;  // grid row index per station
    std::vector<int> station_count;    // per occupied cell, aligned with cells
    std::vector<int> grid_index;       // grid row index per occupied cell
};

/// Assigns each station to its nearest grid point (ties break toward the
/// smaller grid row index) and averages co-assigned responses.
GridMatch grid_match(const SpatialDataset& stations, const SpatialDataset& grid);

}  // namespace dk

#endif
