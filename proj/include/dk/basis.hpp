#ifndef DK_BASIS_HPP
#define DK_BASIS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace dk {

enum class KernelKind { wendland, gaussian };

/// Axis-aligned box, one [lo, hi] per coordinate axis.
struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    int dim() const { return static_cast<int>(lo.size()); }
};

/// Multi-resolution lattice of radial basis knots.
///
/// Level h places (9*2^(h-1)+1)^d knots on a regular lattice spanning the
/// domain box (endpoints included). Distances are computed after each axis is
/// affinely mapped to [0,1], and the level scale is 2.5 knot spacings in
/// those unit coordinates, so anisotropic boxes see isotropic kernels.
struct BasisSystem {
    int dim = 1;
    int levels = 1;
    KernelKind kernel = KernelKind::wendland;
    Box domain;
    std::vector<Eigen::MatrixXd> knots_unit;  // per level, K_h x d in [0,1]^d
    std::vector<double> theta;                // per level, unit-box scale

    /// Total knot count over all levels.
    int total_knots() const;
};

/// Compactly supported Wendland correlation: (1-t)^6 (35 t^2 + 18 t + 3)/3
/// on [0,1], zero beyond.
double wendland(double t);

/// exp(-t^2).
double gaussian_kernel(double t);

/// Level count heuristic max(1, 1 + ceil(log2(n^(1/d)/10))).
int num_levels(int n, int d);

/// Knot lattice for one level: (9*2^(level-1)+1)^d points spanning `box`
/// inclusive of endpoints, plus the unit-box scale 2.5/(per-axis count - 1).
std::pair<Eigen::MatrixXd, double> knot_grid(int level, const Box& box, int d);

/// Smallest box containing all rows of `locations`, expanded by one level-1
/// knot spacing (width/9) per side so boundary sites keep full kernel support.
Box auto_domain(const Eigen::MatrixXd& locations);

BasisSystem make_basis_system(const Box& domain, int levels, KernelKind kernel);

/// Evaluated basis matrix with all-zero columns removed.
struct EmbeddingMatrix {
    Eigen::MatrixXd values;         // N x K'
    std::vector<int> kept_columns;  // K' indices into the original K columns
    int k_original = 0;
};

/// Evaluates every basis function at every location and prunes columns whose
/// absolute value never exceeds 1e-12.
EmbeddingMatrix embed(const Eigen::MatrixXd& locations, const BasisSystem& system);

/// Evaluates only the given original-column subset (prediction-time reuse of
/// a training-time pruning mask).
Eigen::MatrixXd embed_columns(const Eigen::MatrixXd& locations, const BasisSystem& system,
                              const std::vector<int>& kept_columns);

/// Covariates first, basis columns after.
Eigen::MatrixXd concat_features(const Eigen::MatrixXd& x, const EmbeddingMatrix& phi);

}  // namespace dk

#endif
