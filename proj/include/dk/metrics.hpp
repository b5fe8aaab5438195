#ifndef DK_METRICS_HPP
#define DK_METRICS_HPP

#include <Eigen/Core>
#include <vector>

namespace dk {

/// Root mean squared error.
double rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

/// Mean of |pred - truth| / |truth|. Absolute values are used in both the
/// numerator and denominator; a zero truth entry is an error.
double mape(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

/// Mean absolute error.
double mae(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

/// Fraction of matching labels.
double accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

}  // namespace dk

#endif
