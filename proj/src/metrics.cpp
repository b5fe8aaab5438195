#include "dk/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace dk {

namespace {
void check_lengths(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const char* what) {
    if (a.size() != b.size() || a.size() < 1)
        throw std::invalid_argument(std::string(what) + ": length mismatch");
}
}  // namespace

double rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
    check_lengths(pred, truth, "rmse");
    return std::sqrt((pred - truth).squaredNorm() / static_cast<double>(pred.size()));
}

double mape(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
    check_lengths(pred, truth, "mape");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < pred.size(); ++i) {
        if (truth(i) == 0.0) throw std::invalid_argument("mape: zero truth entry");
        acc += std::fabs(pred(i) - truth(i)) / std::fabs(truth(i));
    }
    return acc / static_cast<double>(pred.size());
}

double mae(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
    check_lengths(pred, truth, "mae");
    return (pred - truth).cwiseAbs().mean();
}

double accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
    if (pred.size() != truth.size() || pred.empty())
        throw std::invalid_argument("accuracy: length mismatch");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == truth[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(pred.size());
}

}  // namespace dk
