#pragma once

#include <random>

#include <Eigen/Dense>

namespace test_util {

// Fixed-seed generator so every run sees the same samples.
inline std::mt19937 rng(unsigned seed = 20240811u) {
    return std::mt19937{seed};
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace test_util
