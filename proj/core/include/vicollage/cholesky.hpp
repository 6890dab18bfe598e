#ifndef VICOLLAGE_CHOLESKY_HPP
#define VICOLLAGE_CHOLESKY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace vicollage {

/// Thrown when a matrix expected to be SPD produces a nonpositive pivot.
struct FactorizationError : std::runtime_error {
    FactorizationError(int pivot_index, double pivot_value)
        : std::runtime_error("Cholesky factorization failed at pivot " +
                             std::to_string(pivot_index) + " (value " +
                             std::to_string(pivot_value) + ")"),
          pivot(pivot_index) {}
    int pivot;
};

/// Unpivoted Cholesky A = L L^T for the small dense SPD systems used here.
/// Deterministic and reports the failing pivot index on non-SPD input.
class Cholesky {
public:
    explicit Cholesky(const Eigen::MatrixXd& a) : l_(a.rows(), a.cols()) {
        const int n = static_cast<int>(a.rows());
        l_.setZero();
        for (int j = 0; j < n; ++j) {
            double d = a(j, j);
            for (int k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
            if (!(d > 0.0)) throw FactorizationError(j, d);
            l_(j, j) = std::sqrt(d);
            for (int i = j + 1; i < n; ++i) {
                double s = a(i, j);
                for (int k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
                l_(i, j) = s / l_(j, j);
            }
        }
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
        const int n = static_cast<int>(l_.rows());
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) {
            double s = b(i);
            for (int k = 0; k < i; ++k) s -= l_(i, k) * y(k);
            y(i) = s / l_(i, i);
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y(i);
            for (int k = i + 1; k < n; ++k) s -= l_(k, i) * y(k);
            y(i) = s / l_(i, i);
        }
        return y;
    }

    int size() const { return static_cast<int>(l_.rows()); }

private:
    Eigen::MatrixXd l_;
};

} // namespace vicollage

#endif
