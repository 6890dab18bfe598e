#ifndef VICOLLAGE_ASSEMBLY_HPP
#define VICOLLAGE_ASSEMBLY_HPP

#include <Eigen/Dense>

#include "vicollage/basis.hpp"
#include "vicollage/pwpoly.hpp"

namespace vicollage {

/// Two-point boundary value problem -u'' + j u = f on (0,1),
/// u(0) = alpha, u(1) = beta, with parameter j > 0.
struct ProblemSpec {
    double alpha;
    double beta;
    double j;
    PiecewisePoly f;
};

/// The affine function alpha + (beta - alpha) x carrying the boundary data.
PiecewisePoly affine_lift(double alpha, double beta);
inline PiecewisePoly affine_lift(const ProblemSpec& spec) {
    return affine_lift(spec.alpha, spec.beta);
}

/// S_ik = int g'_{i+2} g'_{k+2}; diagonal (identity under L2 normalization).
/// Results for (m, norm) are cached and shared; treat them as read-only.
Eigen::MatrixXd stiffness(int m, Normalization norm);

/// M_ik = int g_{i+2} g_{k+2}, assembled exactly with support-overlap skipping.
Eigen::MatrixXd mass(int m, Normalization norm);

/// Load vector of the homogenized problem:
/// b_i = int f g_{i+2} - (beta-alpha) int g'_{i+2} - j int u0 g_{i+2}.
/// The middle term is zero (Haar wavelets have zero mean) but is computed,
/// not assumed.
Eigen::VectorXd load(const ProblemSpec& spec, int m, Normalization norm);

/// S + jM, the Galerkin matrix of a_j; positive definite for j > 0.
Eigen::MatrixXd system_matrix(int m, double j, Normalization norm);

} // namespace vicollage

#endif
