#ifndef VICOLLAGE_INVERSE_HPP
#define VICOLLAGE_INVERSE_HPP

#include <Eigen/Dense>
#include <functional>

#include "vicollage/assembly.hpp"
#include "vicollage/cholesky.hpp"

namespace vicollage {

/// Residuals of a target y against the test functions g_3..g_{n+2} are
/// affine in the parameter: r_k(j) = s_k + j t_k with
///   s_k = int y' g'_{k+2} - int f g_{k+2},   t_k = int y g_{k+2}.
struct ResidualAffine {
    Eigen::VectorXd s;
    Eigen::VectorXd t;
    int n() const { return static_cast<int>(s.size()); }
    Eigen::VectorXd at(double j) const { return s + j * t; }
};

enum class ObjectiveKind { kAbsSum, kDualNorm };

struct InverseResult {
    double j_star;
    double objective_value;
    ObjectiveKind objective_kind;
    int n;
    int m; // resolution of the target, 0 if not a Galerkin approximant
    Normalization norm;
    double j_lo;
    double j_hi;
};

ResidualAffine residuals(const PiecewisePoly& y, const PiecewisePoly& f, int n,
                         Normalization norm);

/// |sum_k r_k(j)| = |A + jB|; terms summed left to right in k.
double objective_abs_sum(const ResidualAffine& r, double j);

/// Discrete dual norm sqrt(r(j)^T G^{-1} r(j)) over span{g_3..g_{n+2}},
/// G the H1 Gram matrix of the test functions. The factorization is built
/// once by the caller and reused across j.
double objective_dual_norm(const ResidualAffine& r, const Cholesky& gram, double j);

/// H1 Gram matrix S + M of the first n test functions.
Eigen::MatrixXd h1_gram(int n, Normalization norm);

/// Collage stability bound: dual residual norm divided by the coercivity
/// constant rho_j = min(1, j). Dominates the H1 distance from y to the
/// solution at parameter spec.j.
double collage_bound(const PiecewisePoly& y, const ProblemSpec& spec, int n,
                     Normalization norm);

struct ScalarMin {
    double j_star;
    double value;
};

/// Coarse 129-point grid scan (ties toward smaller j) followed by
/// golden-section refinement to bracket width <= tol.
ScalarMin minimize_scalar(const std::function<double(double)>& obj, double j_lo,
                          double j_hi, double tol);

/// Exact minimizer of |A + jB| on [j_lo, j_hi]; ties toward smaller j.
ScalarMin minimize_closed_form_abs_sum(const ResidualAffine& r, double j_lo,
                                       double j_hi);

InverseResult recover_parameter(const PiecewisePoly& y, const PiecewisePoly& f,
                                int n, double j_lo, double j_hi,
                                ObjectiveKind kind, Normalization norm,
                                double tol = 1e-8, int target_m = 0);

} // namespace vicollage

#endif
