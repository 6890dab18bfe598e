#ifndef VICOLLAGE_GALERKIN_HPP
#define VICOLLAGE_GALERKIN_HPP

#include <Eigen/Dense>

#include "vicollage/assembly.hpp"

namespace vicollage {

/// Galerkin approximation u_m = u0 + sum_k c_k g_{k+2} over H_m.
/// The affine lift carries the boundary data, so u_m(0) = alpha and
/// u_m(1) = beta hold exactly.
struct GalerkinSolution {
    ProblemSpec spec;
    int m;
    Normalization norm;
    Eigen::VectorXd coeffs;
    PiecewisePoly as_pwpoly;
};

struct ErrorNorms {
    double l2;
    double h1semi;
    double h1;
};

/// Solves (S + jM)c = b by Cholesky; throws FactorizationError on
/// numerical degeneracy, naming the offending pivot.
GalerkinSolution solve_direct(const ProblemSpec& spec, int m, Normalization norm);

/// L2, H1-seminorm and H1 norms of exact - u_m, all integrals exact.
/// Warns on stderr (does not fail) if the boundary values disagree.
ErrorNorms error_norms(const GalerkinSolution& sol, const PiecewisePoly& exact);

/// Manufactured problem: given u and j, returns
/// (alpha = u(0), beta = u(1), j, f = -u'' + j u).
ProblemSpec manufacture(const PiecewisePoly& u_exact, double j);

} // namespace vicollage

#endif
