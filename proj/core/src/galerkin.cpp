#include "vicollage/galerkin.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "vicollage/cholesky.hpp"

namespace vicollage {

GalerkinSolution solve_direct(const ProblemSpec& spec, int m, Normalization norm) {
    if (m < 1) throw std::domain_error("solve_direct: m must be >= 1");
    if (!(spec.j > 0.0)) throw std::domain_error("solve_direct: spec.j must be positive");

    const Eigen::MatrixXd a = system_matrix(m, spec.j, norm);
    const Eigen::VectorXd b = load(spec, m, norm);
    const Eigen::VectorXd c = Cholesky(a).solve(b);

    PiecewisePoly u = affine_lift(spec);
    const auto basis = h10_basis(m, norm);
    for (int k = 0; k < m; ++k) u = add(u, scale(basis[k], c(k)));

    return GalerkinSolution{spec, m, norm, c, std::move(u)};
}

ErrorNorms error_norms(const GalerkinSolution& sol, const PiecewisePoly& exact) {
    if (std::abs(exact(0.0) - sol.spec.alpha) > 1e-12 ||
        std::abs(exact(1.0) - sol.spec.beta) > 1e-12) {
        std::cerr << "warning: error_norms: exact solution boundary values differ "
                     "from the problem data\n";
    }
    const PiecewisePoly e = subtract(exact, sol.as_pwpoly);
    const double l2sq = l2_inner(e, e);
    const double h1ssq = h1semi_inner(e, e);
    return ErrorNorms{std::sqrt(l2sq), std::sqrt(h1ssq), std::sqrt(l2sq + h1ssq)};
}

ProblemSpec manufacture(const PiecewisePoly& u_exact, double j) {
    if (!(j > 0.0)) throw std::domain_error("manufacture: j must be positive");
    const PiecewisePoly f =
        add(negate(derivative(derivative(u_exact))), scale(u_exact, j));
    return ProblemSpec{u_exact(0.0), u_exact(1.0), j, f};
}

} // namespace vicollage
