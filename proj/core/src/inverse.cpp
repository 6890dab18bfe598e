#include "vicollage/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vicollage {

ResidualAffine residuals(const PiecewisePoly& y, const PiecewisePoly& f, int n,
                         Normalization norm) {
    if (n < 1) throw std::domain_error("residuals: n must be >= 1");
    const PiecewisePoly dy = derivative(y);
    ResidualAffine r{Eigen::VectorXd(n), Eigen::VectorXd(n)};
    for (int k = 0; k < n; ++k) {
        const PiecewisePoly g = schauder_g(k + 3, norm);
        r.s(k) = integrate(multiply(dy, derivative(g))) - integrate(multiply(f, g));
        r.t(k) = integrate(multiply(y, g));
    }
    return r;
}

double objective_abs_sum(const ResidualAffine& r, double j) {
    double a = 0.0, b = 0.0;
    for (int k = 0; k < r.n(); ++k) {
        a += r.s(k);
        b += r.t(k);
    }
    return std::abs(a + j * b);
}

double objective_dual_norm(const ResidualAffine& r, const Cholesky& gram, double j) {
    if (gram.size() != r.n())
        throw std::invalid_argument("objective_dual_norm: Gram size does not match residual count");
    const Eigen::VectorXd rj = r.at(j);
    return std::sqrt(rj.dot(gram.solve(rj)));
}

Eigen::MatrixXd h1_gram(int n, Normalization norm) {
    return stiffness(n, norm) + mass(n, norm);
}

double collage_bound(const PiecewisePoly& y, const ProblemSpec& spec, int n,
                     Normalization norm) {
    if (!(spec.j > 0.0)) throw std::domain_error("collage_bound: spec.j must be positive");
    const ResidualAffine r = residuals(y, spec.f, n, norm);
    const Cholesky gram(h1_gram(n, norm));
    const double rho = std::min(1.0, spec.j);
    return objective_dual_norm(r, gram, spec.j) / rho;
}

ScalarMin minimize_scalar(const std::function<double(double)>& obj, double j_lo,
                          double j_hi, double tol) {
    if (!(j_lo < j_hi)) throw std::domain_error("minimize_scalar: need j_lo < j_hi");
    if (!(tol > 0.0)) throw std::domain_error("minimize_scalar: need tol > 0");

    constexpr int kGridPoints = 129;
    int best = 0;
    double best_val = obj(j_lo);
    for (int i = 1; i < kGridPoints; ++i) {
        const double j = j_lo + (j_hi - j_lo) * i / (kGridPoints - 1);
        const double v = obj(j);
        if (v < best_val) { // strict: ties stay at the smaller j
            best_val = v;
            best = i;
        }
    }
    const double h = (j_hi - j_lo) / (kGridPoints - 1);
    double a = j_lo + h * std::max(0, best - 1);
    double b = j_lo + h * std::min(kGridPoints - 1, best + 1);

    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = obj(x1);
    double f2 = obj(x2);
    while (b - a > tol) {
        if (f1 <= f2) { // ties shrink toward smaller j
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = obj(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = obj(x2);
        }
    }
    const double j_star = 0.5 * (a + b);
    return ScalarMin{j_star, obj(j_star)};
}

ScalarMin minimize_closed_form_abs_sum(const ResidualAffine& r, double j_lo,
                                       double j_hi) {
    double a = 0.0, b = 0.0;
    for (int k = 0; k < r.n(); ++k) {
        a += r.s(k);
        b += r.t(k);
    }
    if (b == 0.0) return ScalarMin{j_lo, std::abs(a)};
    const double j_star = std::clamp(-a / b, j_lo, j_hi);
    return ScalarMin{j_star, std::abs(a + j_star * b)};
}

InverseResult recover_parameter(const PiecewisePoly& y, const PiecewisePoly& f,
                                int n, double j_lo, double j_hi,
                                ObjectiveKind kind, Normalization norm,
                                double tol, int target_m) {
    if (n < 1) throw std::domain_error("recover_parameter: n must be >= 1");
    if (!(j_lo < j_hi)) throw std::domain_error("recover_parameter: need j_lo < j_hi");
    const ResidualAffine r = residuals(y, f, n, norm);

    ScalarMin min{};
    if (kind == ObjectiveKind::kAbsSum) {
        min = minimize_closed_form_abs_sum(r, j_lo, j_hi);
    } else {
        const Cholesky gram(h1_gram(n, norm));
        min = minimize_scalar(
            [&](double j) { return objective_dual_norm(r, gram, j); }, j_lo, j_hi, tol);
    }
    return InverseResult{min.j_star, min.value, kind, n, target_m, norm, j_lo, j_hi};
}

} // namespace vicollage
