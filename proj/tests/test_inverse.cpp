#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "vicollage/galerkin.hpp"
#include "vicollage/inverse.hpp"

using namespace vicollage;
using test_helpers::random_pwpoly;

namespace {

const double kSqrt2 = std::sqrt(2.0);

PiecewisePoly paper_exact() { return PiecewisePoly::from_coeffs({-3.0, -2.0, 1.0}); }
ProblemSpec paper_problem() { return manufacture(paper_exact(), kSqrt2); }

} // namespace

TEST_CASE("residuals of the exact solution vanish at the true parameter") {
    const auto spec = paper_problem();
    const auto r = residuals(paper_exact(), spec.f, 31, Normalization::kFlat);
    for (int k = 0; k < 31; ++k) CHECK(std::abs(r.s(k) + kSqrt2 * r.t(k)) <= 1e-12);
}

TEST_CASE("Galerkin targets have zero residual on their own test space") {
    const auto spec = paper_problem();
    const int m = 7;
    const auto sol = solve_direct(spec, m, Normalization::kFlat);
    const auto r = residuals(sol.as_pwpoly, spec.f, m, Normalization::kFlat);
    for (int k = 0; k < m; ++k) CHECK(std::abs(r.s(k) + kSqrt2 * r.t(k)) <= 1e-12);
}

TEST_CASE("zero data gives zero residuals") {
    const auto zero = PiecewisePoly::constant(0.0);
    const auto r = residuals(zero, zero, 5, Normalization::kFlat);
    CHECK(r.s.cwiseAbs().maxCoeff() == 0.0);
    CHECK(r.t.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("residual affinity against direct recomputation") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> js(0.5, 5.0);
    const auto spec = paper_problem();
    for (int trial = 0; trial < 20; ++trial) {
        const auto y = random_pwpoly(rng);
        const int n = 7;
        const auto r = residuals(y, spec.f, n, Normalization::kFlat);
        const double j = js(rng);
        for (int k = 0; k < n; ++k) {
            const auto g = schauder_g(k + 3, Normalization::kFlat);
            const double direct =
                h1semi_inner(y, g) + j * l2_inner(y, g) - l2_inner(spec.f, g);
            CHECK(std::abs(direct - (r.s(k) + j * r.t(k))) <= 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("objective_abs_sum") {
    ResidualAffine zero{Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(4)};
    for (double j : {1.0, 2.5, 4.0}) CHECK(objective_abs_sum(zero, j) == 0.0);

    const auto spec = paper_problem();
    const auto sol = solve_direct(spec, 31, Normalization::kFlat);
    const auto r = residuals(sol.as_pwpoly, spec.f, 31, Normalization::kFlat);
    CHECK(objective_abs_sum(r, kSqrt2) <= 1e-11);

    // |A + jB| recomputed independently
    const double a = r.s.sum();
    const double b = r.t.sum();
    CHECK(objective_abs_sum(r, 2.0) == doctest::Approx(std::abs(a + 2.0 * b)).epsilon(1e-13));
}

TEST_CASE("objective_dual_norm") {
    const int n = 1;
    const Cholesky gram1(h1_gram(n, Normalization::kFlat));
    ResidualAffine r1{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1)};
    CHECK(objective_dual_norm(r1, gram1, 2.0) == 0.0);

    r1.s(0) = 3.0;
    const double g11 = h1_gram(1, Normalization::kFlat)(0, 0);
    CHECK(objective_dual_norm(r1, gram1, 2.0) ==
          doctest::Approx(3.0 / std::sqrt(g11)).epsilon(1e-13));

    // nested test spaces: dual norm nondecreasing in n
    const auto spec = paper_problem();
    const auto y = solve_direct(spec, 3, Normalization::kFlat).as_pwpoly;
    double prev = 0.0;
    for (int nn : {1, 3, 7, 15, 31, 63}) {
        const auto r = residuals(y, spec.f, nn, Normalization::kFlat);
        const Cholesky gram(h1_gram(nn, Normalization::kFlat));
        const double v = objective_dual_norm(r, gram, kSqrt2);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("collage_bound") {
    const auto spec = paper_problem();
    CHECK(collage_bound(paper_exact(), spec, 31, Normalization::kFlat) <= 1e-11);

    // bound = dual norm / min(1, j); halving rho doubles the bound for a
    // fixed residual vector
    const auto y = solve_direct(spec, 3, Normalization::kFlat).as_pwpoly;
    const int n = 15;
    const auto r = residuals(y, spec.f, n, Normalization::kFlat);
    const Cholesky gram(h1_gram(n, Normalization::kFlat));
    ProblemSpec half = spec;
    half.j = 0.5;
    CHECK(collage_bound(y, half, n, Normalization::kFlat) ==
          doctest::Approx(objective_dual_norm(r, gram, 0.5) / 0.5).epsilon(1e-13));
    ProblemSpec quarter = spec;
    quarter.j = 0.25;
    const double fixed_dual = objective_dual_norm(r, gram, 0.25);
    CHECK(fixed_dual / 0.25 == doctest::Approx(2.0 * (fixed_dual / 0.5)).epsilon(1e-14));
}

TEST_CASE("minimize_scalar") {
    auto quadratic = [](double j) { return (j - 2.0) * (j - 2.0); };
    const auto q = minimize_scalar(quadratic, 1.0, 4.0, 1e-8);
    CHECK(std::abs(q.j_star - 2.0) <= 1e-7);

    // V-shaped |A + jB|
    const double a = -3.0, b = 1.2;
    auto vee = [&](double j) { return std::abs(a + j * b); };
    const auto v = minimize_scalar(vee, 1.0, 4.0, 1e-8);
    CHECK(std::abs(v.j_star - (-a / b)) <= 1e-7);

    CHECK_THROWS_AS(minimize_scalar(quadratic, 4.0, 1.0, 1e-8), std::domain_error);
    CHECK_THROWS_AS(minimize_scalar(quadratic, 1.0, 4.0, 0.0), std::domain_error);
}

TEST_CASE("closed form minimizer of |A + jB|") {
    ResidualAffine r{Eigen::VectorXd(1), Eigen::VectorXd(1)};
    r.s(0) = -kSqrt2;
    r.t(0) = 1.0;
    const auto cf = minimize_closed_form_abs_sum(r, 1.0, 4.0);
    CHECK(cf.j_star == doctest::Approx(kSqrt2).epsilon(1e-15));
    CHECK(cf.value <= 1e-15);

    r.s(0) = 3.0;
    r.t(0) = 0.0;
    const auto flat = minimize_closed_form_abs_sum(r, 1.0, 4.0);
    CHECK(flat.j_star == 1.0);
    CHECK(flat.value == 3.0);
}

TEST_CASE("closed form and golden section agree") {
    const auto spec = paper_problem();
    for (int m : {3, 7, 15, 31}) {
        const auto y = solve_direct(spec, m, Normalization::kFlat).as_pwpoly;
        const auto r = residuals(y, spec.f, 31, Normalization::kFlat);
        const auto cf = minimize_closed_form_abs_sum(r, 1.0, 4.0);
        const auto gs = minimize_scalar([&](double j) { return objective_abs_sum(r, j); },
                                        1.0, 4.0, 1e-9);
        CHECK(std::abs(cf.j_star - gs.j_star) <= 1e-6);
    }
}

TEST_CASE("recover_parameter on the reference problem") {
    const auto spec = paper_problem();

    // exact recovery when the test space contains the target's space
    const auto u31 = solve_direct(spec, 31, Normalization::kFlat).as_pwpoly;
    const auto exact_cell = recover_parameter(u31, spec.f, 31, 1.0, 4.0,
                                              ObjectiveKind::kAbsSum,
                                              Normalization::kFlat, 1e-8, 31);
    CHECK(std::abs(exact_cell.j_star - kSqrt2) <= 1e-5);

    // reference cells for coarser targets, n = 31, flat normalization
    const auto u7 = solve_direct(spec, 7, Normalization::kFlat).as_pwpoly;
    const auto c7 = recover_parameter(u7, spec.f, 31, 1.0, 4.0,
                                      ObjectiveKind::kAbsSum, Normalization::kFlat);
    CHECK(std::abs(c7.j_star - 1.46679) <= 2e-3);

    const auto u15 = solve_direct(spec, 15, Normalization::kFlat).as_pwpoly;
    const auto c15 = recover_parameter(u15, spec.f, 31, 1.0, 4.0,
                                       ObjectiveKind::kAbsSum, Normalization::kFlat);
    CHECK(std::abs(c15.j_star - 1.43170) <= 2e-3);

    const auto u3 = solve_direct(spec, 3, Normalization::kFlat).as_pwpoly;
    const auto c3 = recover_parameter(u3, spec.f, 31, 1.0, 4.0,
                                      ObjectiveKind::kAbsSum, Normalization::kFlat);
    CHECK(std::abs(c3.j_star - 1.53389) <= 5e-3);

    // quality improves monotonically with the target resolution
    CHECK(std::abs(c3.j_star - kSqrt2) > std::abs(c7.j_star - kSqrt2));
    CHECK(std::abs(c7.j_star - kSqrt2) > std::abs(c15.j_star - kSqrt2));
    CHECK(std::abs(c15.j_star - kSqrt2) > std::abs(exact_cell.j_star - kSqrt2));
}

TEST_CASE("recover_parameter on an exact-solution target") {
    const auto spec = paper_problem();
    for (int n : {5, 31}) {
        const auto res = recover_parameter(paper_exact(), spec.f, n, 1.0, 4.0,
                                           ObjectiveKind::kAbsSum, Normalization::kFlat);
        CHECK(std::abs(res.j_star - kSqrt2) <= 1e-8);
    }
}

TEST_CASE("exact recovery whenever n <= m") {
    const auto spec = paper_problem();
    for (int m : {3, 7, 15, 31, 63}) {
        const auto y = solve_direct(spec, m, Normalization::kFlat).as_pwpoly;
        for (int n : {1, m / 2 + 1, m}) {
            const auto r = residuals(y, spec.f, n, Normalization::kFlat);
            if (std::abs(r.t.sum()) < 1e-10) continue; // degenerate draw
            const auto res = recover_parameter(y, spec.f, n, 1.0, 4.0,
                                               ObjectiveKind::kAbsSum,
                                               Normalization::kFlat);
            CHECK(std::abs(res.j_star - kSqrt2) <= 1e-6);
        }
    }
}

TEST_CASE("recovered parameter is clamped to the search range") {
    const auto spec = paper_problem();
    const auto y = solve_direct(spec, 15, Normalization::kFlat).as_pwpoly;
    const auto res = recover_parameter(y, spec.f, 15, 2.0, 4.0,
                                       ObjectiveKind::kAbsSum, Normalization::kFlat);
    CHECK(res.j_star == 2.0); // unclamped minimizer sqrt(2) lies below the range

    const auto dual = recover_parameter(y, spec.f, 15, 2.0, 4.0,
                                        ObjectiveKind::kDualNorm, Normalization::kFlat);
    CHECK(dual.j_star >= 2.0);
    CHECK(dual.j_star <= 4.0);
}

TEST_CASE("dual-norm recovery also finds the true parameter") {
    const auto spec = paper_problem();
    const auto y = solve_direct(spec, 31, Normalization::kFlat).as_pwpoly;
    const auto res = recover_parameter(y, spec.f, 31, 1.0, 4.0,
                                       ObjectiveKind::kDualNorm, Normalization::kFlat, 1e-9, 31);
    CHECK(std::abs(res.j_star - kSqrt2) <= 1e-5);
}
