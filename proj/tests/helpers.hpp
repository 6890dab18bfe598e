#ifndef VICOLLAGE_TESTS_HELPERS_HPP
#define VICOLLAGE_TESTS_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "vicollage/pwpoly.hpp"

namespace test_helpers {

using vicollage::Dyadic;
using vicollage::PiecewisePoly;

/// Hat with breakpoints {0, 1/2, 1}, pieces {x, 1-x}.
inline PiecewisePoly unit_hat() {
    return PiecewisePoly({Dyadic::make(0, 0), Dyadic::make(1, 1), Dyadic::make(1, 0)},
                         {{0.0, 1.0}, {1.0, -1.0}});
}

/// Random piecewise polynomial on a random dyadic level-3 grid,
/// degree <= 3, coefficients in [-10, 10].
inline PiecewisePoly random_pwpoly(std::mt19937& rng, bool continuous = false) {
    std::uniform_real_distribution<double> coeff(-10.0, 10.0);
    std::uniform_int_distribution<int> degree(0, 3);
    std::bernoulli_distribution keep(0.5);

    std::vector<Dyadic> breaks{Dyadic::make(0, 0)};
    for (int i = 1; i < 8; ++i)
        if (keep(rng)) breaks.push_back(Dyadic::make(i, 3));
    breaks.push_back(Dyadic::make(1, 0));

    std::vector<std::vector<double>> pieces;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        std::vector<double> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (double& v : c) v = coeff(rng);
        pieces.push_back(std::move(c));
    }

    if (continuous) {
        // shift each piece's constant so values agree at the breakpoints
        auto eval_piece = [](const std::vector<double>& c, double x) {
            double r = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
            return r;
        };
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            const double x = breaks[i].value();
            pieces[i][0] += eval_piece(pieces[i - 1], x) - eval_piece(pieces[i], x);
        }
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces));
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace test_helpers

#endif
