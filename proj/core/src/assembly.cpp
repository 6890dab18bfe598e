#include "vicollage/assembly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace vicollage {

PiecewisePoly affine_lift(double alpha, double beta) {
    return PiecewisePoly::from_coeffs({alpha, beta - alpha});
}

namespace {

bool supports_overlap(int k1, int k2) {
    const auto [a1, b1] = schauder_support(k1);
    const auto [a2, b2] = schauder_support(k2);
    const Dyadic lo = a1 < a2 ? a2 : a1;
    const Dyadic hi = b1 < b2 ? b1 : b2;
    return lo < hi;
}

struct CacheKey {
    int m;
    Normalization norm;
    auto operator<=>(const CacheKey&) const = default;
};

struct Matrices {
    Eigen::MatrixXd s;
    Eigen::MatrixXd m;
};

Matrices assemble(int m, Normalization norm) {
    auto basis = h10_basis(m, norm);
    std::vector<PiecewisePoly> dbasis;
    dbasis.reserve(basis.size());
    for (const auto& g : basis) dbasis.push_back(derivative(g));

    Matrices out{Eigen::MatrixXd::Zero(m, m), Eigen::MatrixXd::Zero(m, m)};
    for (int i = 0; i < m; ++i) {
        for (int k = i; k < m; ++k) {
            if (!supports_overlap(i + 3, k + 3)) continue;
            const double s = integrate(multiply(dbasis[i], dbasis[k]));
            const double mm = integrate(multiply(basis[i], basis[k]));
            out.s(i, k) = out.s(k, i) = s;
            out.m(i, k) = out.m(k, i) = mm;
        }
    }
    return out;
}

// (m, norm) -> (S, M), filled once, read concurrently afterwards
std::shared_ptr<const Matrices> cached(int m, Normalization norm) {
    static std::mutex mu;
    static std::map<CacheKey, std::shared_ptr<const Matrices>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({m, norm}); it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const Matrices>(assemble(m, norm));
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace(CacheKey{m, norm}, std::move(value));
    return it->second;
}

} // namespace

Eigen::MatrixXd stiffness(int m, Normalization norm) {
    if (m < 1) throw std::domain_error("stiffness: m must be >= 1");
    return cached(m, norm)->s;
}

Eigen::MatrixXd mass(int m, Normalization norm) {
    if (m < 1) throw std::domain_error("mass: m must be >= 1");
    return cached(m, norm)->m;
}

Eigen::VectorXd load(const ProblemSpec& spec, int m, Normalization norm) {
    if (m < 1) throw std::domain_error("load: m must be >= 1");
    const PiecewisePoly u0 = affine_lift(spec);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
        const PiecewisePoly g = schauder_g(i + 3, norm);
        const double mean_term = integrate(derivative(g));
        b(i) = integrate(multiply(spec.f, g)) - (spec.beta - spec.alpha) * mean_term -
               spec.j * integrate(multiply(u0, g));
    }
    return b;
}

Eigen::MatrixXd system_matrix(int m, double j, Normalization norm) {
    if (!(j > 0.0)) throw std::domain_error("system_matrix: j must be positive");
    const auto mats = cached(m, norm);
    return mats->s + j * mats->m;
}

} // namespace vicollage
