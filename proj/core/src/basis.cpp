#include "vicollage/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace vicollage {

HaarIndex decompose(int k) {
    if (k < 2) throw std::domain_error("decompose: k must be >= 2 (h_1 is the constant)");
    int level = 0;
    while ((std::int64_t{1} << (level + 1)) <= k - 1) ++level;
    const int offset = k - 1 - (1 << level);
    return HaarIndex{k, level, offset};
}

namespace {

double amplitude(int level, Normalization norm) {
    return norm == Normalization::kFlat ? 1.0 : std::exp2(0.5 * level);
}

// assemble a piecewise polynomial on [0,1] from interior breakpoints and
// matching pieces, padding with zero pieces outside [first, last]
PiecewisePoly with_zero_extension(std::vector<Dyadic> inner,
                                  std::vector<std::vector<double>> pieces) {
    const Dyadic zero = Dyadic::make(0, 0);
    const Dyadic one = Dyadic::make(1, 0);
    if (!(inner.front() == zero)) {
        inner.insert(inner.begin(), zero);
        pieces.insert(pieces.begin(), {0.0});
    }
    if (!(inner.back() == one)) {
        inner.push_back(one);
        pieces.push_back({0.0});
    }
    return PiecewisePoly(std::move(inner), std::move(pieces));
}

} // namespace

PiecewisePoly haar(int k, Normalization norm) {
    if (k < 1) throw std::domain_error("haar: k must be >= 1");
    if (k == 1) return PiecewisePoly::constant(1.0);
    const HaarIndex idx = decompose(k);
    const double c = amplitude(idx.level, norm);
    const Dyadic a = Dyadic::make(idx.offset, idx.level);
    const Dyadic mid = Dyadic::make(2 * idx.offset + 1, idx.level + 1);
    const Dyadic b = Dyadic::make(idx.offset + 1, idx.level);
    return with_zero_extension({a, mid, b}, {{c}, {-c}});
}

PiecewisePoly schauder_g(int k, Normalization norm) {
    if (k < 1) throw std::domain_error("schauder_g: k must be >= 1");
    if (k == 1) return PiecewisePoly::constant(1.0);
    if (k == 2) return PiecewisePoly::from_coeffs({0.0, 1.0});
    const HaarIndex idx = decompose(k - 1);
    const double c = amplitude(idx.level, norm);
    const Dyadic a = Dyadic::make(idx.offset, idx.level);
    const Dyadic mid = Dyadic::make(2 * idx.offset + 1, idx.level + 1);
    const Dyadic b = Dyadic::make(idx.offset + 1, idx.level);
    // rising c*(x-a) then falling c*(b-x), peak c*2^-(level+1) at the midpoint
    return with_zero_extension({a, mid, b},
                               {{-c * a.value(), c}, {c * b.value(), -c}});
}

std::vector<PiecewisePoly> h10_basis(int m, Normalization norm) {
    if (m < 1) throw std::domain_error("h10_basis: m must be >= 1");
    std::vector<PiecewisePoly> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 3; k <= m + 2; ++k) out.push_back(schauder_g(k, norm));
    return out;
}

std::pair<Dyadic, Dyadic> schauder_support(int k) {
    if (k < 1) throw std::domain_error("schauder_support: k must be >= 1");
    if (k <= 2) return {Dyadic::make(0, 0), Dyadic::make(1, 0)};
    const HaarIndex idx = decompose(k - 1);
    return {Dyadic::make(idx.offset, idx.level), Dyadic::make(idx.offset + 1, idx.level)};
}

} // namespace vicollage
