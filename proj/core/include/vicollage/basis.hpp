#ifndef VICOLLAGE_BASIS_HPP
#define VICOLLAGE_BASIS_HPP

#include <vector>

#include "vicollage/pwpoly.hpp"

namespace vicollage {

/// Level/offset decomposition of the Haar index k >= 2:
/// k = 2^level + offset + 1, support of h_k is [offset 2^-level, (offset+1) 2^-level].
struct HaarIndex {
    int k;
    int level;
    int offset;
};

/// FLAT: h_k takes values +-1 on its support.
/// L2:   h_k takes values +-2^(level/2), so ||h_k||_L2 = 1.
enum class Normalization { kFlat, kL2 };

HaarIndex decompose(int k);

/// h_1 is the constant 1; h_k for k >= 2 is the square wave on its dyadic support.
PiecewisePoly haar(int k, Normalization norm);

/// Integrated Haar system: g_1 = 1, g_k(x) = int_0^x h_{k-1} for k >= 2.
/// g_2 is the identity; g_k for k >= 3 is a hat vanishing at 0 and 1.
PiecewisePoly schauder_g(int k, Normalization norm);

/// [g_3, ..., g_{m+2}], a basis of the m-dimensional subspace H_m of H^1_0(0,1).
std::vector<PiecewisePoly> h10_basis(int m, Normalization norm);

/// Support interval of g_k as dyadic endpoints ([0,1] for k <= 2).
std::pair<Dyadic, Dyadic> schauder_support(int k);

} // namespace vicollage

#endif
