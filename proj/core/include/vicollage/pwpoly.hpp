#ifndef VICOLLAGE_PWPOLY_HPP
#define VICOLLAGE_PWPOLY_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace vicollage {

/// Dyadic rational num / 2^log2den, kept normalized (num odd or zero).
/// Breakpoints of every PiecewisePoly are dyadic, so grids of different
/// refinement levels merge without floating-point ties.
struct Dyadic {
    std::int64_t num = 0;
    int log2den = 0;

    static Dyadic make(std::int64_t num, int log2den);
    double value() const;

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b);
};

/// Piecewise polynomial on [0,1]: strictly increasing dyadic breakpoints
/// from 0 to 1, one coefficient list (ascending degree, global coordinates)
/// per interval. Evaluation uses half-open intervals [b_i, b_{i+1}), with
/// the last interval closed at x = 1.
///
/// All calculus on these objects is exact per piece (antiderivative based),
/// so every integral in the library is quadrature-free.
class PiecewisePoly {
public:
    // Products of two degree-4 inputs must stay representable.
    static constexpr int kMaxDegree = 8;
    static constexpr int kMaxInputDegree = 4;

    PiecewisePoly(std::vector<Dyadic> breakpoints,
                  std::vector<std::vector<double>> pieces);

    static PiecewisePoly constant(double c);
    /// Single global polynomial on [0,1], coefficients in ascending degree.
    static PiecewisePoly from_coeffs(std::vector<double> coeffs);
    static PiecewisePoly zero() { return constant(0.0); }

    const std::vector<Dyadic>& breakpoints() const { return breaks_; }
    const std::vector<std::vector<double>>& pieces() const { return pieces_; }

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

private:
    std::vector<Dyadic> breaks_;
    std::vector<std::vector<double>> pieces_;
};

PiecewisePoly add(const PiecewisePoly& p, const PiecewisePoly& q);
PiecewisePoly subtract(const PiecewisePoly& p, const PiecewisePoly& q);
PiecewisePoly multiply(const PiecewisePoly& p, const PiecewisePoly& q);
PiecewisePoly negate(const PiecewisePoly& p);
PiecewisePoly scale(const PiecewisePoly& p, double a);
PiecewisePoly derivative(const PiecewisePoly& p);

/// Exact definite integral over [0,1]; piece contributions are summed
/// left to right in breakpoint order.
double integrate(const PiecewisePoly& p);

double l2_inner(const PiecewisePoly& p, const PiecewisePoly& q);
double h1semi_inner(const PiecewisePoly& p, const PiecewisePoly& q);
double h1_inner(const PiecewisePoly& p, const PiecewisePoly& q);

inline PiecewisePoly operator+(const PiecewisePoly& p, const PiecewisePoly& q) { return add(p, q); }
inline PiecewisePoly operator-(const PiecewisePoly& p, const PiecewisePoly& q) { return subtract(p, q); }
inline PiecewisePoly operator*(const PiecewisePoly& p, const PiecewisePoly& q) { return multiply(p, q); }

} // namespace vicollage

#endif
