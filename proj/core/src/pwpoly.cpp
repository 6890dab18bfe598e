#include "vicollage/pwpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vicollage {

Dyadic Dyadic::make(std::int64_t num, int log2den) {
    if (log2den < 0) throw std::invalid_argument("Dyadic: negative denominator exponent");
    while (log2den > 0 && num % 2 == 0) {
        num /= 2;
        --log2den;
    }
    return Dyadic{num, log2den};
}

double Dyadic::value() const { return std::ldexp(static_cast<double>(num), -log2den); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    // cross-multiply on a common power of two; levels stay small in practice
    const __int128 lhs = static_cast<__int128>(a.num) << b.log2den;
    const __int128 rhs = static_cast<__int128>(b.num) << a.log2den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }

namespace {

double poly_eval(const std::vector<double>& c, double x) {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<double> poly_add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {0.0};
    const int deg = static_cast<int>(a.size() + b.size()) - 2;
    if (deg > PiecewisePoly::kMaxDegree)
        throw std::overflow_error("PiecewisePoly: product degree " + std::to_string(deg) +
                                  " exceeds cap " + std::to_string(PiecewisePoly::kMaxDegree));
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact integral of the polynomial piece over [x0, x1]
double poly_piece_integral(const std::vector<double>& c, double x0, double x1) {
    double r = 0.0;
    double p0 = x0, p1 = x1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        r += c[i] * (p1 - p0) / static_cast<double>(i + 1);
        p0 *= x0;
        p1 *= x1;
    }
    return r;
}

} // namespace

PiecewisePoly::PiecewisePoly(std::vector<Dyadic> breakpoints,
                             std::vector<std::vector<double>> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2) throw std::invalid_argument("PiecewisePoly: need at least two breakpoints");
    if (breaks_.front().num != 0) throw std::invalid_argument("PiecewisePoly: first breakpoint must be 0");
    if (!(breaks_.back() == Dyadic::make(1, 0)))
        throw std::invalid_argument("PiecewisePoly: last breakpoint must be 1");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i - 1] < breaks_[i]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must be strictly increasing");
    if (pieces_.size() != breaks_.size() - 1)
        throw std::invalid_argument("PiecewisePoly: piece count must equal interval count");
    for (auto& c : pieces_) {
        if (c.empty()) c = {0.0};
        if (static_cast<int>(c.size()) - 1 > kMaxDegree)
            throw std::invalid_argument("PiecewisePoly: piece degree exceeds cap");
    }
}

PiecewisePoly PiecewisePoly::constant(double c) {
    return PiecewisePoly({Dyadic::make(0, 0), Dyadic::make(1, 0)}, {{c}});
}

PiecewisePoly PiecewisePoly::from_coeffs(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs = {0.0};
    return PiecewisePoly({Dyadic::make(0, 0), Dyadic::make(1, 0)}, {std::move(coeffs)});
}

double PiecewisePoly::eval(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("PiecewisePoly::eval: x outside [0,1]");
    // half-open [b_i, b_{i+1}); x = 1 falls into the last (closed) interval
    std::size_t lo = 0, hi = breaks_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (x < breaks_[mid].value())
            hi = mid;
        else
            lo = mid;
    }
    return poly_eval(pieces_[lo], x);
}

namespace {

std::vector<Dyadic> merge_breaks(const std::vector<Dyadic>& a, const std::vector<Dyadic>& b) {
    std::vector<Dyadic> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i])
            out.push_back(b[j++]);
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Combine>
PiecewisePoly combine(const PiecewisePoly& p, const PiecewisePoly& q, Combine op) {
    auto breaks = merge_breaks(p.breakpoints(), q.breakpoints());
    std::vector<std::vector<double>> pieces;
    pieces.reserve(breaks.size() - 1);
    std::size_t ip = 0, iq = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        while (!(breaks[i] < p.breakpoints()[ip + 1])) ++ip;
        while (!(breaks[i] < q.breakpoints()[iq + 1])) ++iq;
        pieces.push_back(op(p.pieces()[ip], q.pieces()[iq]));
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces));
}

} // namespace

PiecewisePoly add(const PiecewisePoly& p, const PiecewisePoly& q) {
    return combine(p, q, [](const auto& a, const auto& b) { return poly_add(a, b); });
}

PiecewisePoly subtract(const PiecewisePoly& p, const PiecewisePoly& q) {
    return add(p, negate(q));
}

PiecewisePoly multiply(const PiecewisePoly& p, const PiecewisePoly& q) {
    return combine(p, q, [](const auto& a, const auto& b) { return poly_mul(a, b); });
}

PiecewisePoly negate(const PiecewisePoly& p) { return scale(p, -1.0); }

PiecewisePoly scale(const PiecewisePoly& p, double a) {
    auto pieces = p.pieces();
    for (auto& c : pieces)
        for (double& v : c) v *= a;
    return PiecewisePoly(p.breakpoints(), std::move(pieces));
}

PiecewisePoly derivative(const PiecewisePoly& p) {
    std::vector<std::vector<double>> pieces;
    pieces.reserve(p.pieces().size());
    for (const auto& c : p.pieces()) {
        std::vector<double> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
        if (d.empty()) d = {0.0};
        pieces.push_back(std::move(d));
    }
    return PiecewisePoly(p.breakpoints(), std::move(pieces));
}

double integrate(const PiecewisePoly& p) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.breakpoints().size(); ++i)
        total += poly_piece_integral(p.pieces()[i], p.breakpoints()[i].value(),
                                     p.breakpoints()[i + 1].value());
    return total;
}

double l2_inner(const PiecewisePoly& p, const PiecewisePoly& q) {
    return integrate(multiply(p, q));
}

double h1semi_inner(const PiecewisePoly& p, const PiecewisePoly& q) {
    return integrate(multiply(derivative(p), derivative(q)));
}

double h1_inner(const PiecewisePoly& p, const PiecewisePoly& q) {
    return l2_inner(p, q) + h1semi_inner(p, q);
}

} // namespace vicollage
