#pragma once

#include <algorithm>
#include <complex>
#include <vector>

namespace slicereg {

using Complex = std::complex<double>;
/// Dense univariate polynomial, coefficients ascending by degree.
using CPoly = std::vector<Complex>;

inline Complex cpoly_eval(const CPoly& p, Complex z) {
    if (p.empty()) return {};
    Complex acc = p.back();
    for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * z + p[k];
    return acc;
}

inline CPoly cpoly_derivative(const CPoly& p) {
    if (p.size() <= 1) return {};
    CPoly d(p.size() - 1);
    for (std::size_t n = 1; n < p.size(); ++n) d[n - 1] = p[n] * static_cast<double>(n);
    return d;
}

inline CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly c(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline CPoly cpoly_add(const CPoly& a, const CPoly& b) {
    CPoly c(std::max(a.size(), b.size()), Complex{});
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline CPoly cpoly_scale(const CPoly& a, Complex s) {
    CPoly c = a;
    for (auto& v : c) v *= s;
    return c;
}

inline double cpoly_max_abs(const CPoly& p) {
    double m = 0.0;
    for (const auto& c : p) m = std::max(m, std::abs(c));
    return m;
}

/// Drops trailing coefficients with |c| <= eps.
inline CPoly cpoly_trim(CPoly p, double eps = 0.0) {
    while (!p.empty() && std::abs(p.back()) <= eps) p.pop_back();
    return p;
}

inline bool cpoly_is_zero(const CPoly& p, double eps) { return cpoly_max_abs(p) <= eps; }

inline std::size_t cpoly_degree(const CPoly& p) { return p.empty() ? 0 : p.size() - 1; }

}  // namespace slicereg
