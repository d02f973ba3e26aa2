#include "slicereg/roots.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

constexpr int kMaxIter = 500;
constexpr double kStepTol = 1e-13;
constexpr double kClusterRadius = 1e-7;

/// Greedy chain clustering: roots within kClusterRadius of a cluster
/// member join it; the cluster collapses to its centroid.
std::vector<RootCluster> cluster(const std::vector<Complex>& roots) {
    std::vector<bool> used(roots.size(), false);
    std::vector<RootCluster> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> members{i};
        used[i] = true;
        for (std::size_t m = 0; m < members.size(); ++m) {
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[members[m]] - roots[j]) <= kClusterRadius) {
                    used[j] = true;
                    members.push_back(j);
                }
            }
        }
        Complex centroid{};
        for (auto m : members) centroid += roots[m];
        centroid /= static_cast<double>(members.size());
        out.push_back({centroid, static_cast<int>(members.size())});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return out;
}

}  // namespace

std::vector<RootCluster> complex_roots(const CPoly& p) {
    if (p.size() < 2) throw DegenerateLeadingCoefficient("polynomial must have degree >= 1");
    if (std::abs(p.back()) == 0.0)
        throw DegenerateLeadingCoefficient("leading coefficient is zero");

    const std::size_t deg = p.size() - 1;
    CPoly monic(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) monic[k] = p[k] / p.back();

    if (deg == 1) return {{-monic[0], 1}};

    double radius = 0.0;
    for (std::size_t k = 0; k + 1 < monic.size(); ++k)
        radius = std::max(radius, std::abs(monic[k]));
    radius += 1.0;

    // Irrational angle offset keeps the start away from symmetric traps.
    const double offset = 0.6180339887498948482;
    std::vector<Complex> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double ang = 6.283185307179586 * k / deg + offset;
        z[k] = std::polar(radius, ang);
    }

    for (int it = 0; it < kMaxIter; ++it) {
        double max_step = 0.0, max_abs = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            Complex denom{1.0, 0.0};
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != k) denom *= z[k] - z[j];
            }
            if (std::abs(denom) == 0.0) {
                z[k] += Complex(1e-8, 1e-8);
                continue;
            }
            const Complex step = cpoly_eval(monic, z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_abs = std::max(max_abs, std::abs(z[k]));
        }
        if (max_step <= kStepTol * (1.0 + max_abs)) break;
    }

    // Newton polish; multiple roots keep their DK value (the polish is
    // only accepted when the residual improves).
    const CPoly dmonic = cpoly_derivative(monic);
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            const Complex dv = cpoly_eval(dmonic, r);
            if (std::abs(dv) == 0.0) break;
            const Complex cand = r - cpoly_eval(monic, r) / dv;
            if (std::abs(cpoly_eval(monic, cand)) < std::abs(cpoly_eval(monic, r)))
                r = cand;
            else
                break;
        }
    }

    return cluster(z);
}

CPoly monic_from_roots(const std::vector<RootCluster>& roots) {
    CPoly p{Complex(1.0, 0.0)};
    for (const auto& r : roots)
        for (int m = 0; m < r.multiplicity; ++m) p = cpoly_mul(p, {-r.z, Complex(1.0, 0.0)});
    return p;
}

}  // namespace slicereg
