#include "slicereg/power_series.hpp"

#include <cmath>

#include "slicereg/errors.hpp"
#include "slicereg/rng.hpp"

namespace slicereg {

QPowerSeries::QPowerSeries(double rad, std::vector<Quaternion> c) : radius(rad), coeffs(std::move(c)) {
    if (!(radius > 0.0)) throw ValidationError("series radius must be positive");
    if (coeffs.empty()) coeffs.push_back(Quaternion{});
    if (degree() > kMaxDegree) throw DegreeOverflow("series degree exceeds the truncation cap");
}

Quaternion eval(const QPowerSeries& f, const Quaternion& q) {
    if (q.norm() >= f.radius) throw OutOfDomain("evaluation point outside the series ball");
    Quaternion acc = f.coeffs.back();
    for (std::size_t k = f.coeffs.size() - 1; k-- > 0;) acc = qmul(q, acc) + f.coeffs[k];
    return acc;
}

std::pair<CPoly, CPoly> split_coeffs(const std::vector<Quaternion>& coeffs, const Frame& fr) {
    const Quaternion i = fr.i().quat();
    const Quaternion j = fr.j().quat();
    const Quaternion ij = fr.ij();
    CPoly f1(coeffs.size()), f2(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const Quaternion& a = coeffs[n];
        f1[n] = Complex(a.x0, a.dot(i));
        f2[n] = Complex(a.dot(j), a.dot(ij));
    }
    return {std::move(f1), std::move(f2)};
}

SlicePair split(const QPowerSeries& f, const Frame& fr) {
    auto [f1, f2] = split_coeffs(f.coeffs, fr);
    return SlicePair{fr, f.radius, std::move(f1), std::move(f2)};
}

std::vector<Quaternion> reassemble_coeffs(const CPoly& f1, const CPoly& f2, const Frame& fr) {
    const Quaternion i = fr.i().quat();
    const Quaternion j = fr.j().quat();
    const Quaternion ij = fr.ij();
    std::vector<Quaternion> out(std::max(f1.size(), f2.size()));
    for (std::size_t n = 0; n < out.size(); ++n) {
        const Complex c1 = n < f1.size() ? f1[n] : Complex{};
        const Complex c2 = n < f2.size() ? f2[n] : Complex{};
        out[n] = Quaternion(c1.real(), 0, 0, 0) + i * c1.imag() + j * c2.real() + ij * c2.imag();
    }
    return out;
}

QPowerSeries reassemble(const SlicePair& g) {
    return QPowerSeries(g.radius, reassemble_coeffs(g.f1, g.f2, g.frame));
}

namespace {

/// g(z) = f1(z) + f2(z) j embedded through the pair's frame.
Quaternion eval_pair_at(const SlicePair& g, Complex z) {
    const Quaternion v1 = embed(cpoly_eval(g.f1, z), g.frame.i());
    const Quaternion v2 = embed(cpoly_eval(g.f2, z), g.frame.i());
    return v1 + qmul(v2, g.frame.j().quat());
}

}  // namespace

Quaternion extend(const SlicePair& g, const Quaternion& q) {
    if (q.norm() >= g.radius) throw OutOfDomain("extension point outside the series ball");
    const double x = q.real();
    const double y = q.vec_norm();
    if (y <= kEpsVec) {
        // Real point: both terms of the formula coincide, no I_q needed.
        return eval_pair_at(g, Complex(x, 0.0));
    }
    const Quaternion iq = imaginary_unit_of(q).quat();
    const Quaternion i = g.frame.i().quat();
    const Quaternion minus = eval_pair_at(g, Complex(x, -y));
    const Quaternion plus = eval_pair_at(g, Complex(x, y));
    const Quaternion iqi = qmul(iq, i);
    return (minus + plus + qmul(iqi, minus - plus)) * 0.5;
}

Quaternion representation(const Quaternion& f_plus, const Quaternion& f_minus,
                          const ImaginaryUnit& i, const ImaginaryUnit& target, double /*x*/,
                          double /*y*/) {
    const Quaternion ti = qmul(target.quat(), i.quat());
    return (f_plus + f_minus) * 0.5 + qmul(ti, f_minus - f_plus) * 0.5;
}

DComponents d_components(const QPowerSeries& f, const Frame& fr) {
    auto [f1, f2] = split_coeffs(f.coeffs, fr);
    const Complex mi(0.0, -1.0);
    // D1 = Re f1, D2 = Im f1 = Re(-i f1), D3 = Re f2, D4 = Im f2.
    return DComponents{fr, f1, cpoly_scale(f1, mi), f2, cpoly_scale(f2, mi)};
}

Quaternion d_components_recombine(const DComponents& d, Complex z) {
    const double v1 = cpoly_eval(d.d1, z).real();
    const double v2 = cpoly_eval(d.d2, z).real();
    const double v3 = cpoly_eval(d.d3, z).real();
    const double v4 = cpoly_eval(d.d4, z).real();
    return Quaternion(v1, 0, 0, 0) + d.frame.i().quat() * v2 + d.frame.j().quat() * v3 +
           d.frame.ij() * v4;
}

std::pair<double, double> slice_identities_check(const QPowerSeries& f, const Frame& fr,
                                                 Complex z) {
    const Quaternion i = fr.i().quat();
    const Quaternion v = eval(f, embed(z, fr.i()));
    const Quaternion ivi = qmul(qmul(i, v), i);
    const auto [f1, f2] = split_coeffs(f.coeffs, fr);
    const Quaternion two_f2j = qmul(embed(cpoly_eval(f2, z), fr.i()), fr.j().quat()) * 2.0;
    const Quaternion two_f1 = embed(cpoly_eval(f1, z), fr.i()) * 2.0;
    return {(v + ivi - two_f2j).norm(), (v - ivi - two_f1).norm()};
}

QPowerSeries star_product(const QPowerSeries& f, const QPowerSeries& g) {
    const int deg = f.degree() + g.degree();
    if (deg > kMaxDegree) throw DegreeOverflow("star product exceeds the truncation cap");
    std::vector<Quaternion> c(static_cast<std::size_t>(deg) + 1);
    for (std::size_t a = 0; a < f.coeffs.size(); ++a)
        for (std::size_t b = 0; b < g.coeffs.size(); ++b)
            c[a + b] += qmul(f.coeffs[a], g.coeffs[b]);
    return QPowerSeries(std::min(f.radius, g.radius), std::move(c));
}

QPowerSeries bullet_product(const QPowerSeries& f, const QPowerSeries& g, const Frame& fr) {
    const int deg = f.degree() + g.degree();
    if (deg > kMaxDegree) throw DegreeOverflow("bullet product exceeds the truncation cap");
    const auto [f1, f2] = split_coeffs(f.coeffs, fr);
    const auto [g1, g2] = split_coeffs(g.coeffs, fr);
    CPoly h1 = cpoly_mul(f1, g1);
    CPoly h2 = cpoly_mul(f2, g2);
    h1.resize(static_cast<std::size_t>(deg) + 1, Complex{});
    h2.resize(static_cast<std::size_t>(deg) + 1, Complex{});
    return QPowerSeries(std::min(f.radius, g.radius), reassemble_coeffs(h1, h2, fr));
}

QPowerSeries derivative(const QPowerSeries& f) {
    if (f.degree() == 0) return QPowerSeries(f.radius, {Quaternion{}});
    std::vector<Quaternion> c(f.coeffs.size() - 1);
    for (std::size_t n = 1; n < f.coeffs.size(); ++n)
        c[n - 1] = f.coeffs[n] * static_cast<double>(n);
    return QPowerSeries(f.radius, std::move(c));
}

double roundtrip_pq(const QPowerSeries& f, const Frame& fr, int npoints, std::uint64_t seed) {
    const SlicePair g = split(f, fr);
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < npoints; ++k) {
        Quaternion q = rng.quaternion();
        const double n = q.norm();
        if (n > 0.0) q = q * (rng.uniform() * 0.9 * f.radius / n);
        worst = std::max(worst, (extend(g, q) - eval(f, q)).norm());
    }
    return worst;
}

}  // namespace slicereg
