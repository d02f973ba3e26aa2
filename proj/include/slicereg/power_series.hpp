#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "slicereg/complex_poly.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Default truncation cap; operations that would exceed it throw
/// DegreeOverflow instead of truncating silently.
inline constexpr int kMaxDegree = 64;

/// Slice regular function on the ball B^4(0, radius), represented by its
/// truncated power series f(q) = sum_n q^n a_n (powers on the left).
struct QPowerSeries {
    double radius = 1.0;
    std::vector<Quaternion> coeffs;  // a_0, a_1, ..., a_N

    QPowerSeries() : coeffs{Quaternion{}} {}
    QPowerSeries(double rad, std::vector<Quaternion> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Splitting-Lemma data: on the slice C(i), f = f1 + f2 j with f1, f2
/// holomorphic. Coefficients live in C(i), stored as std::complex.
struct SlicePair {
    Frame frame;
    double radius = 1.0;
    CPoly f1, f2;
};

/// Real components of Q[f] on a slice: Q[f] = d1 + d2 i + d3 j + d4 ij.
/// Each component is the real part of a complex-coefficient polynomial;
/// the stored vectors are those polynomials' coefficients.
struct DComponents {
    Frame frame;
    CPoly d1, d2, d3, d4;
};

/// x + y i as a quaternion, identifying C with the slice C(i).
inline Quaternion embed(Complex z, const ImaginaryUnit& i) {
    return Quaternion(z.real(), 0, 0, 0) + i.quat() * z.imag();
}

/// Horner evaluation of sum q^n a_n. Throws OutOfDomain when |q| >= radius.
Quaternion eval(const QPowerSeries& f, const Quaternion& q);

/// Coefficient-level splitting: a_n = (alpha + beta i) + (gamma + delta i) j
/// in the orthonormal basis {1, i, j, ij}. Exact (a finite basis change).
std::pair<CPoly, CPoly> split_coeffs(const std::vector<Quaternion>& coeffs, const Frame& fr);
SlicePair split(const QPowerSeries& f, const Frame& fr);

/// Inverse of split_coeffs; exact.
std::vector<Quaternion> reassemble_coeffs(const CPoly& f1, const CPoly& f2, const Frame& fr);
QPowerSeries reassemble(const SlicePair& g);

/// Extension operator P_{i,j} evaluated at q:
///   P[g](q) = 1/2 [ (1 + I_q i) g(x - y i) + (1 - I_q i) g(x + y i) ],
/// with g(z) = f1(z) + f2(z) j on the slice. Near-real q uses y = 0.
Quaternion extend(const SlicePair& g, const Quaternion& q);

/// Representation Formula: value at x + (target) y from the two slice
/// values f(x + i y) and f(x - i y).
Quaternion representation(const Quaternion& f_plus, const Quaternion& f_minus,
                          const ImaginaryUnit& i, const ImaginaryUnit& target, double x,
                          double y);

DComponents d_components(const QPowerSeries& f, const Frame& fr);

/// Evaluates D1 + D2 i + D3 j + D4 ij at the slice point z.
Quaternion d_components_recombine(const DComponents& d, Complex z);

/// Residuals of the pointwise slice identities at z in C(i):
///   first:  || (f + i f i)(z) - 2 f2(z) j ||
///   second: || (f - i f i)(z) - 2 f1(z) ||
/// The assignment of f1/f2 to the two branches is the one direct
/// computation gives (it is the transpose of the printed form).
std::pair<double, double> slice_identities_check(const QPowerSeries& f, const Frame& fr,
                                                 Complex z);

/// Coefficient convolution c_n = sum_k a_k b_{n-k}.
QPowerSeries star_product(const QPowerSeries& f, const QPowerSeries& g);

/// Frame product f •_{i,j} g = P[ f1 g1 + f2 g2 j ].
QPowerSeries bullet_product(const QPowerSeries& f, const QPowerSeries& g, const Frame& fr);

/// Cullen derivative: coefficients (n+1) a_{n+1}.
QPowerSeries derivative(const QPowerSeries& f);

/// max_q || extend(split(f, fr), q) - eval(f, q) || over npoints
/// deterministic sample points with |q| <= 0.9 radius.
double roundtrip_pq(const QPowerSeries& f, const Frame& fr, int npoints = 50,
                    std::uint64_t seed = 0x70a77e5d5eedULL);

}  // namespace slicereg
