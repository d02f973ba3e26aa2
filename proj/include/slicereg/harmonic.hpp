#pragma once

#include <array>
#include <functional>
#include <limits>
#include <vector>

#include "slicereg/complex_poly.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Harmonic polynomial on the plane, u(x, y) = Re sum c_n (x + iy)^n.
/// Partials are exact: u_x = Re p'(z), u_y = -Im p'(z).
struct HarmonicPoly {
    CPoly coeffs;

    double value(double x, double y) const { return cpoly_eval(coeffs, Complex(x, y)).real(); }
    double dx(double x, double y) const {
        return cpoly_eval(cpoly_derivative(coeffs), Complex(x, y)).real();
    }
    double dy(double x, double y) const {
        return -cpoly_eval(cpoly_derivative(coeffs), Complex(x, y)).imag();
    }
    /// u_x as harmonic data again (term-wise differentiation).
    HarmonicPoly derivative_x() const { return HarmonicPoly{cpoly_derivative(coeffs)}; }
};

/// Polyline in the symmetrized plane domain.
struct PlanarPath {
    std::vector<std::array<double, 2>> vertices;

    explicit PlanarPath(std::vector<std::array<double, 2>> v);
};

/// Samples of a continuous boundary function on the circle of radius rho,
/// u(rho cos(2 pi k/N), rho sin(2 pi k/N)). N must be a power of two >= 16.
struct BoundaryTrace {
    double rho = 1.0;
    std::vector<double> samples;

    BoundaryTrace(double r, std::vector<double> s);
    int size() const { return static_cast<int>(samples.size()); }
};

/// Conjugate harmonic v(x, y) = integral of (-u_y dx + u_x dy) along the
/// path, v(start) = 0. Gauss-Legendre per segment; exact for the
/// polynomial integrands of HarmonicPoly up to degree 32.
double conjugate_harmonic(const HarmonicPoly& u, const PlanarPath& path,
                          double domain_radius = std::numeric_limits<double>::infinity());

/// Same line integral for a black-box u using central differences for the
/// partials; lower accuracy (O(h^2)).
double conjugate_harmonic_fd(const std::function<double(double, double)>& u,
                             const PlanarPath& path, double h = 1e-6,
                             double domain_radius = std::numeric_limits<double>::infinity());

/// |integral(pathA) - integral(pathB)|; the paths must share endpoints.
double path_independence_residual(const HarmonicPoly& u, const PlanarPath& a,
                                  const PlanarPath& b,
                                  double domain_radius = std::numeric_limits<double>::infinity());

/// Schwarz formula on the disk: the holomorphic extension of the boundary
/// data with imaginary part lambda at 0, by periodic-trapezoid quadrature.
Complex schwarz_complex(const BoundaryTrace& trace, Complex z, double lambda);

/// Quaternionic Schwarz coefficients (the series route):
///   u_0 = (1/2pi) int (a + c j) dt,
///   u_n = (1/pi)  int (rho e^{it})^{-n} (a + c j) dt,  1 <= n <= nmax.
QPowerSeries quaternionic_schwarz_coeffs(const BoundaryTrace& a, const BoundaryTrace& c,
                                         const Frame& fr, int nmax);

/// Quaternionic Schwarz evaluation (the kernel route): sums the kernel
/// series 1 + sum_n q^n 2 (rho e^{it})^{-n} against the trace quadrature,
/// then adds lambda1 i + lambda2 ij.
Quaternion quaternionic_schwarz_eval(const BoundaryTrace& a, const BoundaryTrace& c,
                                     const Frame& fr, const Quaternion& q, double lambda1,
                                     double lambda2, int nmax);

/// Circle samples of a harmonic polynomial.
BoundaryTrace sample_trace(const HarmonicPoly& u, double rho, int n);

}  // namespace slicereg
