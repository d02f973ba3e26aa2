#include "slicereg/harmonic.hpp"

#include <cmath>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// 16-point Gauss-Legendre rule on [-1, 1]; exact through degree 31.
constexpr int kGlPoints = 8;
constexpr double kGlNode[kGlPoints] = {
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGlWeight[kGlPoints] = {
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

/// Neumaier-compensated accumulator; keeps the trace quadratures well
/// below the 1e-12 coefficient tolerances.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double get() const { return sum + comp; }
};

struct KahanQuat {
    Kahan a0, a1, a2, a3;
    void add(const Quaternion& q) {
        a0.add(q.x0);
        a1.add(q.x1);
        a2.add(q.x2);
        a3.add(q.x3);
    }
    Quaternion get() const { return {a0.get(), a1.get(), a2.get(), a3.get()}; }
};

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_inside(const PlanarPath& path, double radius) {
    if (!std::isfinite(radius)) return;
    for (const auto& v : path.vertices)
        if (std::hypot(v[0], v[1]) > radius)
            throw PathOutsideDomain("path vertex outside the symmetrized disk");
}

/// Segment-wise Gauss-Legendre along the polyline.
double line_integral(const std::function<double(double, double)>& ux,
                     const std::function<double(double, double)>& uy, const PlanarPath& path) {
    Kahan acc;
    for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
        const double ax = path.vertices[s][0], ay = path.vertices[s][1];
        const double bx = path.vertices[s + 1][0], by = path.vertices[s + 1][1];
        const double dx = bx - ax, dy = by - ay;
        const double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
        for (int k = 0; k < kGlPoints; ++k) {
            for (const double sign : {-1.0, 1.0}) {
                const double t = sign * kGlNode[k];
                const double px = mx + 0.5 * dx * t, py = my + 0.5 * dy * t;
                acc.add(0.5 * kGlWeight[k] * (-uy(px, py) * dx + ux(px, py) * dy));
            }
        }
    }
    return acc.get();
}

}  // namespace

PlanarPath::PlanarPath(std::vector<std::array<double, 2>> v) : vertices(std::move(v)) {
    if (vertices.size() < 2) throw ValidationError("path needs at least two vertices");
}

BoundaryTrace::BoundaryTrace(double r, std::vector<double> s) : rho(r), samples(std::move(s)) {
    if (!(rho > 0.0)) throw ValidationError("trace radius must be positive");
    if (samples.size() < 16 || !power_of_two(static_cast<int>(samples.size())))
        throw ValidationError("trace needs a power-of-two sample count >= 16");
}

double conjugate_harmonic(const HarmonicPoly& u, const PlanarPath& path, double domain_radius) {
    check_inside(path, domain_radius);
    const CPoly du = cpoly_derivative(u.coeffs);
    auto ux = [&du](double x, double y) { return cpoly_eval(du, Complex(x, y)).real(); };
    auto uy = [&du](double x, double y) { return -cpoly_eval(du, Complex(x, y)).imag(); };
    return line_integral(ux, uy, path);
}

double conjugate_harmonic_fd(const std::function<double(double, double)>& u,
                             const PlanarPath& path, double h, double domain_radius) {
    check_inside(path, domain_radius);
    auto ux = [&u, h](double x, double y) { return (u(x + h, y) - u(x - h, y)) / (2.0 * h); };
    auto uy = [&u, h](double x, double y) { return (u(x, y + h) - u(x, y - h)) / (2.0 * h); };
    return line_integral(ux, uy, path);
}

double path_independence_residual(const HarmonicPoly& u, const PlanarPath& a,
                                  const PlanarPath& b, double domain_radius) {
    const auto& af = a.vertices.front();
    const auto& bf = b.vertices.front();
    const auto& al = a.vertices.back();
    const auto& bl = b.vertices.back();
    if (std::hypot(af[0] - bf[0], af[1] - bf[1]) > kEpsVec ||
        std::hypot(al[0] - bl[0], al[1] - bl[1]) > kEpsVec)
        throw EndpointMismatch("paths do not share endpoints");
    return std::abs(conjugate_harmonic(u, a, domain_radius) -
                    conjugate_harmonic(u, b, domain_radius));
}

Complex schwarz_complex(const BoundaryTrace& trace, Complex z, double lambda) {
    if (std::abs(z) >= trace.rho) throw OutOfDomain("Schwarz evaluation point outside the disk");
    const int n = trace.size();
    Kahan re, im;
    for (int k = 0; k < n; ++k) {
        const double t = kTwoPi * k / n;
        const Complex w = std::polar(trace.rho, t);
        const Complex v = trace.samples[k] * (w + z) / (w - z);
        re.add(v.real());
        im.add(v.imag());
    }
    return Complex(re.get() / n, im.get() / n) + Complex(0.0, lambda);
}

namespace {

void check_traces(const BoundaryTrace& a, const BoundaryTrace& c) {
    if (a.size() != c.size() || a.rho != c.rho)
        throw TraceMismatch("boundary traces differ in sample count or radius");
}

/// cos/sin(2 pi m / n) tables; trace phases are read at exact multiples so
/// the aliasing structure of the trapezoid rule is bit-reproducible.
struct PhaseTable {
    std::vector<double> c, s;
    explicit PhaseTable(int n) : c(n), s(n) {
        for (int m = 0; m < n; ++m) {
            c[m] = std::cos(kTwoPi * m / n);
            s[m] = std::sin(kTwoPi * m / n);
        }
    }
};

}  // namespace

QPowerSeries quaternionic_schwarz_coeffs(const BoundaryTrace& a, const BoundaryTrace& c,
                                         const Frame& fr, int nmax) {
    check_traces(a, c);
    if (nmax < 0 || nmax > kMaxDegree) throw DegreeOverflow("nmax outside [0, 64]");
    const int n = a.size();
    const PhaseTable ph(n);
    const Quaternion qi = fr.i().quat();
    const Quaternion qj = fr.j().quat();
    const Quaternion qij = fr.ij();
    std::vector<Quaternion> coeffs(static_cast<std::size_t>(nmax) + 1);

    {  // u_0: plain mean of a + c j
        Kahan sa, sc;
        for (int k = 0; k < n; ++k) {
            sa.add(a.samples[k]);
            sc.add(c.samples[k]);
        }
        coeffs[0] = Quaternion(sa.get() / n, 0, 0, 0) + qj * (sc.get() / n);
    }
    double rpow = 1.0;
    for (int m = 1; m <= nmax; ++m) {
        rpow /= a.rho;
        // (rho e^{it})^{-m} (a_k + c_k j): the exponential lands in C(i),
        // the real samples commute with everything.
        Kahan s0, s1, s2, s3;
        for (int k = 0; k < n; ++k) {
            const int idx = static_cast<int>((static_cast<long long>(m) * k) % n);
            const double cc = ph.c[idx], ss = -ph.s[idx];  // e^{-i m t_k}
            s0.add(cc * a.samples[k]);
            s1.add(ss * a.samples[k]);
            s2.add(cc * c.samples[k]);
            s3.add(ss * c.samples[k]);
        }
        const double w = 2.0 * rpow / n;  // (1/pi) dt -> 2/N per sample
        const Quaternion ea = Quaternion(s0.get(), 0, 0, 0) + qi * s1.get();
        const Quaternion ec = qj * s2.get() + qij * s3.get();
        coeffs[m] = (ea + ec) * w;
    }
    return QPowerSeries(a.rho, std::move(coeffs));
}

Quaternion quaternionic_schwarz_eval(const BoundaryTrace& a, const BoundaryTrace& c,
                                     const Frame& fr, const Quaternion& q, double lambda1,
                                     double lambda2, int nmax) {
    check_traces(a, c);
    if (q.norm() >= a.rho) throw OutOfDomain("Schwarz evaluation point outside the ball");
    if (nmax < 0 || nmax > kMaxDegree) throw DegreeOverflow("nmax outside [0, 64]");
    const int n = a.size();
    const PhaseTable ph(n);
    const Quaternion qi = fr.i().quat();
    const Quaternion qj = fr.j().quat();

    KahanQuat acc;
    for (int k = 0; k < n; ++k) {
        // kernel K_k(q) = 1 + sum_{m=1}^{nmax} 2 q^m (rho e^{i t_k})^{-m}
        Quaternion kernel = Quaternion::one();
        Quaternion qpow = Quaternion::one();
        double rpow = 1.0;
        for (int m = 1; m <= nmax; ++m) {
            qpow = qmul(qpow, q);
            rpow /= a.rho;
            const int idx = static_cast<int>((static_cast<long long>(m) * k) % n);
            const Quaternion phase = Quaternion(ph.c[idx], 0, 0, 0) - qi * ph.s[idx];
            kernel += qmul(qpow, phase) * (2.0 * rpow);
        }
        const Quaternion boundary = Quaternion(a.samples[k], 0, 0, 0) + qj * c.samples[k];
        acc.add(qmul(kernel, boundary));
    }
    return acc.get() / static_cast<double>(n) + qi * lambda1 + fr.ij() * lambda2;
}

BoundaryTrace sample_trace(const HarmonicPoly& u, double rho, int n) {
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = kTwoPi * k / n;
        s[k] = u.value(rho * std::cos(t), rho * std::sin(t));
    }
    return BoundaryTrace(rho, std::move(s));
}

}  // namespace slicereg
