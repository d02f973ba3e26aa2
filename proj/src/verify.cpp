#include "slicereg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "slicereg/bundle.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/harmonic.hpp"
#include "slicereg/hull.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/roots.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------
// random inputs

QPowerSeries random_series(Rng& rng, int maxdeg, double radius = 1.0) {
    const int deg = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(maxdeg));
    std::vector<Quaternion> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = rng.quaternion();
    return QPowerSeries(radius, std::move(coeffs));
}

HarmonicPoly random_harmonic(Rng& rng, int maxdeg) {
    const int deg = static_cast<int>(rng.next() % static_cast<unsigned>(maxdeg + 1));
    CPoly coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return HarmonicPoly{std::move(coeffs)};
}

Quaternion random_point_in_ball(Rng& rng, double radius) {
    for (;;) {
        Quaternion q = rng.quaternion();
        const double n = q.norm();
        if (n > 1e-9 && n <= 2.0) return q * (rng.uniform() * radius / n);
    }
}

PlanarPath random_path(Rng& rng, std::array<double, 2> from, std::array<double, 2> to,
                       int waypoints) {
    std::vector<std::array<double, 2>> v{from};
    for (int k = 0; k < waypoints; ++k) {
        const double r = std::sqrt(rng.uniform()) * 0.95;
        const double t = rng.uniform(0, 6.283185307179586);
        v.push_back({r * std::cos(t), r * std::sin(t)});
    }
    v.push_back(to);
    return PlanarPath(std::move(v));
}

std::array<double, 2> random_disk_point(Rng& rng, double radius) {
    const double r = std::sqrt(rng.uniform()) * radius;
    const double t = rng.uniform(0, 6.283185307179586);
    return {r * std::cos(t), r * std::sin(t)};
}

/// Random PSRB polynomial whose second split component w.r.t. fr has
/// degree >= 1 (so its zero set is nonempty).
SlicePolynomial random_psrb(Rng& rng, int deg, const Frame& fr) {
    for (;;) {
        std::vector<Quaternion> low(static_cast<std::size_t>(deg));
        for (auto& c : low) c = rng.quaternion();
        SlicePolynomial f(std::move(low));
        if (!is_psrb(f)) continue;
        const auto [p1, p2] = split_coeffs(f.full_coeffs(), fr);
        (void)p1;
        if (cpoly_trim(p2, 1e-10).size() < 2) continue;
        return f;
    }
}

/// Random monic polynomial with a PSRB derivative (the domain of the
/// zero-set morphism).
SlicePolynomial random_p_psrb(Rng& rng, int deg) {
    for (;;) {
        std::vector<Quaternion> low(static_cast<std::size_t>(deg));
        for (auto& c : low) c = rng.quaternion();
        SlicePolynomial f(std::move(low));
        if (is_psrb(derivative_monic(f))) return f;
    }
}

long count(long base, const RunConfig& cfg) { return base * static_cast<long>(cfg.samples); }

// ---------------------------------------------------------------------
// suites

SuiteOutcome suite_quat_core(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(1000, cfg);
    for (long k = 0; k < n; ++k) {
        const Quaternion q = rng.quaternion(2.0);
        const double r1 =
            (qmul(q, q.conj()) - Quaternion(q.norm_sq())).norm() / (1.0 + q.norm_sq());

        const UnitQuaternion u = rng.unit_quaternion();
        const UnitQuaternion v = rng.unit_quaternion();
        const Quaternion w = rng.quaternion(2.0);
        const double r2 = std::abs(rotate(u, w).norm() - w.norm()) / (1.0 + w.norm());

        const Frame fr = rng.frame();
        const Frame uvf = rotate_frame(u, rotate_frame(v, fr));
        const Frame prod = rotate_frame(UnitQuaternion::normalized(qmul(u.quat(), v.quat())), fr);
        const double r3 = frame_distance(uvf, prod);

        // frame invariants survive the action
        const double r4 = std::abs(uvf.i().vec().dot(uvf.j().vec()));
        const double r5 = std::abs(uvf.i().vec().norm() - 1.0);

        out.max_residual = std::max({out.max_residual, r1, r2, r3, r4, r5});
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_series_roundtrip(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(200, cfg);
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 16);
        const Frame fr = rng.frame();
        // P after Q at sample points
        out.max_residual = std::max(out.max_residual, roundtrip_pq(f, fr, 50, rng.next()));
        // Q after P at coefficient level
        const SlicePair g = split(f, fr);
        const SlicePair again = split(reassemble(g), fr);
        for (std::size_t m = 0; m < g.f1.size(); ++m) {
            out.max_residual = std::max(out.max_residual, std::abs(g.f1[m] - again.f1[m]));
            out.max_residual = std::max(out.max_residual, std::abs(g.f2[m] - again.f2[m]));
        }
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_series_representation(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(1000, cfg);
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 16);
        const ImaginaryUnit i = rng.imaginary_unit();
        const ImaginaryUnit target = rng.imaginary_unit();
        const double r = rng.uniform() * 0.9;
        const double phi = rng.uniform(0, 6.283185307179586);
        const double x = r * std::cos(phi), y = r * std::sin(phi);
        const Quaternion plus = eval(f, embed(Complex(x, y), i));
        const Quaternion minus = eval(f, embed(Complex(x, -y), i));
        const Quaternion via = representation(plus, minus, i, target, x, y);
        const Quaternion direct = eval(f, embed(Complex(x, y), target));
        out.max_residual = std::max(out.max_residual, (via - direct).norm());
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_series_star_law(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(200, cfg);
    for (long k = 0; k < n;) {
        const QPowerSeries f = random_series(rng, 8);
        const QPowerSeries g = random_series(rng, 8);
        const Quaternion q = random_point_in_ball(rng, 0.8);
        const Quaternion fq = eval(f, q);
        if (fq.norm() < 0.1) continue;  // the law needs f(q) away from zero
        const Quaternion conjugated = qmul(qmul(qinv(fq), q), fq);
        const Quaternion lhs = eval(star_product(f, g), q);
        const Quaternion rhs = qmul(fq, eval(g, conjugated));
        out.max_residual = std::max(out.max_residual, (lhs - rhs).norm());
        out.cases += 1;
        ++k;
    }
    return out;
}

SuiteOutcome suite_series_leibniz(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(200, cfg);
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 10);
        const QPowerSeries g = random_series(rng, 10);
        const QPowerSeries lhs = derivative(star_product(f, g));
        const QPowerSeries rhs_a = star_product(derivative(f), g);
        const QPowerSeries rhs_b = star_product(f, derivative(g));
        for (int m = 0; m <= lhs.degree(); ++m) {
            const Quaternion a = m <= rhs_a.degree() ? rhs_a.coeffs[m] : Quaternion{};
            const Quaternion b = m <= rhs_b.degree() ? rhs_b.coeffs[m] : Quaternion{};
            out.max_residual = std::max(out.max_residual, (lhs.coeffs[m] - (a + b)).norm());
        }
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_series_dcomponents(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(100, cfg);
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 12);
        const Frame fr = rng.frame();
        const DComponents d = d_components(f, fr);
        for (int p = 0; p < 10; ++p) {
            const double r = rng.uniform() * 0.9;
            const double t = rng.uniform(0, 6.283185307179586);
            const Complex z(r * std::cos(t), r * std::sin(t));
            const Quaternion recombined = d_components_recombine(d, z);
            const Quaternion direct = eval(f, embed(z, fr.i()));
            out.max_residual = std::max(out.max_residual, (recombined - direct).norm());
        }
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_series_identities(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(100, cfg);
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 12);
        const Frame fr = rng.frame();
        for (int p = 0; p < 10; ++p) {
            const double r = rng.uniform() * 0.9;
            const double t = rng.uniform(0, 6.283185307179586);
            const auto [r1, r2] = slice_identities_check(f, fr, std::polar(r, t));
            out.max_residual = std::max({out.max_residual, r1, r2});
        }
        // bullet unit: f bullet (1 + j) = f
        const QPowerSeries unit(1.0, {Quaternion::one() + fr.j().quat()});
        const QPowerSeries prod = bullet_product(f, unit, fr);
        for (int m = 0; m <= f.degree(); ++m)
            out.max_residual =
                std::max(out.max_residual, (prod.coeffs[m] - f.coeffs[m]).norm());
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_harmonic_conjugate(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long reps = count(25, cfg);
    for (int deg = 1; deg <= 8; ++deg) {
        CPoly mono(static_cast<std::size_t>(deg) + 1, Complex{});
        mono.back() = Complex(1.0, 0.0);
        const HarmonicPoly u{mono};
        for (long k = 0; k < reps; ++k) {
            const auto end = random_disk_point(rng, 0.95);
            const PlanarPath path =
                random_path(rng, {0.0, 0.0}, end, 1 + static_cast<int>(rng.next() % 3));
            const double v = conjugate_harmonic(u, path, 1.0);
            const double expected = std::pow(Complex(end[0], end[1]), deg).imag();
            out.max_residual = std::max(out.max_residual, std::abs(v - expected));
            out.cases += 1;
        }
    }
    const long indep = count(100, cfg);
    for (long k = 0; k < indep; ++k) {
        const HarmonicPoly u = random_harmonic(rng, 8);
        const auto from = random_disk_point(rng, 0.9);
        const auto to = random_disk_point(rng, 0.9);
        const PlanarPath a = random_path(rng, from, to, 1 + static_cast<int>(rng.next() % 3));
        const PlanarPath b = random_path(rng, from, to, 1 + static_cast<int>(rng.next() % 3));
        out.max_residual = std::max(out.max_residual, path_independence_residual(u, a, b, 1.0));
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_schwarz_coeffs(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(50, cfg);
    for (long k = 0; k < n; ++k) {
        // rho away from 1 scales the trace values (and with them the raw
        // rounding) like rho^deg, so the off-unit circles run at degrees
        // where unit-size coefficients keep the samples of order one.
        // Degrees also stay below quadrature_n/4 to keep the trapezoid
        // rule alias-free at every configured grid.
        const int quarter = cfg.quadrature_n / 4;
        double rho = 1.0;
        int deg = std::min(32, quarter);
        int nmax = std::min(kMaxDegree, cfg.quadrature_n / 2);
        if (k % 3 == 1) {
            rho = 1.25;
            deg = std::min(8, quarter);
        } else if (k % 3 == 2) {
            rho = 0.8;
            deg = std::min(6, quarter);
            nmax = std::min(12, nmax);
        }
        const HarmonicPoly pa = random_harmonic(rng, deg);
        const HarmonicPoly pc = random_harmonic(rng, deg);
        const Frame fr = rng.frame();
        const BoundaryTrace ta = sample_trace(pa, rho, cfg.quadrature_n);
        const BoundaryTrace tc = sample_trace(pc, rho, cfg.quadrature_n);
        const QPowerSeries rec = quaternionic_schwarz_coeffs(ta, tc, fr, nmax);
        for (int m = 0; m <= rec.degree(); ++m) {
            const Complex ca = m < static_cast<int>(pa.coeffs.size()) ? pa.coeffs[m] : Complex{};
            const Complex cc = m < static_cast<int>(pc.coeffs.size()) ? pc.coeffs[m] : Complex{};
            Quaternion expected;
            if (m == 0)
                expected = Quaternion(ca.real(), 0, 0, 0) + fr.j().quat() * cc.real();
            else
                expected = embed(ca, fr.i()) + qmul(embed(cc, fr.i()), fr.j().quat());
            out.max_residual =
                std::max(out.max_residual, (rec.coeffs[m] - expected).norm());
        }
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_schwarz_eval(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(20, cfg);
    const int nmax = std::min(48, cfg.quadrature_n / 2);
    const int deg = std::min(16, cfg.quadrature_n / 4);
    for (long k = 0; k < n; ++k) {
        const HarmonicPoly pa = random_harmonic(rng, deg);
        const HarmonicPoly pc = random_harmonic(rng, deg);
        const Frame fr = rng.frame();
        const BoundaryTrace ta = sample_trace(pa, 1.0, cfg.quadrature_n);
        const BoundaryTrace tc = sample_trace(pc, 1.0, cfg.quadrature_n);
        const QPowerSeries coeff_route = quaternionic_schwarz_coeffs(ta, tc, fr, nmax);
        for (int p = 0; p < 5; ++p) {
            const Quaternion q = random_point_in_ball(rng, 0.7);
            const double l1 = rng.uniform(-1, 1), l2 = rng.uniform(-1, 1);
            const Quaternion kernel_route = quaternionic_schwarz_eval(ta, tc, fr, q, l1, l2, nmax);
            const Quaternion via_coeffs =
                eval(coeff_route, q) + fr.i().quat() * l1 + fr.ij() * l2;
            out.max_residual = std::max(out.max_residual, (kernel_route - via_coeffs).norm());
            out.cases += 1;
        }
    }
    return out;
}

SuiteOutcome suite_bundle_identities(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long ns = count(200, cfg);
    for (long k = 0; k < ns; ++k) {
        const BaseClass fcl = BaseClass::normalized(random_series(rng, 12));
        const Frame fr = rng.frame();
        const UnitQuaternion u = rng.unit_quaternion();
        // section and trivialization invert the projection
        const double r1 = class_distance(project(section(fr, fcl)), fcl);
        const double r2 = class_distance(project(trivialize(u, fcl, fr)), fcl);
        out.max_residual = std::max({out.max_residual, r1, r2});
        out.cases += 1;
    }
    const long nc = count(100, cfg);
    for (long k = 0; k < nc; ++k) {
        const BaseClass fcl = BaseClass::normalized(random_series(rng, 12));
        const Frame fr = rng.frame();
        const UnitQuaternion u = rng.unit_quaternion();
        const UnitQuaternion v = rng.unit_quaternion();
        out.max_residual =
            std::max(out.max_residual, compatibility_residual(u, v, fcl, fr));

        // additivity and derivative-commutation of the projection
        const BaseClass gcl = BaseClass::normalized(random_series(rng, 12));
        const TotalElement A = section(fr, fcl);
        const TotalElement B = section(fr, gcl);
        const BaseClass sum_first = project(add(A, B));
        const BaseClass project_first = BaseClass::normalized(
            QPowerSeries(1.0, [&] {
                const auto pa = project(A).rep.coeffs;
                const auto pb = project(B).rep.coeffs;
                std::vector<Quaternion> s(std::max(pa.size(), pb.size()));
                for (std::size_t m = 0; m < s.size(); ++m) {
                    if (m < pa.size()) s[m] += pa[m];
                    if (m < pb.size()) s[m] += pb[m];
                }
                return s;
            }()));
        out.max_residual = std::max(out.max_residual, class_distance(sum_first, project_first));

        const BaseClass d_first = project(deriv_total(A));
        const BaseClass p_first = BaseClass::normalized(derivative(project(A).rep));
        out.max_residual = std::max(out.max_residual, class_distance(d_first, p_first));

        out.max_residual = std::max(out.max_residual, rotate_identity_residual(u, A));
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_zero_bundle(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(100, cfg);
    for (long k = 0; k < n; ++k) {
        const Frame fr = rng.frame();
        const int deg = 2 + static_cast<int>(rng.next() % 5);
        const SlicePolynomial f = random_psrb(rng, deg, fr);
        const ZeroData zd = component_zero_sets(f, fr);
        const SlicePolynomial rec = zero_bundle_project(zd, deg);
        out.max_residual = std::max(out.max_residual, polynomial_distance(rec, f));
        out.cases += 1;
    }

    // the counterexample pair: same C(i) data, distinguished on C(j)
    const Frame std_frame = Frame::standard();
    const SlicePolynomial f1(
        {Quaternion(-1, 0, -1, 0), Quaternion(0, 0, 1, 0)});
    const SlicePolynomial g7(
        {Quaternion(-1, 0, -7, 0), Quaternion(0, 0, 7, 0)});
    const ZeroData zf = component_zero_sets(f1, std_frame);
    const ZeroData zg = component_zero_sets(g7, std_frame);
    out.max_residual = std::max(out.max_residual, rootset_distance(zf.s1, zg.s1));
    out.max_residual = std::max(out.max_residual, rootset_distance(zf.s2, zg.s2));
    if (rootset_distance(zf.s3, zg.s3) < 1.0) out.max_residual = kInf;  // must differ
    out.max_residual =
        std::max(out.max_residual, polynomial_distance(zero_bundle_project(zf, 2), f1));
    out.max_residual =
        std::max(out.max_residual, polynomial_distance(zero_bundle_project(zg, 2), g7));
    out.cases += 2;

    // single-coefficient perturbations move some zero set
    const long np = count(20, cfg);
    for (long k = 0; k < np; ++k) {
        const Frame fr = rng.frame();
        const int deg = 3 + static_cast<int>(rng.next() % 3);
        const SlicePolynomial f = random_psrb(rng, deg, fr);
        const ZeroData zd = component_zero_sets(f, fr);
        SlicePolynomial g = f;
        const std::size_t idx = rng.next() % g.lower.size();
        const int comp = static_cast<int>(rng.next() % 4);
        const double delta = (rng.next() % 2 == 0) ? 1e-4 : -1e-4;
        switch (comp) {
            case 0: g.lower[idx].x0 += delta; break;
            case 1: g.lower[idx].x1 += delta; break;
            case 2: g.lower[idx].x2 += delta; break;
            default: g.lower[idx].x3 += delta; break;
        }
        const ZeroData zd2 = component_zero_sets(g, fr);
        const double moved =
            std::max(std::max(rootset_distance(zd.s1, zd2.s1), rootset_distance(zd.s2, zd2.s2)),
                     std::max(rootset_distance(zd.s3, zd2.s3), rootset_distance(zd.s4, zd2.s4)));
        if (moved < 1e-6) out.max_residual = kInf;
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_gauss_lucas(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(200, cfg);
    for (long k = 0; k < n; ++k) {
        const int deg = 2 + static_cast<int>(rng.next() % 7);
        std::vector<Quaternion> low(static_cast<std::size_t>(deg));
        const bool real_coeffs = (k % 2 == 0);
        for (auto& c : low)
            c = real_coeffs ? Quaternion(rng.uniform(-1, 1)) : rng.quaternion();
        const SlicePolynomial f(std::move(low));
        if (!gauss_lucas_check(f, rng.frame())) out.max_residual = kInf;
        out.cases += 1;
    }
    const long nm = count(50, cfg);
    for (long k = 0; k < nm; ++k) {
        const int deg = 3 + static_cast<int>(rng.next() % 4);
        const SlicePolynomial f = random_p_psrb(rng, deg);
        const MorphismResult m = morphism_gamma(f, rng.frame());
        out.max_residual =
            std::max({out.max_residual, m.diagram_residual, m.reconstruction_residual});
        if (!m.gauss_lucas_ok) out.max_residual = kInf;
        out.cases += 1;
    }
    return out;
}

// O(n^3) supporting-edge hull, kept deliberately independent of the
// monotone-chain implementation it cross-checks.
std::vector<Point2> hull_bruteforce(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    auto on_segment = [](const Point2& a, const Point2& b, const Point2& p) {
        return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
               std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
    };
    std::vector<Point2> extremes;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            bool support = true;
            for (std::size_t k = 0; k < pts.size() && support; ++k) {
                if (k == i || k == j) continue;
                const double c = cross(pts[i], pts[j], pts[k]);
                if (c < 0.0 || (c == 0.0 && !on_segment(pts[i], pts[j], pts[k])))
                    support = false;
            }
            if (support) {
                extremes.push_back(pts[i]);
                extremes.push_back(pts[j]);
            }
        }
    }
    std::sort(extremes.begin(), extremes.end());
    extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());
    return extremes;
}

SuiteOutcome suite_oracle_hull(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(40, cfg);
    for (long k = 0; k < n; ++k) {
        const int npts = 3 + static_cast<int>(rng.next() % 98);
        std::vector<Point2> pts(static_cast<std::size_t>(npts));
        for (auto& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        std::vector<Point2> fast = convex_hull_2d(pts);
        const std::vector<Point2> slow = hull_bruteforce(pts);
        std::sort(fast.begin(), fast.end());
        if (fast != slow) out.max_residual = kInf;
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_oracle_derivative(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(200, cfg);
    const double h = 1e-5;
    for (long k = 0; k < n; ++k) {
        const QPowerSeries f = random_series(rng, 16);
        const ImaginaryUnit i = rng.imaginary_unit();
        const double r = rng.uniform() * 0.8;
        const double t = rng.uniform(0, 6.283185307179586);
        const Complex z = std::polar(r, t);
        const Quaternion fd =
            (eval(f, embed(z + h, i)) - eval(f, embed(z - h, i))) / (2.0 * h);
        const Quaternion exact = eval(derivative(f), embed(z, i));
        out.max_residual = std::max(out.max_residual, (fd - exact).norm());
        out.cases += 1;
    }
    return out;
}

SuiteOutcome suite_oracle_roots(Rng& rng, const RunConfig& cfg) {
    SuiteOutcome out;
    const long n = count(500, cfg);
    for (long k = 0; k < n; ++k) {
        const int deg = 1 + static_cast<int>(rng.next() % 12);
        CPoly p(static_cast<std::size_t>(deg) + 1);
        for (auto& c : p) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (std::abs(p.back()) < 0.1) p.back() += Complex(0.5, 0.0);
        for (const auto& r : complex_roots(p)) {
            const double scale = std::pow(1.0 + std::abs(r.z), deg);
            out.max_residual =
                std::max(out.max_residual, std::abs(cpoly_eval(p, r.z)) / scale);
        }
        out.cases += 1;
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (samples < 1) throw ValidationError("samples must be >= 1");
    if (quadrature_n < 16 || (quadrature_n & (quadrature_n - 1)) != 0)
        throw ValidationError("quadrature_n must be a power of two >= 16");
}

const std::vector<SuiteSpec>& verification_suites() {
    static const std::vector<SuiteSpec> suites = {
        {"quat-core", 1e-12, suite_quat_core},
        {"series-roundtrip", 1e-10, suite_series_roundtrip},
        {"series-representation", 1e-10, suite_series_representation},
        {"series-star-law", 1e-9, suite_series_star_law},
        {"series-leibniz", 1e-12, suite_series_leibniz},
        {"series-dcomponents", 1e-12, suite_series_dcomponents},
        {"series-identities", 1e-10, suite_series_identities},
        {"harmonic-conjugate", 1e-10, suite_harmonic_conjugate},
        {"harmonic-schwarz-coeffs", 1e-12, suite_schwarz_coeffs},
        {"harmonic-schwarz-eval", 1e-9, suite_schwarz_eval},
        {"bundle-identities", 1e-10, suite_bundle_identities},
        {"zero-bundle", 1e-9, suite_zero_bundle},
        {"gauss-lucas", 1e-9, suite_gauss_lucas},
        {"oracle-hull", 0.0, suite_oracle_hull},
        {"oracle-derivative", 1e-8, suite_oracle_derivative},
        {"oracle-roots", 1e-9, suite_oracle_roots},
    };
    return suites;
}

std::vector<SuiteResult> run_verification(const RunConfig& config) {
    config.validate();
    for (const auto& name : config.only) {
        bool known = false;
        for (const auto& s : verification_suites()) known = known || s.name == name;
        if (!known) throw ValidationError("unknown suite: " + name);
    }
    std::vector<SuiteResult> results;
    std::uint64_t idx = 0;
    for (const auto& spec : verification_suites()) {
        ++idx;
        if (!config.only.empty() &&
            std::find(config.only.begin(), config.only.end(), spec.name) == config.only.end())
            continue;
        Rng rng(config.seed ^ (0x5eedULL * idx));
        double tol = spec.default_tol;
        if (auto it = config.tol_overrides.find(spec.name); it != config.tol_overrides.end())
            tol = it->second;
        const auto start = std::chrono::steady_clock::now();
        const SuiteOutcome outcome = spec.run(rng, config);
        const auto stop = std::chrono::steady_clock::now();
        SuiteResult r;
        r.name = spec.name;
        r.cases = outcome.cases;
        r.max_residual = outcome.max_residual;
        r.tolerance = tol;
        r.pass = outcome.max_residual <= tol;
        r.seconds = std::chrono::duration<double>(stop - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

std::string format_report_text(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    char line[160];
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-26s %7ld cases   max %.3e   tol %.1e   %s\n",
                      r.name.c_str(), r.cases, r.max_residual, r.tolerance,
                      r.pass ? "PASS" : "FAIL");
        os << line;
    }
    int passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    os << "overall: " << (all_passed(results) ? "PASS" : "FAIL") << " (" << passed << "/"
       << results.size() << " suites)\n";
    return os.str();
}

std::string format_report_json(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "%s{\"suite\":\"%s\",\"cases\":%ld,\"max_residual\":%.17g,"
                      "\"tolerance\":%.17g,\"pass\":%s}",
                      k ? "," : "", r.name.c_str(), r.cases, r.max_residual, r.tolerance,
                      r.pass ? "true" : "false");
        os << buf;
    }
    os << "]\n";
    return os.str();
}

}  // namespace slicereg
