#include "slicereg/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

constexpr double kIZeroRel = 1e-12;      // identically-zero detection, relative
constexpr double kCommonRootTol = 1e-8;  // |other component| at a candidate zero
constexpr double kLsqTol = 1e-8;         // reconstruction system residual
constexpr double kRoundTripTol = 1e-6;   // forward check after reconstruction

double coeff_scale(const std::vector<Quaternion>& coeffs) {
    double s = 1.0;
    for (const auto& c : coeffs) s = std::max(s, c.norm());
    return s;
}

/// Canonical completion of the j-slice: the frame (j, ij).
Frame j_slice_frame(const Frame& fr) {
    return Frame(fr.j(), ImaginaryUnit::normalized(fr.ij().vec()));
}

RootSet roots_or_marker(const CPoly& p, double scale) {
    const CPoly trimmed = cpoly_trim(p, kIZeroRel * scale);
    if (trimmed.empty()) return RootSet{true, {}};
    if (trimmed.size() == 1) return RootSet{false, {}};  // nonzero constant: no zeros
    return RootSet{false, complex_roots(trimmed)};
}

}  // namespace

SlicePolynomial::SlicePolynomial(std::vector<Quaternion> low) : lower(std::move(low)) {
    if (lower.empty()) throw ValidationError("slice polynomial needs degree >= 1");
    if (degree() > kMaxDegree) throw DegreeOverflow("polynomial degree exceeds the cap");
}

std::vector<Quaternion> SlicePolynomial::full_coeffs() const {
    std::vector<Quaternion> full = lower;
    full.push_back(Quaternion::one());
    return full;
}

Quaternion SlicePolynomial::value(const Quaternion& q) const {
    Quaternion acc = Quaternion::one();
    for (std::size_t k = lower.size(); k-- > 0;) acc = qmul(q, acc) + lower[k];
    return acc;
}

QPowerSeries SlicePolynomial::as_series() const {
    return QPowerSeries(std::numeric_limits<double>::infinity(), full_coeffs());
}

SlicePolynomial derivative_monic(const SlicePolynomial& f) {
    const int n = f.degree();
    if (n < 2) throw ValidationError("derivative of a degree-1 polynomial is constant");
    std::vector<Quaternion> low(static_cast<std::size_t>(n) - 1);
    for (int k = 0; k + 1 < n; ++k)
        low[k] = f.lower[static_cast<std::size_t>(k) + 1] * (static_cast<double>(k + 1) / n);
    return SlicePolynomial(std::move(low));
}

const std::vector<RootCluster>& RootSet::checked_roots(const char* label) const {
    if (identically_zero) throw IdenticallyZeroComponent(label);
    return roots;
}

namespace {

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations.
std::array<double, 3> sym3_eigenvalues(std::array<std::array<double, 3>, 3> m) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(m[0][1]) + std::abs(m[0][2]) + std::abs(m[1][2]);
        if (off < 1e-300) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = 0.5 * std::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < 3; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    return {m[0][0], m[1][1], m[2][2]};
}

}  // namespace

bool is_psrb(const std::vector<Quaternion>& coeffs) {
    std::array<std::array<double, 3>, 3> gram{};
    for (const auto& q : coeffs) {
        const double v[3] = {q.x1, q.x2, q.x3};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) gram[r][c] += v[r] * v[c];
    }
    const auto ev = sym3_eigenvalues(gram);
    const double lmin = std::min({ev[0], ev[1], ev[2]});
    // singular values of the 3xN vector-part matrix are sqrt(eigenvalues)
    return lmin > 1e-10 * 1e-10;
}

bool is_psrb(const SlicePolynomial& f) { return is_psrb(f.full_coeffs()); }

ZeroData component_zero_sets(const SlicePolynomial& f, const Frame& fr) {
    const std::vector<Quaternion> full = f.full_coeffs();
    const double scale = coeff_scale(full);
    const auto [p1, p2] = split_coeffs(full, fr);
    const Frame frj = j_slice_frame(fr);
    const auto [g1, g2] = split_coeffs(full, frj);
    return ZeroData{fr, roots_or_marker(p1, scale), roots_or_marker(p2, scale),
                    roots_or_marker(g1, scale), roots_or_marker(g2, scale)};
}

namespace {

/// Solves the normal equations of an m-unknown real least-squares system;
/// returns max |A x - b| over the rows.
double solve_lsq(const std::vector<std::array<double, 5>>& rows, int unknowns,
                 std::array<double, 4>& x) {
    std::array<std::array<double, 5>, 4> normal{};
    for (const auto& r : rows) {
        for (int i = 0; i < unknowns; ++i) {
            for (int j = 0; j < unknowns; ++j) normal[i][j] += r[i] * r[j];
            normal[i][4] += r[i] * r[4];
        }
    }
    double scale = 0.0;
    for (int i = 0; i < unknowns; ++i)
        for (int j = 0; j < unknowns; ++j) scale = std::max(scale, std::abs(normal[i][j]));
    // Gaussian elimination with partial pivoting.
    std::array<int, 4> perm{0, 1, 2, 3};
    for (int col = 0; col < unknowns; ++col) {
        int pivot = col;
        for (int r = col + 1; r < unknowns; ++r)
            if (std::abs(normal[perm[r]][col]) > std::abs(normal[perm[pivot]][col])) pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double p = normal[perm[col]][col];
        // A rank-deficient family means several polynomials share the zero
        // data; that is exactly the ambiguity the PSRB hypothesis excludes.
        if (std::abs(p) <= 1e-14 * std::max(scale, 1.0))
            throw NotPSRB("zero data does not determine the polynomial");
        for (int r = col + 1; r < unknowns; ++r) {
            const double factor = normal[perm[r]][col] / p;
            for (int c = col; c <= 4; ++c) normal[perm[r]][c] -= factor * normal[perm[col]][c];
        }
    }
    for (int col = unknowns; col-- > 0;) {
        double acc = normal[perm[col]][4];
        for (int c = col + 1; c < unknowns; ++c) acc -= normal[perm[col]][c] * x[c];
        x[col] = acc / normal[perm[col]][col];
    }
    double res = 0.0;
    for (const auto& r : rows) {
        double v = -r[4];
        for (int i = 0; i < unknowns; ++i) v += r[i] * x[i];
        res = std::max(res, std::abs(v));
    }
    return res;
}

CPoly padded(CPoly p, std::size_t len) {
    p.resize(len, Complex{});
    return p;
}

struct JSliceComponents {
    CPoly g1, g2;
};

JSliceComponents j_components_of(const CPoly& f1, const CPoly& f2, const Frame& fr,
                                 const Frame& frj, std::size_t len) {
    const auto coeffs = reassemble_coeffs(padded(f1, len), padded(f2, len), fr);
    auto [g1, g2] = split_coeffs(coeffs, frj);
    return {std::move(g1), std::move(g2)};
}

}  // namespace

SlicePolynomial zero_bundle_project(const ZeroData& zd, int degree) {
    if (zd.s1.identically_zero || total_multiplicity(zd.s1.roots) != degree)
        throw InconsistentData("first component data does not carry the full degree");
    if (zd.s2.identically_zero || zd.s2.roots.empty() ||
        total_multiplicity(zd.s2.roots) >= degree)
        throw InconsistentData("second component data must be nonempty of lower degree");
    if (zd.s3.identically_zero || total_multiplicity(zd.s3.roots) != degree)
        throw InconsistentData("j-slice monic component data does not carry the full degree");

    const Frame& fr = zd.frame;
    const Frame frj = j_slice_frame(fr);
    const std::size_t len = static_cast<std::size_t>(degree) + 1;

    const CPoly f1 = monic_from_roots(zd.s1.roots);
    const CPoly m2 = monic_from_roots(zd.s2.roots);
    const CPoly m3 = padded(monic_from_roots(zd.s3.roots), len);
    // An empty-but-present fourth set means a nonvanishing constant
    // component; monic_from_roots({}) = 1 covers it.
    const bool have_s4 = !zd.s4.identically_zero;
    const CPoly m4 = have_s4 ? padded(monic_from_roots(zd.s4.roots), len) : CPoly{};

    // The j-slice components are affine in c for the candidate f1 + c m2 j.
    const auto base = j_components_of(f1, cpoly_scale(m2, Complex{}), fr, frj, len);
    auto dir_re = j_components_of(CPoly(len, Complex{}), m2, fr, frj, len);
    auto dir_im = j_components_of(CPoly(len, Complex{}), cpoly_scale(m2, Complex(0, 1)), fr,
                                  frj, len);

    const int unknowns = have_s4 ? 4 : 2;
    std::vector<std::array<double, 5>> rows;
    rows.reserve(4 * len);
    for (std::size_t k = 0; k < len; ++k) {
        // g1(c)[k] = m3[k]
        rows.push_back({dir_re.g1[k].real(), dir_im.g1[k].real(), 0.0, 0.0,
                        m3[k].real() - base.g1[k].real()});
        rows.push_back({dir_re.g1[k].imag(), dir_im.g1[k].imag(), 0.0, 0.0,
                        m3[k].imag() - base.g1[k].imag()});
        // g2(c)[k] = gamma m4[k]  (or 0 when the fourth set vanishes)
        const double m4re = have_s4 ? m4[k].real() : 0.0;
        const double m4im = have_s4 ? m4[k].imag() : 0.0;
        rows.push_back({dir_re.g2[k].real(), dir_im.g2[k].real(), -m4re, m4im,
                        -base.g2[k].real()});
        rows.push_back({dir_re.g2[k].imag(), dir_im.g2[k].imag(), -m4im, -m4re,
                        -base.g2[k].imag()});
    }

    std::array<double, 4> x{};
    const double residual = solve_lsq(rows, unknowns, x);
    if (residual > kLsqTol)
        throw InconsistentData("no second-component scale matches the j-slice data");

    const Complex c(x[0], x[1]);
    const auto coeffs =
        reassemble_coeffs(padded(f1, len), padded(cpoly_scale(m2, c), len), fr);
    if ((coeffs.back() - Quaternion::one()).norm() > 1e-9)
        throw InconsistentData("reconstruction is not monic");
    SlicePolynomial result(
        std::vector<Quaternion>(coeffs.begin(), coeffs.end() - 1));

    const ZeroData back = component_zero_sets(result, fr);
    const double roundtrip =
        std::max(std::max(rootset_distance(back.s1, zd.s1), rootset_distance(back.s2, zd.s2)),
                 std::max(rootset_distance(back.s3, zd.s3), rootset_distance(back.s4, zd.s4)));
    if (!(roundtrip <= kRoundTripTol))
        throw InconsistentData("reconstruction does not reproduce the zero data");
    return result;
}

std::optional<Complex> solve_bullet_factor(const SlicePolynomial& f, const SlicePolynomial& g,
                                           const Frame& fr) {
    const auto [f1, f2] = split_coeffs(f.full_coeffs(), fr);
    const auto [g1, g2] = split_coeffs(g.full_coeffs(), fr);
    (void)f1;
    (void)g1;
    Complex num{};
    double den = 0.0;
    for (std::size_t k = 0; k < g2.size(); ++k) {
        const Complex fv = k < f2.size() ? f2[k] : Complex{};
        num += std::conj(g2[k]) * fv;
        den += std::norm(g2[k]);
    }
    if (den <= kIZeroRel * kIZeroRel) return std::nullopt;
    return num / den;
}

namespace {

double poly_coeff_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        const Quaternion qa = k < a.size() ? a[k] : Quaternion{};
        const Quaternion qb = k < b.size() ? b[k] : Quaternion{};
        d = std::max(d, (qa - qb).norm());
    }
    return d;
}

}  // namespace

bool bullet_uniqueness_check(const SlicePolynomial& f, const SlicePolynomial& g,
                             const Frame& fr1, const Frame& fr2, Complex c1, Complex c2,
                             double tol) {
    if (std::abs(fr1.i().vec().dot(fr2.i().vec()) - 1.0) <= kEpsVec)
        throw ValidationError("the two frames must have distinct slice units");
    auto holds = [&](const Frame& fr, Complex c) {
        const QPowerSeries h(std::numeric_limits<double>::infinity(),
                             {Quaternion::one() + qmul(embed(c, fr.i()), fr.j().quat())});
        const QPowerSeries prod = bullet_product(g.as_series(), h, fr);
        return poly_coeff_distance(prod.coeffs, f.full_coeffs()) <= tol;
    };
    const bool both = holds(fr1, c1) && holds(fr2, c2);
    // For PSRB inputs two-slice relations force equality; outside PSRB they
    // need not (the q(1 +- j) pair), so only there is a violation an error.
    if (both && is_psrb(f) && is_psrb(g) &&
        poly_coeff_distance(f.full_coeffs(), g.full_coeffs()) > tol)
        throw Error("two-slice bullet relations hold but the polynomials differ");
    return both;
}

std::vector<RootCluster> slice_zero_set(const SlicePolynomial& f, const ImaginaryUnit& i) {
    const Frame fr = completion_frame(i);
    const std::vector<Quaternion> full = f.full_coeffs();
    const double scale = coeff_scale(full);
    const auto [p1, p2] = split_coeffs(full, fr);
    const std::vector<RootCluster> candidates = complex_roots(p1);
    const CPoly p2t = cpoly_trim(p2, kIZeroRel * scale);
    if (p2t.empty()) return candidates;
    std::vector<RootCluster> common;
    for (const auto& r : candidates)
        if (std::abs(cpoly_eval(p2t, r.z)) <= kCommonRootTol) common.push_back(r);
    return common;
}

std::vector<SliceHull> skull(const SlicePolynomial& f,
                             const std::vector<ImaginaryUnit>& slices) {
    if (slices.empty()) throw ValidationError("slice sample must be nonempty");
    std::vector<SliceHull> out;
    out.reserve(slices.size());
    for (const auto& i : slices) {
        std::vector<Point2> pts;
        for (const auto& r : slice_zero_set(f, i)) pts.push_back({r.z.real(), r.z.imag()});
        out.push_back(SliceHull{i, convex_hull_2d(std::move(pts))});
    }
    return out;
}

namespace {

bool roots_in_hull(const std::vector<RootCluster>& roots, const std::vector<Point2>& hull,
                   double inflate) {
    for (const auto& r : roots)
        if (point_hull_distance({r.z.real(), r.z.imag()}, hull) > inflate) return false;
    return true;
}

std::vector<Point2> root_points(const std::vector<RootCluster>& roots) {
    std::vector<Point2> pts;
    pts.reserve(roots.size());
    for (const auto& r : roots) pts.push_back({r.z.real(), r.z.imag()});
    return pts;
}

bool component_gauss_lucas(const CPoly& p, double scale, double inflate) {
    const CPoly pt = cpoly_trim(p, kIZeroRel * scale);
    if (pt.size() < 3) return true;  // derivative constant or zero
    const auto hull = convex_hull_2d(root_points(complex_roots(pt)));
    return roots_in_hull(complex_roots(cpoly_derivative(pt)), hull, inflate);
}

}  // namespace

bool gauss_lucas_check(const SlicePolynomial& f, const Frame& fr, double inflate) {
    const std::vector<Quaternion> full = f.full_coeffs();
    const double scale = coeff_scale(full);
    const auto [p1, p2] = split_coeffs(full, fr);
    if (!component_gauss_lucas(p1, scale, inflate)) return false;
    if (!component_gauss_lucas(p2, scale, inflate)) return false;
    if (f.degree() >= 2) {
        const auto zf = slice_zero_set(f, fr.i());
        const auto zfp = slice_zero_set(derivative_monic(f), fr.i());
        if (!zf.empty() && !zfp.empty() &&
            !roots_in_hull(zfp, convex_hull_2d(root_points(zf)), inflate))
            return false;
    }
    return true;
}

MorphismResult morphism_gamma(const SlicePolynomial& f, const Frame& fr, int slice_samples) {
    const SlicePolynomial fp = derivative_monic(f);
    if (!is_psrb(fp)) throw NotInPBSRB("the derivative is not in PSRB");

    const ZeroData zd = component_zero_sets(fp, fr);

    // P_1: reconstruct f' from its zero data, then integrate and reattach
    // the constant coefficient carried with f.
    const SlicePolynomial fp_rec = zero_bundle_project(zd, fp.degree());
    const double rec_residual = poly_coeff_distance(fp_rec.full_coeffs(), fp.full_coeffs());
    const int n = f.degree();
    std::vector<Quaternion> lower(static_cast<std::size_t>(n));
    lower[0] = f.lower[0];
    const auto fp_full = fp_rec.full_coeffs();
    for (int k = 1; k < n; ++k)
        lower[static_cast<std::size_t>(k)] =
            fp_full[static_cast<std::size_t>(k) - 1] * (static_cast<double>(n) / k);
    const SlicePolynomial f_rec(std::move(lower));

    std::vector<ImaginaryUnit> sample{fr.i(), fr.j()};
    for (const auto& v : sphere_grid(slice_samples)) sample.push_back(v);

    std::vector<SliceHull> direct = skull(f, sample);
    std::vector<SliceHull> reconstructed = skull(f_rec, sample);

    double res = 0.0;
    for (std::size_t k = 0; k < sample.size(); ++k)
        res = std::max(res, hull_hausdorff(direct[k].vertices, reconstructed[k].vertices));

    return MorphismResult{direct[0],
                          direct[1],
                          std::move(direct),
                          std::move(reconstructed),
                          rec_residual,
                          res,
                          gauss_lucas_check(f, fr)};
}

double rootset_distance(const std::vector<RootCluster>& a, const std::vector<RootCluster>& b) {
    std::vector<Complex> pa, pb;
    for (const auto& r : a) pa.insert(pa.end(), static_cast<std::size_t>(r.multiplicity), r.z);
    for (const auto& r : b) pb.insert(pb.end(), static_cast<std::size_t>(r.multiplicity), r.z);
    if (pa.size() != pb.size()) return std::numeric_limits<double>::infinity();
    // Greedy globally-closest matching; the zero sets compared here are
    // well separated relative to the tolerances in play.
    double worst = 0.0;
    std::vector<bool> ua(pa.size(), false), ub(pb.size(), false);
    for (std::size_t round = 0; round < pa.size(); ++round) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < pa.size(); ++i) {
            if (ua[i]) continue;
            for (std::size_t j = 0; j < pb.size(); ++j) {
                if (ub[j]) continue;
                const double d = std::abs(pa[i] - pb[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        ua[bi] = ub[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

double rootset_distance(const RootSet& a, const RootSet& b) {
    if (a.identically_zero != b.identically_zero)
        return std::numeric_limits<double>::infinity();
    if (a.identically_zero) return 0.0;
    return rootset_distance(a.roots, b.roots);
}

double polynomial_distance(const SlicePolynomial& a, const SlicePolynomial& b) {
    return poly_coeff_distance(a.full_coeffs(), b.full_coeffs());
}

}  // namespace slicereg
