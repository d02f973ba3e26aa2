#include "slicereg/bundle.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/errors.hpp"

namespace slicereg {

HarmonicClass HarmonicClass::normalized(HarmonicPoly p) {
    // Im of the constant never contributes to the value, so zeroing the
    // whole coefficient makes class equality a plain coefficient test.
    if (!p.coeffs.empty()) p.coeffs[0] = Complex{};
    return HarmonicClass{std::move(p)};
}

BaseClass BaseClass::normalized(QPowerSeries f) {
    f.coeffs[0] = Quaternion{};
    return BaseClass{std::move(f)};
}

BaseClass project(const TotalElement& el, double radius) {
    // With a = Re p and the conjugate pinned to 0 at the origin, a + i a~
    // is exactly the complex polynomial p on the slice.
    const CPoly& f1 = el.a.rep.coeffs;
    const CPoly& f2 = el.c.rep.coeffs;
    return BaseClass::normalized(QPowerSeries(radius, reassemble_coeffs(f1, f2, el.frame)));
}

TotalElement trivialize(const UnitQuaternion& u, const BaseClass& fcl, const Frame& fr) {
    const Frame rotated = rotate_frame(u, fr);
    auto [f1, f2] = split_coeffs(fcl.rep.coeffs, rotated);
    return TotalElement{HarmonicClass::normalized(HarmonicPoly{std::move(f1)}),
                        HarmonicClass::normalized(HarmonicPoly{std::move(f2)}), rotated};
}

TotalElement section(const Frame& fr, const BaseClass& fcl) {
    return trivialize(UnitQuaternion::identity(), fcl, fr);
}

namespace {

double coeff_distance(const CPoly& a, const CPoly& b) {
    double d = 0.0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
        const Complex ca = n < a.size() ? a[n] : Complex{};
        const Complex cb = n < b.size() ? b[n] : Complex{};
        d = std::max(d, std::abs(ca - cb));
    }
    return d;
}

}  // namespace

double class_distance(const HarmonicClass& a, const HarmonicClass& b) {
    return coeff_distance(a.rep.coeffs, b.rep.coeffs);
}

double class_distance(const BaseClass& a, const BaseClass& b) {
    double d = 0.0;
    const auto& ca = a.rep.coeffs;
    const auto& cb = b.rep.coeffs;
    for (std::size_t n = 0; n < std::max(ca.size(), cb.size()); ++n) {
        const Quaternion qa = n < ca.size() ? ca[n] : Quaternion{};
        const Quaternion qb = n < cb.size() ? cb[n] : Quaternion{};
        d = std::max(d, (qa - qb).norm());
    }
    return d;
}

double element_distance(const TotalElement& a, const TotalElement& b) {
    return class_distance(a.a, b.a) + class_distance(a.c, b.c) + frame_distance(a.frame, b.frame);
}

double compatibility_residual(const UnitQuaternion& u, const UnitQuaternion& v,
                              const BaseClass& fcl, const Frame& fr) {
    const UnitQuaternion p = UnitQuaternion::normalized(qmul(v.quat().conj(), u.quat()));
    const TotalElement lhs = trivialize(u, fcl, fr);
    const TotalElement rhs = trivialize(v, fcl, rotate_frame(p, fr));
    return element_distance(lhs, rhs);
}

TotalElement add(const TotalElement& a, const TotalElement& b) {
    if (frame_distance(a.frame, b.frame) > kEpsVec)
        throw FrameMismatch("total-space elements live over different frames");
    return TotalElement{
        HarmonicClass::normalized(HarmonicPoly{cpoly_add(a.a.rep.coeffs, b.a.rep.coeffs)}),
        HarmonicClass::normalized(HarmonicPoly{cpoly_add(a.c.rep.coeffs, b.c.rep.coeffs)}),
        a.frame};
}

TotalElement deriv_total(const TotalElement& a) {
    return TotalElement{HarmonicClass::normalized(a.a.rep.derivative_x()),
                        HarmonicClass::normalized(a.c.rep.derivative_x()), a.frame};
}

TotalElement rotate_total(const UnitQuaternion& u, const TotalElement& a) {
    return TotalElement{a.a, a.c, rotate_frame(u, a.frame)};
}

double rotate_identity_residual(const UnitQuaternion& u, const TotalElement& a) {
    const BaseClass via_rotation = project(rotate_total(u, a));
    // Literal right-hand side: conjugate every coefficient of Q[project(A)].
    const BaseClass base = project(a);
    std::vector<Quaternion> conjugated(base.rep.coeffs.size());
    for (std::size_t n = 0; n < conjugated.size(); ++n)
        conjugated[n] = rotate(u, base.rep.coeffs[n]);
    const BaseClass via_conjugation =
        BaseClass::normalized(QPowerSeries(base.rep.radius, std::move(conjugated)));
    return class_distance(via_rotation, via_conjugation);
}

std::vector<TotalElement> fiber_of(const BaseClass& fcl, const std::vector<Frame>& frames) {
    std::vector<TotalElement> out;
    out.reserve(frames.size());
    for (const auto& fr : frames) out.push_back(section(fr, fcl));
    return out;
}

Frame completion_frame(const ImaginaryUnit& i) {
    // Orthogonalize the coordinate axis least aligned with i.
    const Vec3 v = i.vec();
    Vec3 axis{1, 0, 0};
    double best = std::abs(v.x);
    if (std::abs(v.y) < best) {
        axis = {0, 1, 0};
        best = std::abs(v.y);
    }
    if (std::abs(v.z) < best) axis = {0, 0, 1};
    const Vec3 perp = axis - v * axis.dot(v);
    return Frame(i, ImaginaryUnit::normalized(perp));
}

std::vector<ImaginaryUnit> sphere_grid(int n) {
    std::vector<ImaginaryUnit> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    const double golden = 2.399963229728653322231555;  // 2 pi (2 - phi)
    for (int k = 0; k < n; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double t = golden * k;
        out.push_back(ImaginaryUnit::normalized({r * std::cos(t), r * std::sin(t), z}));
    }
    return out;
}

std::vector<Frame> frame_grid(int n) {
    std::vector<Frame> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (const auto& i : sphere_grid(n)) out.push_back(completion_frame(i));
    return out;
}

}  // namespace slicereg
