#include <doctest.h>

#include "slicereg/bundle.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/rng.hpp"

using namespace slicereg;

namespace {
const Quaternion e2 = Quaternion::e2();
const Quaternion one = Quaternion::one();

BaseClass random_class(Rng& rng, int deg) {
    std::vector<Quaternion> c(static_cast<std::size_t>(deg) + 1);
    for (auto& q : c) q = rng.quaternion();
    return BaseClass::normalized(QPowerSeries(1.0, std::move(c)));
}

HarmonicClass re_z() { return HarmonicClass::normalized(HarmonicPoly{{Complex{}, Complex(1, 0)}}); }
HarmonicClass zero_class() { return HarmonicClass::normalized(HarmonicPoly{{}}); }
}  // namespace

TEST_CASE("project") {
    const Frame fr = Frame::standard();

    // (Re z, 0, (e1,e2)) projects to the class of f(q) = q
    const BaseClass q_class = project(TotalElement{re_z(), zero_class(), fr});
    CHECK(q_class.rep.coeffs.size() == 2);
    CHECK((q_class.rep.coeffs[1] - one).norm() <= 1e-15);
    CHECK(q_class.rep.coeffs[0].norm() == 0.0);

    // (0, Re z, (e1,e2)) projects to the class of q e2
    const BaseClass qe2 = project(TotalElement{zero_class(), re_z(), fr});
    CHECK((qe2.rep.coeffs[1] - e2).norm() <= 1e-15);

    const BaseClass z = project(TotalElement{zero_class(), zero_class(), fr});
    for (const auto& c : z.rep.coeffs) CHECK(c.norm() == 0.0);
}

TEST_CASE("trivialize and section") {
    const Frame fr = Frame::standard();
    const BaseClass q_class = BaseClass::normalized(QPowerSeries(1.0, {Quaternion{}, one}));

    const TotalElement el = trivialize(UnitQuaternion::identity(), q_class, fr);
    CHECK(el.a.rep.coeffs.size() == 2);
    CHECK(std::abs(el.a.rep.coeffs[1] - Complex(1, 0)) <= 1e-15);
    CHECK(cpoly_max_abs(el.c.rep.coeffs) == 0.0);
    CHECK(frame_distance(el.frame, fr) == 0.0);

    const BaseClass zero = BaseClass::normalized(QPowerSeries(1.0, {Quaternion{}}));
    Rng rng(67);
    const UnitQuaternion u = rng.unit_quaternion();
    const TotalElement zel = trivialize(u, zero, fr);
    CHECK(cpoly_max_abs(zel.a.rep.coeffs) == 0.0);
    CHECK(cpoly_max_abs(zel.c.rep.coeffs) == 0.0);
    CHECK(frame_distance(zel.frame, rotate_frame(u, fr)) == 0.0);

    // f(q) = q^2 sections to the Re z^2 class in the first slot
    const BaseClass sq = BaseClass::normalized(QPowerSeries(1.0, {Quaternion{}, Quaternion{}, one}));
    const TotalElement sect = section(fr, sq);
    CHECK(std::abs(sect.a.rep.coeffs[2] - Complex(1, 0)) <= 1e-15);

    for (int k = 0; k < 200; ++k) {
        const BaseClass fcl = random_class(rng, 1 + static_cast<int>(rng.next() % 12));
        const Frame frk = rng.frame();
        CHECK(class_distance(project(section(frk, fcl)), fcl) <= 1e-10);
        CHECK(class_distance(project(trivialize(rng.unit_quaternion(), fcl, frk)), fcl) <= 1e-10);
    }
}

TEST_CASE("trivialization compatibility") {
    Rng rng(71);
    const Frame fr = Frame::standard();
    const BaseClass fcl = random_class(rng, 8);

    const UnitQuaternion u = rng.unit_quaternion();
    CHECK(compatibility_residual(u, u, fcl, fr) == 0.0);

    // v = 1: phi_u(f, fr) = phi_1(f, R_u(fr))
    CHECK(compatibility_residual(u, UnitQuaternion::identity(), fcl, fr) <= 1e-12);

    for (int k = 0; k < 100; ++k)
        CHECK(compatibility_residual(rng.unit_quaternion(), rng.unit_quaternion(),
                                     random_class(rng, 10), rng.frame()) <= 1e-10);
}

TEST_CASE("total-space operations") {
    Rng rng(73);
    const Frame fr = rng.frame();
    const BaseClass fcl = random_class(rng, 9);
    const BaseClass gcl = random_class(rng, 7);
    const TotalElement A = section(fr, fcl);
    const TotalElement B = section(fr, gcl);
    const TotalElement zero = section(fr, BaseClass::normalized(QPowerSeries(1.0, {})));

    // A + 0 = A, and A + A doubles the representatives
    CHECK(element_distance(add(A, zero), A) == 0.0);
    const TotalElement AA = add(A, A);
    for (std::size_t n = 0; n < A.a.rep.coeffs.size(); ++n)
        CHECK(std::abs(AA.a.rep.coeffs[n] - 2.0 * A.a.rep.coeffs[n]) <= 1e-15);

    CHECK_THROWS_AS(add(A, section(rng.frame(), fcl)), FrameMismatch);

    // projection is additive
    const auto pa = project(A).rep.coeffs;
    const auto pb = project(B).rep.coeffs;
    std::vector<Quaternion> sum(std::max(pa.size(), pb.size()));
    for (std::size_t n = 0; n < sum.size(); ++n) {
        if (n < pa.size()) sum[n] += pa[n];
        if (n < pb.size()) sum[n] += pb[n];
    }
    CHECK(class_distance(project(add(A, B)),
                         BaseClass::normalized(QPowerSeries(1.0, sum))) <= 1e-10);

    // derivative of the projection = projection of the x-derivatives
    CHECK(class_distance(project(deriv_total(A)),
                         BaseClass::normalized(derivative(project(A).rep))) <= 1e-10);

    // deriv_total on Re z^2 gives the Re 2z class
    const TotalElement quad{HarmonicClass::normalized(HarmonicPoly{{Complex{}, Complex{}, Complex(1, 0)}}),
                            zero_class(), fr};
    const TotalElement dq = deriv_total(quad);
    CHECK(std::abs(dq.a.rep.coeffs[1] - Complex(2, 0)) <= 1e-15);

    const TotalElement consts{zero_class(), zero_class(), fr};
    const TotalElement dc = deriv_total(consts);
    CHECK(cpoly_max_abs(dc.a.rep.coeffs) == 0.0);
}

TEST_CASE("structure group action on total elements") {
    Rng rng(79);
    const TotalElement A = section(rng.frame(), random_class(rng, 10));

    CHECK(element_distance(rotate_total(UnitQuaternion::identity(), A), A) == 0.0);

    const UnitQuaternion u = rng.unit_quaternion();
    CHECK(element_distance(rotate_total(u.conj(), rotate_total(u, A)), A) <= 1e-12);

    for (int k = 0; k < 100; ++k) {
        const TotalElement E = section(rng.frame(), random_class(rng, 10));
        CHECK(rotate_identity_residual(rng.unit_quaternion(), E) <= 1e-10);
    }
}

TEST_CASE("fibers") {
    Rng rng(83);
    const std::vector<Frame> frames = frame_grid(16);
    CHECK(frames.size() == 16);

    // intrinsic functions have a vanishing second slot over every frame
    // (up to the roundoff in the sampled frames themselves)
    std::vector<Quaternion> realc{Quaternion{}, Quaternion(1.5), Quaternion(-0.25)};
    const BaseClass intrinsic = BaseClass::normalized(QPowerSeries(1.0, realc));
    for (const auto& el : fiber_of(intrinsic, frames)) {
        CHECK(cpoly_max_abs(el.c.rep.coeffs) <= 1e-14);
        CHECK(class_distance(project(el), intrinsic) <= 1e-10);
    }

    // a function with coefficients in C(i0) has zero second slot exactly at
    // frames whose slice is i0
    const ImaginaryUnit i0 = rng.imaginary_unit();
    const Frame fr0 = completion_frame(i0);
    std::vector<Quaternion> cc{Quaternion{}, embed(Complex(0.3, -1.1), i0),
                               embed(Complex(-0.2, 0.8), i0)};
    const BaseClass slicewise = BaseClass::normalized(QPowerSeries(1.0, cc));
    const TotalElement at0 = section(fr0, slicewise);
    CHECK(cpoly_max_abs(at0.c.rep.coeffs) <= 1e-15);

    // zero class gives all-zero elements
    for (const auto& el : fiber_of(BaseClass::normalized(QPowerSeries(1.0, {})), frames)) {
        CHECK(cpoly_max_abs(el.a.rep.coeffs) == 0.0);
        CHECK(cpoly_max_abs(el.c.rep.coeffs) == 0.0);
    }
}

TEST_CASE("class normalization is idempotent") {
    Rng rng(89);
    for (int k = 0; k < 20; ++k) {
        CPoly c(static_cast<std::size_t>(5));
        for (auto& v : c) v = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const HarmonicClass once = HarmonicClass::normalized(HarmonicPoly{c});
        const HarmonicClass twice = HarmonicClass::normalized(once.rep);
        CHECK(class_distance(once, twice) == 0.0);

        const BaseClass b1 = random_class(rng, 6);
        const BaseClass b2 = BaseClass::normalized(b1.rep);
        CHECK(class_distance(b1, b2) == 0.0);
    }
}
