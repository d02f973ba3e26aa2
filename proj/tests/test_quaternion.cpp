#include <doctest.h>

#include "slicereg/quaternion.hpp"
#include "slicereg/rng.hpp"

using namespace slicereg;

namespace {
const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();
const Quaternion e3 = Quaternion::e3();

bool near(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    return (a - b).norm() <= tol;
}
}  // namespace

TEST_CASE("quaternion basis relations") {
    CHECK(near(qmul(e1, e2), e3));
    CHECK(near(qmul(e2, e1), -e3));
    CHECK(near(qmul(e2, e3), e1));
    CHECK(near(qmul(e3, e1), e2));
    CHECK(near(qmul(e1, e1), Quaternion(-1)));

    const Quaternion q{0.3, -1.2, 0.7, 2.0};
    CHECK(near(qmul(q, Quaternion::one()), q));
    CHECK(near(qmul(Quaternion::one(), q), q));

    // (1 + e1)(1 - e1) = 2
    CHECK(near(qmul(Quaternion::one() + e1, Quaternion::one() - e1), Quaternion(2)));
}

TEST_CASE("conjugation and norm") {
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const Quaternion q = rng.quaternion(3.0);
        CHECK(near(q.conj().conj(), q, 0.0));
        const Quaternion qqbar = qmul(q, q.conj());
        CHECK(std::abs(qqbar.x0 - q.norm_sq()) <= 1e-12 * (1.0 + q.norm_sq()));
        CHECK(qqbar.vec().norm() <= 1e-12 * (1.0 + q.norm_sq()));
    }
}

TEST_CASE("imaginary_unit_of") {
    const Quaternion q{2, 0, 3, 0};
    CHECK(near(imaginary_unit_of(q).quat(), e2));

    const Quaternion r = e1 + e2;
    const Quaternion expected = (e1 + e2) / std::sqrt(2.0);
    CHECK(near(imaginary_unit_of(r).quat(), expected));

    CHECK_THROWS_AS(imaginary_unit_of(Quaternion(5)), DegenerateVector);

    // as a quaternion every imaginary unit squares to -1
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const Quaternion u = rng.imaginary_unit().quat();
        CHECK(near(qmul(u, u), Quaternion(-1)));
    }
}

TEST_CASE("rotation") {
    const UnitQuaternion id = UnitQuaternion::identity();
    const Quaternion w{0.5, 1.0, -2.0, 0.25};
    CHECK(near(rotate(id, w), w));

    const UnitQuaternion u(Quaternion(1, 1, 0, 0) / std::sqrt(2.0));
    CHECK(near(rotate(u, e2), e3));

    Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        const UnitQuaternion v = rng.unit_quaternion();
        CHECK(std::abs(rotate(v, e1).x0) <= 1e-12);  // R^3 is preserved
        const Quaternion x = rng.quaternion(2.0);
        CHECK(std::abs(rotate(v, x).norm() - x.norm()) <= 1e-12 * (1.0 + x.norm()));
    }
}

TEST_CASE("rotate_frame") {
    const Frame fr = Frame::standard();
    CHECK(frame_distance(rotate_frame(UnitQuaternion::identity(), fr), fr) == 0.0);

    const UnitQuaternion u(Quaternion(1, 0, 0, 1) / std::sqrt(2.0));
    const Frame rotated = rotate_frame(u, fr);
    CHECK(near(rotated.i().quat(), e2));
    CHECK(near(rotated.j().quat(), -e1));

    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const UnitQuaternion v = rng.unit_quaternion();
        const Frame f2 = rng.frame();
        const Frame back = rotate_frame(v.conj(), rotate_frame(v, f2));
        CHECK(frame_distance(back, f2) <= 1e-12);

        const UnitQuaternion w = rng.unit_quaternion();
        const Frame ab = rotate_frame(v, rotate_frame(w, f2));
        const Frame prod = rotate_frame(UnitQuaternion::normalized(qmul(v.quat(), w.quat())), f2);
        CHECK(frame_distance(ab, prod) <= 1e-12);

        // image still satisfies the frame invariants (ctor would throw)
        CHECK_NOTHROW(Frame(ab.i(), ab.j()));
    }
}

TEST_CASE("construction invariants are enforced") {
    CHECK_THROWS_AS(ImaginaryUnit(0.5, 0, 0), ValidationError);
    CHECK_THROWS_AS(Frame(ImaginaryUnit(1, 0, 0), ImaginaryUnit(1, 0, 0)), ValidationError);
    CHECK_THROWS_AS(UnitQuaternion(Quaternion(2)), ValidationError);
    CHECK_NOTHROW(Frame(ImaginaryUnit(0, 0, 1), ImaginaryUnit(1, 0, 0)));

    // the gram matrix of {1, i, j, ij} is the identity
    Rng rng(19);
    for (int k = 0; k < 50; ++k) {
        const Frame fr = rng.frame();
        const Quaternion basis[4] = {Quaternion::one(), fr.i().quat(), fr.j().quat(), fr.ij()};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(std::abs(basis[a].dot(basis[b]) - (a == b ? 1.0 : 0.0)) <= 1e-12);
    }
}
