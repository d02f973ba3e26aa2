#pragma once

#include <cmath>
#include <cstdint>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// splitmix64 generator. All randomness in the library and the verify
/// suites flows through this type so that a (seed, config) pair fixes the
/// output bit for bit, independent of the platform's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    Quaternion quaternion(double scale = 1.0) {
        return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
                uniform(-scale, scale)};
    }

    /// Uniform on S^3.
    UnitQuaternion unit_quaternion() {
        for (;;) {
            const Quaternion q{normal(), normal(), normal(), normal()};
            if (q.norm() > 1e-6) return UnitQuaternion::normalized(q);
        }
    }

    /// Uniform on S^2.
    ImaginaryUnit imaginary_unit() {
        for (;;) {
            const Vec3 v{normal(), normal(), normal()};
            if (v.norm() > 1e-6) return ImaginaryUnit::normalized(v);
        }
    }

    /// Uniform frame: random i, then a random direction orthogonalized
    /// against it.
    Frame frame() {
        for (;;) {
            const ImaginaryUnit i = imaginary_unit();
            const Vec3 w{normal(), normal(), normal()};
            const Vec3 perp = w - i.vec() * w.dot(i.vec());
            if (perp.norm() > 1e-6) return Frame(i, ImaginaryUnit::normalized(perp));
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace slicereg
