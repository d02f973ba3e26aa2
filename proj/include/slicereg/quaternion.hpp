#pragma once

#include <array>
#include <cmath>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Below this, a vector part is treated as zero and slice-dependent
/// operations require an explicit frame.
inline constexpr double kEpsVec = 1e-12;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

/// Quaternion q = x0 + x1 e1 + x2 e2 + x3 e3 with the basis relations
/// e1 e2 = -e2 e1 = e3 (and cyclic).
struct Quaternion {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w, double a, double b, double c) : x0(w), x1(a), x2(b), x3(c) {}
    explicit constexpr Quaternion(double w) : x0(w) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
    static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
    static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

    double real() const { return x0; }
    Vec3 vec() const { return {x1, x2, x3}; }
    double vec_norm() const { return vec().norm(); }

    Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
    double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm_sq()); }

    Quaternion operator+(const Quaternion& o) const {
        return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
    }
    Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }
    Quaternion operator*(double s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }
    Quaternion operator/(double s) const { return {x0 / s, x1 / s, x2 / s, x3 / s}; }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

    /// Euclidean inner product on R^4, <a,b> = Re(a conj(b)).
    double dot(const Quaternion& o) const {
        return x0 * o.x0 + x1 * o.x1 + x2 * o.x2 + x3 * o.x3;
    }
};

/// Hamilton product with e1 e2 = e3 orientation.
inline Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }
inline Quaternion operator*(double s, const Quaternion& a) { return a * s; }

/// Multiplicative inverse; requires a nonzero argument.
inline Quaternion qinv(const Quaternion& a) {
    const double n2 = a.norm_sq();
    if (n2 == 0.0) throw DegenerateVector("qinv of zero quaternion");
    return a.conj() / n2;
}

/// Unit vector of S^2, stored as its R^3 coordinates. As a quaternion it
/// squares to -1 and spans the slice C(i) = R + R i.
class ImaginaryUnit {
public:
    explicit ImaginaryUnit(const Vec3& v) : v_(v) {
        if (std::abs(v.norm() - 1.0) > kEpsVec)
            throw ValidationError("imaginary unit is not unit length");
    }
    ImaginaryUnit(double a, double b, double c) : ImaginaryUnit(Vec3{a, b, c}) {}

    /// Normalizes an arbitrary nonzero vector first.
    static ImaginaryUnit normalized(const Vec3& v) {
        const double n = v.norm();
        if (n <= kEpsVec) throw DegenerateVector("cannot normalize near-zero vector");
        return ImaginaryUnit(v * (1.0 / n));
    }

    const Vec3& vec() const { return v_; }
    Quaternion quat() const { return {0.0, v_.x, v_.y, v_.z}; }

private:
    Vec3 v_;
};

/// I_q = vec(q)/|vec(q)|. Throws DegenerateVector for (near-)real q: the
/// caller must then pick a slice explicitly (the "choose y = 0" convention).
inline ImaginaryUnit imaginary_unit_of(const Quaternion& q) {
    const Vec3 v = q.vec();
    if (v.norm() <= kEpsVec) throw DegenerateVector("quaternion has no vector part");
    return ImaginaryUnit::normalized(v);
}

/// Ordered orthonormal pair (i, j) with {i, j, ij} co-oriented with the
/// standard basis; the fiber space T of every bundle in this library.
/// Validated once at construction; all operations may assume validity.
class Frame {
public:
    Frame(const ImaginaryUnit& i, const ImaginaryUnit& j) : i_(i), j_(j) {
        if (std::abs(i.vec().dot(j.vec())) > kEpsVec)
            throw ValidationError("frame vectors are not orthogonal");
        const Vec3 k = i.vec().cross(j.vec());
        // det[i | j | ij] with ij the quaternion product, which equals i x j here
        const double det = k.dot(k);
        if (det <= kEpsVec) throw ValidationError("frame is not co-oriented with the standard basis");
        ij_ = qmul(i.quat(), j.quat());
    }

    const ImaginaryUnit& i() const { return i_; }
    const ImaginaryUnit& j() const { return j_; }
    /// Cached quaternion product i*j (a pure unit vector orthogonal to both).
    const Quaternion& ij() const { return ij_; }

    static Frame standard() { return Frame(ImaginaryUnit(1, 0, 0), ImaginaryUnit(0, 1, 0)); }

private:
    ImaginaryUnit i_, j_;
    Quaternion ij_;
};

/// Element of S^3 acting on frames through R_u(i, j) = (u i u~, u j u~).
class UnitQuaternion {
public:
    explicit UnitQuaternion(const Quaternion& q) : q_(q) {
        if (std::abs(q.norm() - 1.0) > kEpsVec)
            throw ValidationError("quaternion is not unit length");
    }

    static UnitQuaternion normalized(const Quaternion& q) {
        const double n = q.norm();
        if (n <= kEpsVec) throw DegenerateVector("cannot normalize near-zero quaternion");
        return UnitQuaternion(q / n);
    }

    static UnitQuaternion identity() { return UnitQuaternion(Quaternion::one()); }

    const Quaternion& quat() const { return q_; }
    UnitQuaternion conj() const { return UnitQuaternion(q_.conj()); }

private:
    Quaternion q_;
};

/// w -> u w u~; an isometry of H preserving R^3 and the real line.
inline Quaternion rotate(const UnitQuaternion& u, const Quaternion& w) {
    return qmul(qmul(u.quat(), w), u.quat().conj());
}

inline ImaginaryUnit rotate(const UnitQuaternion& u, const ImaginaryUnit& v) {
    return ImaginaryUnit::normalized(rotate(u, v.quat()).vec());
}

/// Structure-group action R_u on T.
inline Frame rotate_frame(const UnitQuaternion& u, const Frame& fr) {
    return Frame(rotate(u, fr.i()), rotate(u, fr.j()));
}

/// || (i,j) - (k,l) ||_{R^6}
inline double frame_distance(const Frame& a, const Frame& b) {
    const Vec3 di = a.i().vec() - b.i().vec();
    const Vec3 dj = a.j().vec() - b.j().vec();
    return std::sqrt(di.dot(di) + dj.dot(dj));
}

}  // namespace slicereg
