#pragma once

#include <vector>

#include "slicereg/harmonic.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Class of harmonic functions modulo additive real constants, held by the
/// representative with rep(0, 0) = 0 (constant coefficient zeroed).
struct HarmonicClass {
    HarmonicPoly rep;

    static HarmonicClass normalized(HarmonicPoly p);
};

/// Class of slice regular functions modulo additive quaternion constants,
/// held by the representative with rep(0) = 0.
struct BaseClass {
    QPowerSeries rep;

    static BaseClass normalized(QPowerSeries f);
};

/// Total-space element ([a], [c], (i, j)).
struct TotalElement {
    HarmonicClass a, c;
    Frame frame;
};

/// Bundle projection: F = a + i a~, G = c + i c~ with the conjugates taken
/// exactly on the polynomial data (base point the origin), then P_{i,j}
/// applied at coefficient level.
BaseClass project(const TotalElement& el, double radius = 1.0);

/// Trivialization phi_u: D-components of the representative with respect
/// to the rotated frame, as class-normalized harmonic data.
TotalElement trivialize(const UnitQuaternion& u, const BaseClass& fcl, const Frame& fr);

/// Section S_{i,j} = phi_1(., (i, j)).
TotalElement section(const Frame& fr, const BaseClass& fcl);

double class_distance(const HarmonicClass& a, const HarmonicClass& b);
double class_distance(const BaseClass& a, const BaseClass& b);
/// Coefficient distances of both harmonic parts plus the R^6 frame distance.
double element_distance(const TotalElement& a, const TotalElement& b);

/// Distance between phi_u(f, fr) and phi_v(f, R_{v~ u}(fr)); zero for a
/// compatible family of trivializations.
double compatibility_residual(const UnitQuaternion& u, const UnitQuaternion& v,
                              const BaseClass& fcl, const Frame& fr);

/// Componentwise sum; frames must agree within 1e-12.
TotalElement add(const TotalElement& a, const TotalElement& b);

/// ([a_x], [c_x], (i, j)).
TotalElement deriv_total(const TotalElement& a);

/// ([a], [c], (u i u~, u j u~)).
TotalElement rotate_total(const UnitQuaternion& u, const TotalElement& a);

/// Residual of the structure-group identity
///   project(rotate_total(u, A)) = P_{u i u~, u j u~}[ u Q_{i,j}[project(A)] u~ ]
/// with the right side computed literally through quaternion conjugation.
double rotate_identity_residual(const UnitQuaternion& u, const TotalElement& a);

/// section(fr, fcl) for each frame of the sample.
std::vector<TotalElement> fiber_of(const BaseClass& fcl, const std::vector<Frame>& frames);

/// Deterministic orthogonal completion of a slice unit, giving the frame
/// (i, completion); used wherever a single slice must become a frame.
Frame completion_frame(const ImaginaryUnit& i);

/// Deterministic Fibonacci-sphere sample of T: i on the spiral grid, j by
/// the fixed orthogonal completion.
std::vector<Frame> frame_grid(int n);

/// Deterministic Fibonacci-sphere sample of S^2.
std::vector<ImaginaryUnit> sphere_grid(int n);

}  // namespace slicereg
