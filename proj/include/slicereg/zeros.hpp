#pragma once

#include <optional>
#include <vector>

#include "slicereg/bundle.hpp"
#include "slicereg/hull.hpp"
#include "slicereg/power_series.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/roots.hpp"

namespace slicereg {

/// Monic slice regular polynomial a_0 + q a_1 + ... + q^{n-1} a_{n-1} + q^n.
/// Only the lower coefficients are stored; the leading 1 is implicit.
struct SlicePolynomial {
    std::vector<Quaternion> lower;

    explicit SlicePolynomial(std::vector<Quaternion> low);

    int degree() const { return static_cast<int>(lower.size()); }
    /// a_0 .. a_{n-1}, 1.
    std::vector<Quaternion> full_coeffs() const;
    Quaternion value(const Quaternion& q) const;
    /// Entire function; the series wrapper just carries an infinite radius.
    QPowerSeries as_series() const;
};

/// f'/n: the derivative renormalized to monic form. Zero sets and PSRB
/// membership are invariant under the real rescale.
SlicePolynomial derivative_monic(const SlicePolynomial& f);

/// One slice-restricted zero set; identically-zero components are marked
/// rather than rooted.
struct RootSet {
    bool identically_zero = false;
    std::vector<RootCluster> roots;

    /// Roots of a component that is not identically zero; otherwise throws
    /// IdenticallyZeroComponent with the component label.
    const std::vector<RootCluster>& checked_roots(const char* label) const;
};

/// The four component zero sets
///   s1 = Z_{f - i f i} cap C(i),  s2 = Z_{f + i f i} cap C(i),
///   s3 = Z_{f - j f j} cap C(j),  s4 = Z_{f + j f j} cap C(j),
/// i.e. the total-space element of the zero-set bundle over the frame.
struct ZeroData {
    Frame frame;
    RootSet s1, s2, s3, s4;
};

/// True iff the vector parts of the coefficients span R^3
/// (third singular value above 1e-10).
bool is_psrb(const std::vector<Quaternion>& coeffs);
bool is_psrb(const SlicePolynomial& f);

ZeroData component_zero_sets(const SlicePolynomial& f, const Frame& fr);

/// Inverse of component_zero_sets on PSRB data: rebuilds the unique monic
/// polynomial with the given four zero sets. The scale of the second
/// component is recovered from the j-slice data by a real-linear least
/// squares solve (residual <= 1e-8, else InconsistentData).
SlicePolynomial zero_bundle_project(const ZeroData& zd, int degree);

/// Least-squares c with f2 = c g2 on the slice; nullopt when g2 vanishes.
std::optional<Complex> solve_bullet_factor(const SlicePolynomial& f, const SlicePolynomial& g,
                                           const Frame& fr);

/// True iff f = g bullet (1 + c1 j1) and f = g bullet (1 + c2 j2) both hold
/// within tol; in that case f and g must agree coefficientwise (the
/// two-slice uniqueness statement) and a violation throws.
bool bullet_uniqueness_check(const SlicePolynomial& f, const SlicePolynomial& g,
                             const Frame& fr1, const Frame& fr2, Complex c1, Complex c2,
                             double tol = 1e-10);

/// Z_f cap C(i): common zeros of the two split components, as slice
/// coordinates; multiplicities from the monic component.
std::vector<RootCluster> slice_zero_set(const SlicePolynomial& f, const ImaginaryUnit& i);

/// Per-slice hulls of the slice zero sets; their union approximates SKull.
std::vector<SliceHull> skull(const SlicePolynomial& f, const std::vector<ImaginaryUnit>& slices);

/// Component-level Gauss-Lucas (roots of p' inside the inflated hull of
/// the roots of p, per split component) plus the slice-level containment
/// Z_{f'} cap C(i) in Kull(Z_f cap C(i)) when both sets are nonempty.
bool gauss_lucas_check(const SlicePolynomial& f, const Frame& fr, double inflate = 1e-9);

/// The zero-set bundle morphism evaluated on (f, f'): Gamma_1 gives the
/// hull pair at (i, j), Gamma_2 the sampled SKull; the second route goes
/// through the zero data of f' and the reconstruction.
struct MorphismResult {
    SliceHull hull_i, hull_j;                    // Gamma_1 output
    std::vector<SliceHull> skull_direct;         // P_2 after Gamma_1 (route through f)
    std::vector<SliceHull> skull_reconstructed;  // Gamma_2 after P_1 (route through zero data)
    double reconstruction_residual = 0.0;        // P_1 output vs f', coefficient norm
    double diagram_residual = 0.0;               // max slice-wise Hausdorff between routes
    bool gauss_lucas_ok = false;
};

MorphismResult morphism_gamma(const SlicePolynomial& f, const Frame& fr, int slice_samples = 16);

/// Max matched distance between two root multisets (+inf on mismatch of
/// totals or identically-zero markers).
double rootset_distance(const RootSet& a, const RootSet& b);
double rootset_distance(const std::vector<RootCluster>& a, const std::vector<RootCluster>& b);

/// Coefficient max-norm distance (monic leading terms included).
double polynomial_distance(const SlicePolynomial& a, const SlicePolynomial& b);

}  // namespace slicereg
