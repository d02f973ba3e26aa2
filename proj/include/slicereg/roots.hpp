#pragma once

#include <vector>

#include "slicereg/complex_poly.hpp"

namespace slicereg {

struct RootCluster {
    Complex z;
    int multiplicity = 1;
};

/// All complex roots with multiplicities, by Durand-Kerner simultaneous
/// iteration (initial circle 1 + max|coeff|, 500-step cap, 1e-13 step
/// norm) followed by Newton polish and clustering at radius 1e-7.
std::vector<RootCluster> complex_roots(const CPoly& p);

/// Monic polynomial with exactly the given roots.
CPoly monic_from_roots(const std::vector<RootCluster>& roots);

inline int total_multiplicity(const std::vector<RootCluster>& roots) {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

}  // namespace slicereg
