#pragma once

#include <array>

namespace slicereg {

/// One row per (subcommand, --op) pair, naming the library operation it
/// reaches. The CLI builds its dispatch from this table and the coverage
/// test walks it against kModuleOperations.
struct CommandEntry {
    const char* subcommand;
    const char* op;  // nullptr when the subcommand takes no --op
    const char* operation;
};

inline constexpr std::array<CommandEntry, 33> kCommandTable{{
    {"eval", nullptr, "eval"},
    {"quat", "mul", "qmul"},
    {"quat", "unit-of", "imaginary_unit_of"},
    {"quat", "rotate", "rotate"},
    {"quat", "rotate-frame", "rotate_frame"},
    {"series", "split", "split"},
    {"series", "extend", "extend"},
    {"series", "representation", "representation"},
    {"series", "dcomponents", "d_components"},
    {"series", "identities", "slice_identities_check"},
    {"series", "star", "star_product"},
    {"series", "bullet", "bullet_product"},
    {"series", "derivative", "derivative"},
    {"series", "roundtrip", "roundtrip_PQ"},
    {"conjugate", "value", "conjugate_harmonic"},
    {"conjugate", "independence", "path_independence_residual"},
    {"schwarz", "complex", "schwarz_complex"},
    {"schwarz", "coeffs", "quaternionic_schwarz_coeffs"},
    {"schwarz", "eval", "quaternionic_schwarz_eval"},
    {"bundle", "project", "project"},
    {"bundle", "section", "section"},
    {"bundle", "trivialize", "trivialize"},
    {"bundle", "compatibility", "compatibility_residual"},
    {"bundle", "add", "add"},
    {"bundle", "derive", "deriv_total"},
    {"bundle", "rotate", "rotate_total"},
    {"bundle", "fiber", "fiber_of"},
    {"zeros", "components", "component_zero_sets"},
    {"zeros", "reconstruct", "zero_bundle_project"},
    {"zeros", "slice", "slice_zero_set"},
    {"zeros", "uniqueness", "bullet_uniqueness_check"},
    {"zeros", "roots", "complex_roots"},
    {"zeros", "psrb", "is_psrb"},
}};

/// Rows without --op variants, covered by dedicated subcommands.
inline constexpr std::array<CommandEntry, 5> kStandaloneCommands{{
    {"hull", nullptr, "convex_hull_2d"},
    {"skull", nullptr, "skull"},
    {"gauss-lucas", nullptr, "gauss_lucas_check"},
    {"morphism", nullptr, "morphism_gamma"},
    {"verify", nullptr, "cmd_verify"},
}};

/// Every module operation the CLI must reach.
inline constexpr std::array<const char*, 38> kModuleOperations{
    "qmul",
    "imaginary_unit_of",
    "rotate",
    "rotate_frame",
    "eval",
    "split",
    "extend",
    "representation",
    "d_components",
    "slice_identities_check",
    "star_product",
    "bullet_product",
    "derivative",
    "roundtrip_PQ",
    "conjugate_harmonic",
    "path_independence_residual",
    "schwarz_complex",
    "quaternionic_schwarz_coeffs",
    "quaternionic_schwarz_eval",
    "project",
    "section",
    "trivialize",
    "compatibility_residual",
    "add",
    "deriv_total",
    "rotate_total",
    "fiber_of",
    "complex_roots",
    "is_psrb",
    "component_zero_sets",
    "zero_bundle_project",
    "bullet_uniqueness_check",
    "slice_zero_set",
    "convex_hull_2d",
    "skull",
    "gauss_lucas_check",
    "morphism_gamma",
    "cmd_verify",
};

}  // namespace slicereg
