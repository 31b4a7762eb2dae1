#ifndef FOCAL_ISOMETRY_HPP
#define FOCAL_ISOMETRY_HPP

#include <string>
#include <variant>

#include "focal/lattice.hpp"

namespace focal {

// Witness of isometry up to rescaling: U^T G1 U = scale * G2 exactly, with U
// integer unimodular.
struct IsometryCertificate {
    Rat scale;
    Mat transform;
};

struct NotIsometric {
    std::string witness;
};

// Largest rank for which the exact decision runs; above it callers get
// RankTooLargeError and should fall back to spectra / root-graph invariants.
inline constexpr int kMaxExactIsometryRank = 8;

// Divides the Gram by the minimal norm; the result has minimal norm 1.
// Returns (normalized lattice, scale divided out).
std::pair<Lattice, Rat> normalize_scale(const Lattice& lat, const Budget& budget = Budget());

// Short-vector image backtracking on the normalized, LLL-reduced Grams.
// Deterministic candidate order; every returned certificate is re-verified.
std::variant<IsometryCertificate, NotIsometric> is_isometric_up_to_scale(
    const Lattice& left, const Lattice& right, const Budget& budget = Budget());

}  // namespace focal

#endif
