#ifndef FOCAL_QUADSPACE_HPP
#define FOCAL_QUADSPACE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "focal/linalg.hpp"

namespace focal {

// Positive definite symmetric bilinear form in lattice-basis coordinates.
// All geometry in the library goes through <u,v> = u^T G v, which keeps
// hexagonal or E8-style lattices exactly rational.
class GramForm {
public:
    // Validates symmetry and positive definiteness (LDL^T pivots).
    explicit GramForm(Mat entries);

    int rank() const { return n_; }
    const Mat& entries() const { return g_; }
    const Rat& at(int i, int j) const { return g_[i][j]; }
    const Ldlt& factor() const { return ldlt_; }

    bool operator==(const GramForm& o) const { return g_ == o.g_; }

private:
    int n_;
    Mat g_;
    Ldlt ldlt_;
};

Rat inner(const Vec& u, const Vec& v, const GramForm& g);
Rat norm2(const Vec& v, const GramForm& g);
Rat dist2(const Vec& u, const Vec& v, const GramForm& g);

// Affine subspace: base + span(directions).  codim = ambient rank minus the
// number of (independent) direction vectors.
struct AffineFlat {
    Vec base;
    std::vector<Vec> directions;
    int codim = 0;

    static AffineFlat make(Vec base, std::vector<Vec> directions, int ambient_rank);
    int dim() const { return static_cast<int>(directions.size()); }
};

// Solution set of A x = b as a flat (nullopt when inconsistent).
std::optional<AffineFlat> affine_solution_set(const Mat& a, const Vec& b, int ambient_rank);

// G-orthogonal projection of the origin onto the flat, with its squared norm.
// The returned point minimizes norm2 over the flat.
std::pair<Vec, Rat> foot_of_origin(const AffineFlat& flat, const GramForm& g);

}  // namespace focal

#endif
