#ifndef FOCAL_LINALG_HPP
#define FOCAL_LINALG_HPP

#include <optional>
#include <vector>

#include "focal/rat.hpp"

namespace focal {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rectangular

Mat identity_mat(int n);
Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
Mat mat_scale(const Rat& c, const Mat& m);
bool is_zero_vec(const Vec& v);
bool is_symmetric(const Mat& m);

// Reduced row echelon form.  The forward pass runs fraction-free (Bareiss) on
// the denominator-cleared integer rows; divisions happen only in the final
// normalization.  Canonical: same row space => same RREF.
struct Rref {
    Mat rows;                    // nonzero rows only, pivots are exact 1
    std::vector<int> pivot_cols;
    int rank = 0;
};
Rref rref(const Mat& m);

int mat_rank(const Mat& m);

// Exact determinant of a square matrix (fraction-free on cleared rows).
Rat determinant(const Mat& m);

// Solution set of A x = b: a particular point plus a kernel basis, or nullopt
// when the system is inconsistent.
struct AffineSolution {
    Vec point;
    std::vector<Vec> kernel;
};
std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b);

// Throws SingularMatrixError when not invertible.
Mat inverse(const Mat& m);

// G = L D L^T with L unit lower triangular and D the pivot diagonal.  For a
// symmetric matrix the k-th leading principal minor equals d_1 ... d_k, so the
// first non-positive pivot index is the first failing minor.
struct Ldlt {
    Mat lower;
    Vec diag;
};
struct LdltResult {
    std::optional<Ldlt> factor;
    int failing_minor = 0;  // 1-based, 0 when factor present
};
LdltResult ldlt(const Mat& g);

}  // namespace focal

#endif
