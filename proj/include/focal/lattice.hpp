#ifndef FOCAL_LATTICE_HPP
#define FOCAL_LATTICE_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "focal/quadspace.hpp"

namespace focal {

// Work budget shared across the phases of a computation.  Exceeding it raises
// ResourceError; results are complete or absent, never truncated.
class Budget {
public:
    Budget() : Budget(10'000'000, 300.0) {}
    Budget(long long max_ops, double soft_timeout_s);
    static Budget unlimited();

    void charge(long long ops, const char* phase) const;
    long long used() const { return state_->used.load(); }

private:
    struct State {
        long long max_ops;
        double soft_timeout_s;
        std::atomic<long long> used{0};
        std::chrono::steady_clock::time_point start;
    };
    std::shared_ptr<State> state_;
};

struct LatticePoint {
    std::vector<std::int64_t> coords;

    bool operator==(const LatticePoint& o) const { return coords == o.coords; }
    bool operator<(const LatticePoint& o) const { return coords < o.coords; }
};

Vec to_vec(const LatticePoint& p);

// Rank-n lattice given by an exact rational Gram matrix.  The LLL-reduced
// form and the unimodular transform are computed once at construction and
// drive the enumeration kernel.
class Lattice {
public:
    Lattice(GramForm gram, std::string name);

    int rank() const { return gram_.rank(); }
    const GramForm& gram() const { return gram_; }
    const std::string& name() const { return name_; }

    const GramForm& reduced_gram() const { return reduced_gram_; }
    const Mat& reduction() const { return u_; }          // U with U^T G U = reduced
    const Mat& reduction_inverse() const { return u_inv_; }

    // Floating basis rows for rendering only: row i is the image of basis
    // vector i under a Cholesky embedding.  Reproduces the Gram to ~1e-15.
    std::vector<std::vector<double>> embedding() const;

private:
    GramForm gram_;
    std::string name_;
    GramForm reduced_gram_;
    Mat u_, u_inv_;
};

// Validates symmetry / positive definiteness; throws NotSymmetricError or
// NotPositiveDefiniteError (with the failing minor index).
Lattice make_lattice(Mat gram, std::string name = "");

// Named lattices: Z<n>, A2, D<n>, E8, E8xE8, D16plus.
Lattice catalog(std::string_view name);

enum class BallMode { strict, closed, sphere };

// Every lattice point with dist2(center, x) {<, <=, ==} r2 per mode, in
// lexicographic coordinate order.  Exact; no misses, no duplicates.
std::vector<LatticePoint> enumerate_ball(const Lattice& lat, const Vec& center, const Rat& r2,
                                         BallMode mode, const Budget& budget = Budget());

// dist2-value -> count over the same point set; the cheap form for spectra.
std::map<Rat, long long> ball_norm_histogram(const Lattice& lat, const Vec& center, const Rat& r2,
                                             BallMode mode, const Budget& budget = Budget());

// Smallest nonzero norm2.  Growing radius schedule seeded by the smallest
// reduced diagonal entry (always attained by a basis vector).
Rat minimal_norm2(const Lattice& lat, const Budget& budget = Budget());

// LLL (delta = 3/4) on the Gram matrix; returns the reduced lattice and the
// integer unimodular U with U^T G U = G_reduced.
std::pair<Lattice, Mat> reduce_basis(const Lattice& lat);
std::pair<Mat, Mat> lll_reduce(const Mat& gram);  // (reduced gram, U)

// Text format: optional '# name: <label>' comments, a 'rank n' line, then n
// rows of n rationals.  write/read round-trips exactly.
Lattice read_lattice(std::istream& in);
Lattice read_lattice_file(const std::string& path);
void write_lattice(std::ostream& out, const Lattice& lat);
std::string lattice_to_string(const Lattice& lat);

}  // namespace focal

#endif
