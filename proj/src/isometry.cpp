#include "focal/isometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "focal/spectra.hpp"

namespace focal {

std::pair<Lattice, Rat> normalize_scale(const Lattice& lat, const Budget& budget) {
    Rat m = minimal_norm2(lat, budget);
    if (m == 1) return {lat, Rat(1)};
    Mat g = mat_scale(Rat(1) / m, lat.gram().entries());
    return {make_lattice(std::move(g), lat.name()), m};
}

namespace {

// Backtracking search for W with W^T A W = B: map each target basis vector to
// a source vector of equal norm whose inner products with the already placed
// images match B.  Candidate lists are complete spheres, so an exhausted
// search proves non-isometry.
std::optional<Mat> find_isometry(const Lattice& src, const Mat& target, const Budget& budget) {
    const int n = static_cast<int>(target.size());
    Vec origin(n, Rat(0));

    std::map<Rat, std::vector<Vec>> spheres;
    for (int j = 0; j < n; ++j) {
        const Rat& t = target[j][j];
        if (!spheres.count(t)) {
            auto pts = enumerate_ball(src, origin, t, BallMode::sphere, budget);
            auto& list = spheres[t];
            list.reserve(pts.size());
            for (const LatticePoint& p : pts) list.push_back(to_vec(p));
        }
    }

    std::vector<Vec> chosen;
    std::function<bool(int)> place = [&](int j) -> bool {
        if (j == n) return true;
        for (const Vec& cand : spheres.at(target[j][j])) {
            budget.charge(1, "isometry search");
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                ok = inner(chosen[i], cand, src.gram()) == target[i][j];
            if (!ok) continue;
            chosen.push_back(cand);
            if (place(j + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    Mat w(n, Vec(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w[i][j] = chosen[j][i];
    return w;
}

}  // namespace

std::variant<IsometryCertificate, NotIsometric> is_isometric_up_to_scale(const Lattice& left,
                                                                         const Lattice& right,
                                                                         const Budget& budget) {
    if (left.rank() != right.rank())
        throw RankMismatchError("is_isometric_up_to_scale: ranks differ (" +
                                std::to_string(left.rank()) + " vs " +
                                std::to_string(right.rank()) + ")");
    const int n = left.rank();
    if (n > kMaxExactIsometryRank)
        throw RankTooLargeError(
            "is_isometric_up_to_scale: rank " + std::to_string(n) + " exceeds " +
            std::to_string(kMaxExactIsometryRank) +
            "; use length/focal spectra and root_graph_components instead");

    auto [n1, m1] = normalize_scale(left, budget);
    auto [n2, m2] = normalize_scale(right, budget);
    const Rat scale = m1 / m2;  // U^T G1 U = scale * G2 once normalized forms match

    auto [r1, v1] = reduce_basis(n1);
    auto [r2, v2] = reduce_basis(n2);

    // Cheap separating invariants first: sphere counts up to the largest
    // diagonal norm either reduced form needs, then the determinant.
    Rat max_norm(0);
    for (int i = 0; i < n; ++i) {
        max_norm = std::max(max_norm, r1.gram().at(i, i));
        max_norm = std::max(max_norm, r2.gram().at(i, i));
    }
    LengthSpectrum s1 = length_spectrum(r1, max_norm, budget);
    LengthSpectrum s2 = length_spectrum(r2, max_norm, budget);
    SpectrumDiff d = compare(s1, s2);
    if (d.verdict == SpectrumDiff::Verdict::differ) {
        const auto& disc = *d.first_discrepancy;
        return NotIsometric{"normalized sphere counts at norm " + rat_str(disc.rho2) +
                            " differ (" + std::to_string(disc.left) + " vs " +
                            std::to_string(disc.right) + ")"};
    }

    // Determinant is an invariant, and with equal determinants any integral
    // W satisfying W^T G1 W = G2 is automatically unimodular.
    Rat det1 = determinant(r1.gram().entries());
    Rat det2 = determinant(r2.gram().entries());
    if (det1 != det2)
        return NotIsometric{"normalized Gram determinants differ (" + rat_str(det1) + " vs " +
                            rat_str(det2) + ")"};

    auto w = find_isometry(r1, r2.gram().entries(), budget);
    if (!w) return NotIsometric{"short-vector image search exhausted with no unimodular map"};

    // U = V1 W V2^{-1} pulls the relation back to the original Grams.
    Mat u = mat_mul(mat_mul(v1, *w), inverse(v2));

    // Re-verify the certificate exactly before handing it out.
    Mat lhs = mat_mul(transpose(u), mat_mul(left.gram().entries(), u));
    Mat rhs = mat_scale(scale, right.gram().entries());
    if (lhs != rhs) throw Error("is_isometric_up_to_scale: certificate verification failed");
    Rat det = determinant(u);
    if (det != 1 && det != -1)
        throw Error("is_isometric_up_to_scale: transform is not unimodular");
    for (const Vec& row : u)
        for (const Rat& x : row)
            if (!is_integer(x)) throw Error("is_isometric_up_to_scale: transform not integral");

    return IsometryCertificate{scale, std::move(u)};
}

}  // namespace focal
