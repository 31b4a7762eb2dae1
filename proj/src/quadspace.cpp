#include "focal/quadspace.hpp"

namespace focal {

GramForm::GramForm(Mat entries) : n_(static_cast<int>(entries.size())), g_(std::move(entries)) {
    if (n_ == 0) throw DimensionMismatch("GramForm: empty matrix");
    for (const Vec& row : g_)
        if (static_cast<int>(row.size()) != n_)
            throw DimensionMismatch("GramForm: matrix not square");
    if (!is_symmetric(g_)) throw NotSymmetricError("GramForm: matrix not symmetric");
    LdltResult f = ldlt(g_);
    if (!f.factor) throw NotPositiveDefiniteError(f.failing_minor);
    ldlt_ = std::move(*f.factor);
}

Rat inner(const Vec& u, const Vec& v, const GramForm& g) {
    const int n = g.rank();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw DimensionMismatch("inner: vector length vs form rank");
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
        if (sgn(u[i]) == 0) continue;
        Rat row(0);
        for (int j = 0; j < n; ++j) row += g.at(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

Rat norm2(const Vec& v, const GramForm& g) { return inner(v, v, g); }

Rat dist2(const Vec& u, const Vec& v, const GramForm& g) {
    Vec d = vec_sub(u, v);
    return inner(d, d, g);
}

AffineFlat AffineFlat::make(Vec base, std::vector<Vec> directions, int ambient_rank) {
    if (static_cast<int>(base.size()) != ambient_rank)
        throw DimensionMismatch("AffineFlat: base length vs ambient rank");
    if (!directions.empty()) {
        Mat rows;
        rows.reserve(directions.size());
        for (const Vec& d : directions) {
            if (static_cast<int>(d.size()) != ambient_rank)
                throw DimensionMismatch("AffineFlat: direction length vs ambient rank");
            rows.push_back(d);
        }
        if (mat_rank(rows) != static_cast<int>(directions.size()))
            throw Error("AffineFlat: direction vectors are linearly dependent");
    }
    AffineFlat f;
    f.base = std::move(base);
    f.directions = std::move(directions);
    f.codim = ambient_rank - static_cast<int>(f.directions.size());
    return f;
}

std::optional<AffineFlat> affine_solution_set(const Mat& a, const Vec& b, int ambient_rank) {
    auto sol = solve_affine(a, b);
    if (!sol) return std::nullopt;
    return AffineFlat::make(std::move(sol->point), std::move(sol->kernel), ambient_rank);
}

std::pair<Vec, Rat> foot_of_origin(const AffineFlat& flat, const GramForm& g) {
    if (flat.directions.empty()) return {flat.base, norm2(flat.base, g)};
    // Normal equations: <d_a, base + sum_b t_b d_b> = 0 for every direction.
    const int k = flat.dim();
    Mat lhs(k, Vec(k));
    Vec rhs(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) lhs[a][b] = inner(flat.directions[a], flat.directions[b], g);
        rhs[a] = -inner(flat.directions[a], flat.base, g);
    }
    auto sol = solve_affine(lhs, rhs);
    // The direction Gram is positive definite, so the system is uniquely solvable.
    if (!sol || !sol->kernel.empty())
        throw Error("foot_of_origin: degenerate direction Gram");
    Vec p = flat.base;
    for (int a = 0; a < k; ++a) p = vec_add(p, vec_scale(sol->point[a], flat.directions[a]));
    return {p, norm2(p, g)};
}

}  // namespace focal
