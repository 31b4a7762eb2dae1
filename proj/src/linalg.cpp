#include "focal/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace focal {

Mat identity_mat(int n) {
    Mat m(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    Mat c(a.size(), Vec(b[0].size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (!m.empty() && m[0].size() != v.size())
        throw DimensionMismatch("mat_vec: dimensions differ");
    Vec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: lengths differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: lengths differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Mat mat_scale(const Rat& c, const Mat& m) {
    Mat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = vec_scale(c, m[i]);
    return r;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool is_symmetric(const Mat& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

namespace {

// Clears each row to integers (multiply by the lcm of denominators; solution
// sets and row spaces are unchanged).
std::vector<std::vector<Int>> clear_rows(const Mat& m) {
    std::vector<std::vector<Int>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const Rat& x : m[i]) {
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            l = l / g * x.get_den();
        }
        out[i].reserve(m[i].size());
        for (const Rat& x : m[i]) out[i].push_back(x.get_num() * (l / x.get_den()));
    }
    return out;
}

struct Echelon {
    std::vector<std::vector<Int>> rows;  // integer row echelon (Bareiss)
    std::vector<int> pivot_cols;
    int swaps = 0;
};

// Fraction-free (Bareiss) forward elimination; exact divisions only.
Echelon bareiss(std::vector<std::vector<Int>> rows) {
    Echelon e;
    if (rows.empty()) return e;
    const std::size_t ncols = rows[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        if (piv != r) {
            std::swap(rows[piv], rows[r]);
            ++e.swaps;
        }
        const Int p = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const Int m = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) {
                Int v = p * rows[i][j] - m * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        e.pivot_cols.push_back(static_cast<int>(c));
        prev = p;
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

Rref rref(const Mat& m) {
    Rref out;
    if (m.empty()) return out;
    Echelon e = bareiss(clear_rows(m));
    out.pivot_cols = e.pivot_cols;
    out.rank = static_cast<int>(e.pivot_cols.size());

    // Normalize pivots to 1 and eliminate above (rational back pass).
    Mat rows(e.rows.size(), Vec(m[0].size()));
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        for (std::size_t j = 0; j < e.rows[i].size(); ++j) rows[i][j] = Rat(e.rows[i][j]);
    for (int i = out.rank - 1; i >= 0; --i) {
        const int c = out.pivot_cols[i];
        Rat inv_p = Rat(1) / rows[i][c];
        for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] *= inv_p;
        for (int k = 0; k < i; ++k) {
            Rat f = rows[k][c];
            if (sgn(f) == 0) continue;
            for (std::size_t j = c; j < rows[k].size(); ++j) rows[k][j] -= f * rows[i][j];
        }
    }
    out.rows = std::move(rows);
    return out;
}

int mat_rank(const Mat& m) {
    if (m.empty()) return 0;
    return static_cast<int>(bareiss(clear_rows(m)).pivot_cols.size());
}

Rat determinant(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    if (m[0].size() != n) throw DimensionMismatch("determinant: matrix not square");
    // Row scaling multiplies the determinant by the product of the scales.
    Mat copy = m;
    Rat scale(1);
    auto cleared = clear_rows(copy);
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (const Rat& x : copy[i]) {
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            l = l / g * x.get_den();
        }
        scale *= rat(Int(1), l);
    }
    Echelon e = bareiss(std::move(cleared));
    if (e.pivot_cols.size() < n) return Rat(0);
    // Bareiss: the final pivot equals the determinant of the integer matrix.
    Rat det = Rat(e.rows[n - 1][n - 1]) * scale;
    if (e.swaps % 2 == 1) det = -det;
    return det;
}

std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("solve_affine: rows vs rhs length");
    if (a.empty()) return AffineSolution{{}, {}};
    const std::size_t ncols = a[0].size();
    Mat aug(a.size(), Vec(ncols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
        aug[i][ncols] = b[i];
    }
    Rref r = rref(aug);
    for (int c : r.pivot_cols)
        if (c == static_cast<int>(ncols)) return std::nullopt;  // 0 = 1 row

    AffineSolution sol;
    sol.point.assign(ncols, Rat(0));
    std::vector<bool> is_pivot(ncols, false);
    for (int i = 0; i < r.rank; ++i) {
        is_pivot[r.pivot_cols[i]] = true;
        sol.point[r.pivot_cols[i]] = r.rows[i][ncols];
    }
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec k(ncols, Rat(0));
        k[free_c] = 1;
        for (int i = 0; i < r.rank; ++i) k[r.pivot_cols[i]] = -r.rows[i][free_c];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

Mat inverse(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    if (m[0].size() != n) throw DimensionMismatch("inverse: matrix not square");
    Mat aug(n, Vec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    Rref r = rref(aug);
    if (r.rank < static_cast<int>(n) || r.pivot_cols[n - 1] >= static_cast<int>(n))
        throw SingularMatrixError("inverse: matrix is singular");
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.rows[i][n + j];
    return inv;
}

LdltResult ldlt(const Mat& g) {
    const int n = static_cast<int>(g.size());
    Ldlt f;
    f.lower = identity_mat(n);
    f.diag.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat d = g[j][j];
        for (int k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
        if (sgn(d) <= 0) return {std::nullopt, j + 1};
        f.diag[j] = d;
        for (int i = j + 1; i < n; ++i) {
            Rat v = g[i][j];
            for (int k = 0; k < j; ++k) v -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
            f.lower[i][j] = v / d;
        }
    }
    return {std::move(f), 0};
}

}  // namespace focal
