#include "focal/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "focal/parallel.hpp"

namespace focal {

// ---------------------------------------------------------------------------
// Budget

Budget::Budget(long long max_ops, double soft_timeout_s) : state_(std::make_shared<State>()) {
    state_->max_ops = max_ops;
    state_->soft_timeout_s = soft_timeout_s;
    state_->start = std::chrono::steady_clock::now();
}

Budget Budget::unlimited() { return Budget(-1, -1.0); }

void Budget::charge(long long ops, const char* phase) const {
    State& st = *state_;
    long long used = st.used.fetch_add(ops) + ops;
    if (st.max_ops >= 0 && used > st.max_ops)
        throw ResourceError(phase, "operation count " + std::to_string(used) + " exceeds " +
                                       std::to_string(st.max_ops));
    if (st.soft_timeout_s >= 0 && (used & 0x1fff) < ops) {
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - st.start).count();
        if (sec > st.soft_timeout_s)
            throw ResourceError(phase, "soft time cap " + std::to_string(st.soft_timeout_s) +
                                           " s exceeded");
    }
}

// ---------------------------------------------------------------------------
// LLL reduction on the Gram matrix (delta = 3/4), exact rational arithmetic.

namespace {

struct Gso {
    Mat mu;   // mu[i][j], j < i
    Vec b;    // squared Gram-Schmidt norms
};

Gso compute_gso(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Gso g;
    g.mu.assign(n, Vec(n, Rat(0)));
    g.b.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat v = m[i][j];
            for (int k = 0; k < j; ++k) v -= g.mu[i][k] * g.mu[j][k] * g.b[k];
            g.mu[i][j] = v / g.b[j];
        }
        Rat bi = m[i][i];
        for (int k = 0; k < i; ++k) bi -= g.mu[i][k] * g.mu[i][k] * g.b[k];
        g.b[i] = bi;
    }
    return g;
}

// b_k <- b_k - r b_j on the Gram and on the transform columns.
void translate_basis(Mat& m, Mat& u, int k, int j, const Int& r) {
    if (r == 0) return;
    const int n = static_cast<int>(m.size());
    Rat rq(r);
    for (int i = 0; i < n; ++i) m[k][i] -= rq * m[j][i];
    for (int i = 0; i < n; ++i) m[i][k] -= rq * m[i][j];
    for (int i = 0; i < n; ++i) u[i][k] -= rq * u[i][j];
}

void swap_basis(Mat& m, Mat& u, int k) {
    const int n = static_cast<int>(m.size());
    std::swap(m[k - 1], m[k]);
    for (int i = 0; i < n; ++i) std::swap(m[i][k - 1], m[i][k]);
    for (int i = 0; i < n; ++i) std::swap(u[i][k - 1], u[i][k]);
}

}  // namespace

std::pair<Mat, Mat> lll_reduce(const Mat& gram) {
    const int n = static_cast<int>(gram.size());
    Mat m = gram;
    Mat u = identity_mat(n);
    if (n <= 1) return {m, u};
    const Rat delta = rat(3, 4);
    const Rat half = rat(1, 2);

    Gso g = compute_gso(m);
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            if (abs(g.mu[k][j]) > half) {
                translate_basis(m, u, k, j, round_int(g.mu[k][j]));
                g = compute_gso(m);
            }
        }
        if (g.b[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.b[k - 1]) {
            ++k;
        } else {
            swap_basis(m, u, k);
            g = compute_gso(m);
            k = std::max(k - 1, 1);
        }
    }
    return {m, u};
}

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(GramForm gram, std::string name)
    : gram_(std::move(gram)),
      name_(std::move(name)),
      reduced_gram_(gram_),  // placeholder, replaced below
      u_(),
      u_inv_() {
    auto [red, u] = lll_reduce(gram_.entries());
    reduced_gram_ = GramForm(std::move(red));
    u_ = std::move(u);
    u_inv_ = inverse(u_);
}

std::vector<std::vector<double>> Lattice::embedding() const {
    const Ldlt& f = gram_.factor();
    const int n = rank();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            rows[i][j] = to_double(f.lower[i][j]) * std::sqrt(to_double(f.diag[j]));
    return rows;
}

Vec to_vec(const LatticePoint& p) {
    Vec v(p.coords.size());
    for (std::size_t i = 0; i < p.coords.size(); ++i) v[i] = rat(p.coords[i]);
    return v;
}

Lattice make_lattice(Mat gram, std::string name) {
    return Lattice(GramForm(std::move(gram)), std::move(name));
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

Mat gram_from_basis_rows(const Mat& basis) {
    return mat_mul(basis, transpose(basis));
}

// Generator rows for D_n^+ = D_n united with (glue + D_n), glue = (1/2,...,1/2):
// 2e_0, the chain e_i - e_{i-1}, and the glue row.  Unimodular for n = 8, 16.
Mat dplus_basis(int n) {
    Mat b(n, Vec(n, Rat(0)));
    b[0][0] = 2;
    for (int i = 1; i < n - 1; ++i) {
        b[i][i] = 1;
        b[i][i - 1] = -1;
    }
    for (int j = 0; j < n; ++j) b[n - 1][j] = rat(1, 2);
    return b;
}

// Standard D_n root basis: e_i - e_{i+1} and e_{n-2} + e_{n-1}.
Mat d_basis(int n) {
    Mat b(n, Vec(n, Rat(0)));
    for (int i = 0; i + 1 < n; ++i) {
        b[i][i] = 1;
        b[i][i + 1] = -1;
    }
    b[n - 1][n - 2] = 1;
    b[n - 1][n - 1] = 1;
    return b;
}

std::optional<int> parse_indexed(std::string_view name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        n = n * 10 + (name[i] - '0');
        if (n > 64) return std::nullopt;
    }
    return n;
}

}  // namespace

Lattice catalog(std::string_view name) {
    std::string label(name);
    if (name == "A2") return make_lattice({{rat(2), rat(1)}, {rat(1), rat(2)}}, label);
    if (name == "E8") return make_lattice(gram_from_basis_rows(dplus_basis(8)), label);
    if (name == "D16plus") return make_lattice(gram_from_basis_rows(dplus_basis(16)), label);
    if (name == "E8xE8") {
        Mat e8 = gram_from_basis_rows(dplus_basis(8));
        Mat g(16, Vec(16, Rat(0)));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                g[i][j] = e8[i][j];
                g[8 + i][8 + j] = e8[i][j];
            }
        return make_lattice(std::move(g), label);
    }
    if (auto n = parse_indexed(name, 'Z'); n && *n >= 1)
        return make_lattice(identity_mat(*n), label);
    if (auto n = parse_indexed(name, 'D'); n && *n >= 2)
        return make_lattice(gram_from_basis_rows(d_basis(*n)), label);
    throw UnknownNameError("unknown catalog lattice '" + label +
                           "' (expected Z<n>, A2, D<n>, E8, E8xE8, D16plus)");
}

// ---------------------------------------------------------------------------
// Fincke-Pohst enumeration on the reduced Gram.
//
// With G = L D L^T, norm2(x - c) = sum_j d_j w_j^2 where
// w_j = (x_j - c_j) + sum_{i>j} L[i][j] (x_i - c_i).  Levels run from n-1 down
// to 0; at each level the admissible x_j range is an exact integer interval.

namespace {

struct FpData {
    int n;
    const Mat* lower;
    const Vec* diag;
    Vec center;  // in reduced coordinates
    Rat r2;
    const Budget* budget;
};

struct FpState {
    std::vector<Vec> sums;  // sums[lev][j] = sum over fixed i > lev-1 ... see walk
    Vec part;               // part[lev] = contribution of levels >= lev
    std::vector<std::int64_t> x;
};

FpState make_state(const FpData& d) {
    FpState s;
    s.sums.assign(d.n + 1, Vec(d.n, Rat(0)));
    s.part.assign(d.n + 1, Rat(0));
    s.x.assign(d.n, 0);
    return s;
}

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw Error("enumeration coordinate exceeds 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

// emit(coords, dist2) for every closed-ball point in the subtree.
template <class Emit>
void fp_walk(const FpData& d, FpState& st, int level, const Emit& emit) {
    const Rat& shift = st.sums[level + 1][level];
    Rat a = d.center[level] - shift;
    Rat rem = d.r2 - st.part[level + 1];
    auto iv = integer_interval(a, rem / (*d.diag)[level]);
    if (!iv) return;
    d.budget->charge(to_i64(iv->second - iv->first) + 1, "lattice enumeration");
    for (Int xi = iv->first; xi <= iv->second; ++xi) {
        st.x[level] = to_i64(xi);
        Rat v = Rat(xi) - d.center[level];
        Rat w = v + shift;
        st.part[level] = st.part[level + 1] + (*d.diag)[level] * w * w;
        if (level == 0) {
            emit(st.x, st.part[0]);
        } else {
            for (int j = 0; j < level; ++j)
                st.sums[level][j] = st.sums[level + 1][j] + (*d.lower)[level][j] * v;
            fp_walk(d, st, level - 1, emit);
        }
    }
}

// Fixes x at `level` in the state (everything above is already fixed).
// Returns false when the level has no admissible values left to offer; the
// caller supplies the concrete value.
void fp_fix(const FpData& d, FpState& st, int level, std::int64_t value) {
    st.x[level] = value;
    Rat v = Rat(static_cast<long>(value)) - d.center[level];
    Rat w = v + st.sums[level + 1][level];
    st.part[level] = st.part[level + 1] + (*d.diag)[level] * w * w;
    for (int j = 0; j < level; ++j)
        st.sums[level][j] = st.sums[level + 1][j] + (*d.lower)[level][j] * v;
}

// Runs the walk, splitting the top two levels into parallel jobs for
// high-rank enumerations (small ones are cheaper single-threaded than the
// thread dispatch).  Per-branch results land in slots merged in branch order,
// so output never depends on the worker count.
template <class BranchResult, class BranchFn>
std::vector<BranchResult> fp_run(const FpData& d, const BranchFn& branch_fn) {
    const int top = d.n - 1;
    std::vector<BranchResult> slots;
    if (d.n < 8) {
        slots.resize(1);
        FpState st = make_state(d);
        branch_fn(st, top, slots[0]);
        return slots;
    }
    // Collect (x_top, x_top-1) prefixes with partial value within the bound.
    std::vector<std::pair<std::int64_t, std::int64_t>> prefixes;
    {
        FpState st = make_state(d);
        auto iv = integer_interval(d.center[top], d.r2 / (*d.diag)[top]);
        if (!iv) return slots;
        d.budget->charge(to_i64(iv->second - iv->first) + 1, "lattice enumeration");
        for (Int xi = iv->first; xi <= iv->second; ++xi) {
            fp_fix(d, st, top, to_i64(xi));
            Rat a2 = d.center[top - 1] - st.sums[top][top - 1];
            auto iv2 = integer_interval(a2, (d.r2 - st.part[top]) / (*d.diag)[top - 1]);
            if (!iv2) continue;
            d.budget->charge(to_i64(iv2->second - iv2->first) + 1, "lattice enumeration");
            for (Int xj = iv2->first; xj <= iv2->second; ++xj)
                prefixes.emplace_back(to_i64(xi), to_i64(xj));
        }
    }
    slots.resize(prefixes.size());
    parallel_for_jobs(static_cast<int>(prefixes.size()), [&](int job) {
        FpState st = make_state(d);
        fp_fix(d, st, top, prefixes[job].first);
        fp_fix(d, st, top - 1, prefixes[job].second);
        branch_fn(st, top - 2, slots[job]);
    });
    return slots;
}

struct Mapper {
    std::vector<std::vector<std::int64_t>> u;  // original = u * reduced
    int n;

    explicit Mapper(const Mat& u_mat) {
        n = static_cast<int>(u_mat.size());
        u.assign(n, std::vector<std::int64_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!is_integer(u_mat[i][j])) throw Error("reduction transform is not integral");
                u[i][j] = to_i64(u_mat[i][j].get_num());
            }
    }

    LatticePoint map(const std::vector<std::int64_t>& x) const {
        LatticePoint p;
        p.coords.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < n; ++j) acc += static_cast<__int128>(u[i][j]) * x[j];
            if (acc > INT64_MAX || acc < INT64_MIN)
                throw Error("lattice point coordinate exceeds 64-bit range");
            p.coords[i] = static_cast<std::int64_t>(acc);
        }
        return p;
    }
};

bool mode_keep(BallMode mode, const Rat& dist2, const Rat& r2) {
    switch (mode) {
        case BallMode::strict: return dist2 < r2;
        case BallMode::closed: return true;  // walker already enforces <=
        case BallMode::sphere: return dist2 == r2;
    }
    return false;
}

FpData make_fp_data(const Lattice& lat, const Vec& center, const Rat& r2, const Budget& budget) {
    if (static_cast<int>(center.size()) != lat.rank())
        throw DimensionMismatch("enumerate_ball: center length vs lattice rank");
    FpData d;
    d.n = lat.rank();
    d.lower = &lat.reduced_gram().factor().lower;
    d.diag = &lat.reduced_gram().factor().diag;
    d.center = mat_vec(lat.reduction_inverse(), center);
    d.r2 = r2;
    d.budget = &budget;
    return d;
}

}  // namespace

std::vector<LatticePoint> enumerate_ball(const Lattice& lat, const Vec& center, const Rat& r2,
                                         BallMode mode, const Budget& budget) {
    if (sgn(r2) < 0) return {};
    FpData d = make_fp_data(lat, center, r2, budget);
    Mapper mapper(lat.reduction());

    using Branch = std::vector<LatticePoint>;
    auto branch_fn = [&](FpState& st, int start_level, Branch& out) {
        auto emit = [&](const std::vector<std::int64_t>& x, const Rat& dist2) {
            if (mode_keep(mode, dist2, r2)) out.push_back(mapper.map(x));
        };
        fp_walk(d, st, start_level, emit);
    };
    auto slots = fp_run<Branch>(d, branch_fn);

    std::vector<LatticePoint> all;
    std::size_t total = 0;
    for (const Branch& b : slots) total += b.size();
    all.reserve(total);
    for (Branch& b : slots)
        for (LatticePoint& p : b) all.push_back(std::move(p));
    std::sort(all.begin(), all.end());
    return all;
}

std::map<Rat, long long> ball_norm_histogram(const Lattice& lat, const Vec& center, const Rat& r2,
                                             BallMode mode, const Budget& budget) {
    if (sgn(r2) < 0) return {};
    FpData d = make_fp_data(lat, center, r2, budget);

    using Branch = std::map<Rat, long long>;
    auto branch_fn = [&](FpState& st, int start_level, Branch& out) {
        auto emit = [&](const std::vector<std::int64_t>&, const Rat& dist2) {
            if (mode_keep(mode, dist2, r2)) ++out[dist2];
        };
        fp_walk(d, st, start_level, emit);
    };
    auto slots = fp_run<Branch>(d, branch_fn);

    std::map<Rat, long long> merged;
    for (const Branch& b : slots)
        for (const auto& [k, v] : b) merged[k] += v;
    return merged;
}

Rat minimal_norm2(const Lattice& lat, const Budget& budget) {
    const Mat& red = lat.reduced_gram().entries();
    Rat r2 = red[0][0];
    for (int i = 1; i < lat.rank(); ++i) r2 = std::min(r2, red[i][i]);
    Vec origin(lat.rank(), Rat(0));
    for (;;) {
        auto hist = ball_norm_histogram(lat, origin, r2, BallMode::closed, budget);
        hist.erase(Rat(0));
        if (!hist.empty()) return hist.begin()->first;
        r2 *= 2;  // unreachable for a valid reduced Gram; kept as the schedule
    }
}

std::pair<Lattice, Mat> reduce_basis(const Lattice& lat) {
    auto [red, u] = lll_reduce(lat.gram().entries());
    std::string nm = lat.name().empty() ? std::string() : lat.name() + " (reduced)";
    return {make_lattice(std::move(red), std::move(nm)), u};
}

// ---------------------------------------------------------------------------
// File format

Lattice read_lattice(std::istream& in) {
    std::string line, name;
    int line_no = 0;
    int rank = -1;
    Mat gram;
    int rows_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty()) continue;
        if (sv[0] == '#') {
            std::string_view rest = sv.substr(1);
            while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            if (rest.substr(0, 5) == "name:") {
                rest.remove_prefix(5);
                while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
                name = std::string(rest);
            }
            continue;
        }
        std::istringstream ls{std::string(sv)};
        if (rank < 0) {
            std::string kw;
            ls >> kw >> rank;
            if (kw != "rank" || ls.fail() || rank < 1)
                throw ParseError(line_no, "expected 'rank n' with n >= 1");
            gram.assign(rank, Vec(rank));
            continue;
        }
        if (rows_read >= rank) throw ParseError(line_no, "extra row after Gram matrix");
        std::string tok;
        int col = 0;
        while (ls >> tok) {
            if (col >= rank)
                throw ParseError(line_no, "row has more than " + std::to_string(rank) + " entries");
            gram[rows_read][col++] = parse_rat(tok, line_no);
        }
        if (col != rank)
            throw ParseError(line_no, "row has " + std::to_string(col) + " entries, expected " +
                                          std::to_string(rank));
        ++rows_read;
    }
    if (rank < 0) throw ParseError(line_no, "missing 'rank n' header");
    if (rows_read != rank)
        throw ParseError(line_no, "Gram matrix has " + std::to_string(rows_read) +
                                      " rows, expected " + std::to_string(rank));
    return make_lattice(std::move(gram), std::move(name));
}

Lattice read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lattice file '" + path + "'");
    return read_lattice(in);
}

void write_lattice(std::ostream& out, const Lattice& lat) {
    if (!lat.name().empty()) out << "# name: " << lat.name() << "\n";
    out << "rank " << lat.rank() << "\n";
    for (int i = 0; i < lat.rank(); ++i) {
        for (int j = 0; j < lat.rank(); ++j) {
            if (j) out << ' ';
            out << rat_str(lat.gram().at(i, j));
        }
        out << "\n";
    }
}

std::string lattice_to_string(const Lattice& lat) {
    std::ostringstream os;
    write_lattice(os, lat);
    return os.str();
}

}  // namespace focal
