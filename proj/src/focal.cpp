#include "focal/focal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "focal/parallel.hpp"

namespace focal {

BPlane BPlane::of(const Lattice& lat, const LatticePoint& lambda) {
    Vec lv = to_vec(lambda);
    if (is_zero_vec(lv)) throw ZeroVectorError("BPlane: lambda must be nonzero (V_0 is empty)");
    BPlane p;
    p.lambda = lambda;
    p.coeff = vec_scale(Rat(2), mat_vec(lat.gram().entries(), lv));
    p.rhs = inner(lv, lv, lat.gram());
    return p;
}

Rat BPlane::eval(const Vec& x) const {
    if (x.size() != coeff.size()) throw DimensionMismatch("BPlane::eval: dimension mismatch");
    Rat acc = -rhs;
    for (std::size_t i = 0; i < x.size(); ++i) acc += coeff[i] * x[i];
    return acc;
}

std::pair<long, std::vector<BPlane>> mu(const Lattice& lat, const Vec& v, const Budget& budget) {
    Rat q = norm2(v, lat.gram());
    auto sphere = enumerate_ball(lat, v, q, BallMode::sphere, budget);
    std::vector<BPlane> planes;
    planes.reserve(sphere.size());
    for (const LatticePoint& p : sphere) {
        if (std::all_of(p.coords.begin(), p.coords.end(), [](auto c) { return c == 0; }))
            continue;  // the origin is always on this sphere; V_0 is empty
        planes.push_back(BPlane::of(lat, p));
    }
    return {static_cast<long>(planes.size()), std::move(planes)};
}

namespace {

void require_nonzero(const Vec& v, const char* who) {
    if (is_zero_vec(v)) throw ZeroVectorError(std::string(who) + ": zero vector");
}

}  // namespace

long iota_via_crossings(const Lattice& lat, const Vec& v, const Budget& budget) {
    require_nonzero(v, "iota");
    Rat q = norm2(v, lat.gram());
    auto closed = enumerate_ball(lat, v, q, BallMode::closed, budget);
    long count = 0;
    for (const LatticePoint& p : closed) {
        Vec lv = to_vec(p);
        Rat vl = inner(v, lv, lat.gram());
        if (sgn(vl) <= 0) continue;  // covers the origin too
        // crossing parameter t = <l,l>/(2<v,l>) lies in (0,1)
        if (inner(lv, lv, lat.gram()) < 2 * vl) ++count;
    }
    return count;
}

long iota_via_strict_ball(const Lattice& lat, const Vec& v, const Budget& budget) {
    require_nonzero(v, "iota");
    Rat q = norm2(v, lat.gram());
    auto hist = ball_norm_histogram(lat, v, q, BallMode::strict, budget);
    long count = 0;
    for (const auto& [d2, c] : hist) count += c;
    return count;
}

long iota(const Lattice& lat, const Vec& v, const Budget& budget) {
    long a = iota_via_crossings(lat, v, budget);
    long b = iota_via_strict_ball(lat, v, budget);
    if (a != b)
        throw Error("iota: segment-crossing and strict-ball counts disagree (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    return a;
}

long brillouin_index(const Lattice& lat, const Vec& v, const Budget& budget) {
    Rat q = norm2(v, lat.gram());
    auto hist = ball_norm_histogram(lat, v, q, BallMode::closed, budget);
    long count = 0;
    for (const auto& [d2, c] : hist) count += c;
    return count;
}

FocalClass classify(const Lattice& lat, const Vec& v, const Budget& budget) {
    auto [m, planes] = mu(lat, v, budget);
    long i = is_zero_vec(v) ? 0 : iota(lat, v, budget);
    long b = brillouin_index(lat, v, budget);
    if (b != 1 + i + m)
        throw Error("classify: counting identity B = 1 + iota + mu violated");
    FocalClass fc;
    fc.mu = m;
    fc.iota = i;
    fc.brillouin = b;
    fc.sigma_index = m + 1;
    if (m == 0) fc.zone = i + 1;
    if (!planes.empty()) {
        Mat rows;
        rows.reserve(planes.size());
        for (const BPlane& p : planes) rows.push_back(to_vec(p.lambda));
        fc.nu = mat_rank(rows);
    }
    return fc;
}

long RadialProfile::zone_after(int i) const {
    long zone = 1;
    for (int j = 0; j <= i && j < static_cast<int>(crossings.size()); ++j)
        zone += static_cast<long>(crossings[j].entering.size());
    return zone;
}

RadialProfile radial_profile(const Lattice& lat, const Vec& u, int k_max, const Budget& budget) {
    require_nonzero(u, "radial_profile");
    RadialProfile prof;
    prof.direction = u;
    if (k_max <= 0) return prof;

    // A plane crossing the ray at parameter t has d(tu, lambda) = d(tu, 0),
    // so <l,l> <= 4 t^2 <u,u>: a ball of squared radius R2 captures every
    // crossing with 4 t^2 <u,u> <= R2, completely.  Start at the scale of the
    // shortest basis vector and double the squared radius until k_max
    // distinct crossing values are certified.
    const Rat qu = norm2(u, lat.gram());
    Vec origin(lat.rank(), Rat(0));
    Rat ball_r2 = lat.reduced_gram().at(0, 0);
    for (int i = 1; i < lat.rank(); ++i)
        ball_r2 = std::min(ball_r2, lat.reduced_gram().at(i, i));
    ball_r2 *= 4;
    for (;;) {
        auto points = enumerate_ball(lat, origin, ball_r2, BallMode::closed, budget);
        std::map<Rat, std::vector<LatticePoint>> groups;
        for (const LatticePoint& p : points) {
            Vec lv = to_vec(p);
            if (is_zero_vec(lv)) continue;
            Rat ul = inner(u, lv, lat.gram());
            if (sgn(ul) <= 0) continue;
            Rat t = inner(lv, lv, lat.gram()) / (2 * ul);
            if (4 * t * t * qu <= ball_r2) groups[t].push_back(p);
        }
        if (static_cast<int>(groups.size()) >= k_max) {
            int taken = 0;
            for (auto& [t, lambdas] : groups) {
                if (taken++ == k_max) break;
                prof.crossings.push_back({t, std::move(lambdas)});
            }
            return prof;
        }
        ball_r2 *= 4;
    }
}

std::vector<std::optional<std::pair<Rat, Rat>>> zone_annuli(const Lattice& lat, int k_max,
                                                            std::span<const Vec> directions,
                                                            const Budget& budget) {
    if (k_max < 1) throw Error("zone_annulus: k must be >= 1");
    if (directions.empty()) throw Error("zone_annulus: no directions");
    for (const Vec& u : directions) require_nonzero(u, "zone_annulus");

    // One profile per direction (parallel over directions), merged in
    // direction order.
    const int nd = static_cast<int>(directions.size());
    std::vector<RadialProfile> profiles(nd);
    parallel_for_jobs(nd, [&](int i) {
        profiles[i] = radial_profile(lat, directions[i], k_max, budget);
    });

    std::vector<std::optional<std::pair<Rat, Rat>>> out(k_max);
    auto feed = [&](int k, const Rat& r2) {
        auto& slot = out[k - 1];
        if (!slot) slot = std::make_pair(r2, r2);
        else {
            if (r2 < slot->first) slot->first = r2;
            if (r2 > slot->second) slot->second = r2;
        }
    };
    for (int di = 0; di < nd; ++di) {
        const RadialProfile& prof = profiles[di];
        const Rat qu = norm2(directions[di], lat.gram());
        // Zone k occupies the ray interval after i crossings where the
        // cumulative entering count equals k-1; rays whose count jumps past
        // k-1 do not meet the zone.  Zone 1 starts at the origin, so only its
        // outer endpoint is a crossing.
        long cum = 0;
        for (int i = 0; i < static_cast<int>(prof.crossings.size()); ++i) {
            long zone = cum + 1;
            if (zone <= k_max) {
                if (i >= 1) {
                    const Rat& t_in = prof.crossings[i - 1].t;
                    feed(static_cast<int>(zone), t_in * t_in * qu);
                }
                const Rat& t_out = prof.crossings[i].t;
                feed(static_cast<int>(zone), t_out * t_out * qu);
            }
            cum += static_cast<long>(prof.crossings[i].entering.size());
        }
    }
    return out;
}

std::pair<Rat, Rat> zone_annulus(const Lattice& lat, int k, std::span<const Vec> directions,
                                 const Budget& budget) {
    auto all = zone_annuli(lat, k, directions, budget);
    if (!all[k - 1])
        throw Error("zone_annulus: zone " + std::to_string(k) +
                    " not met by any sampled direction");
    return *all[k - 1];
}

Separation separates(const BPlane& plane, const Vec& v, const Vec& w) {
    int sv = sgn(plane.eval(v));
    int sw = sgn(plane.eval(w));
    if (sv == 0 || sw == 0) return Separation::incident;
    return sv * sw < 0 ? Separation::yes : Separation::no;
}

std::optional<AffineFlat> flat_intersection(std::span<const BPlane> planes, const GramForm& g) {
    if (planes.empty()) throw Error("flat_intersection: no planes");
    Mat a;
    Vec b;
    a.reserve(planes.size());
    b.reserve(planes.size());
    for (const BPlane& p : planes) {
        a.push_back(p.coeff);
        b.push_back(p.rhs);
    }
    return affine_solution_set(a, b, g.rank());
}

std::vector<Vec> farey_directions(int min_count) {
    std::set<std::pair<long, long>> dirs;
    for (int order = 1;; ++order) {
        dirs.clear();
        for (long q = 1; q <= order; ++q)
            for (long p = 0; p <= q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                dirs.insert({q, p});               // slope in [0,1]
                dirs.insert({p, q});               // slope in [1,inf]
                if (p != 0) dirs.insert({-p, q});  // second quadrant
                if (p != 0) dirs.insert({-q, p});
            }
        if (static_cast<int>(dirs.size()) >= min_count || order > 1000) break;
    }
    std::vector<Vec> out;
    out.reserve(dirs.size());
    for (const auto& [x, y] : dirs) out.push_back(Vec{rat(x), rat(y)});
    return out;
}

std::vector<Vec> random_directions(int rank, int count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Vec> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        Vec v(rank);
        for (int i = 0; i < rank; ++i) v[i] = rat(num(rng), den(rng));
        if (!is_zero_vec(v)) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace focal
