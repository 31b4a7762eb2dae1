#include "focal/spectra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "focal/parallel.hpp"

namespace focal {

LengthSpectrum length_spectrum(const Lattice& lat, const Rat& cutoff2, const Budget& budget) {
    if (sgn(cutoff2) <= 0) throw Error("length_spectrum: cutoff2 must be positive");
    Vec origin(lat.rank(), Rat(0));
    auto hist = ball_norm_histogram(lat, origin, cutoff2, BallMode::closed, budget);
    hist.erase(Rat(0));
    LengthSpectrum s;
    s.cutoff2 = cutoff2;
    s.entries.assign(hist.begin(), hist.end());
    return s;
}

// ---------------------------------------------------------------------------
// Focal spectrum: breadth-first over intersection flats by codimension.
//
// A flat generated by independent lambdas l_1..l_k has foot sum_i c_i l_i
// with 2 M c = q, where M is the k x k Gram of the lambdas and q_i = <l_i,l_i>
// (Lagrange conditions of minimizing <x,x> under the plane equations), so
// rho2 = c^T q / 2.  Everything runs on k x k systems; the ambient rank only
// enters through O(n) inner products against the stored plane coefficients.

namespace {

// A flat is identified by the RREF of its defining equations [A|b]; two
// flats are equal as point sets iff those canonical rows coincide.
using FlatKey = std::vector<Rat>;

struct FlatRec {
    std::vector<int> gens;  // indices of an independent generating plane set
    Mat lam_gram;           // Gram of the generating lambdas
    Vec foot;
    Rat rho2;
};

// <lambda_a, x> in O(n) via the stored coefficient row 2 G lambda.
Rat inner_via_plane(const BPlane& p, const Vec& x) {
    Rat acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) acc += p.coeff[i] * x[i];
    return acc / 2;
}

FlatKey key_of(const std::vector<int>& gens, const std::vector<BPlane>& planes, int n) {
    Mat aug;
    aug.reserve(gens.size());
    for (int gi : gens) {
        Vec row = planes[gi].coeff;
        row.push_back(planes[gi].rhs);
        aug.push_back(std::move(row));
    }
    Rref r = rref(aug);
    FlatKey k;
    k.reserve(r.rows.size() * (n + 2));
    for (const Vec& row : r.rows) k.insert(k.end(), row.begin(), row.end());
    return k;
}

// Foot of the flat cut out by the planes with the given lambda Gram; nullopt
// when the Gram is singular (dependent lambdas).
std::optional<std::pair<Vec, Rat>> flat_foot(const std::vector<int>& gens, const Mat& lam_gram,
                                             const std::vector<BPlane>& planes, int n) {
    const int k = static_cast<int>(gens.size());
    Vec q(k);
    for (int i = 0; i < k; ++i) q[i] = planes[gens[i]].rhs;
    Mat twice = mat_scale(Rat(2), lam_gram);
    auto sol = solve_affine(twice, q);
    if (!sol || !sol->kernel.empty()) return std::nullopt;
    Vec foot(n, Rat(0));
    for (int i = 0; i < k; ++i) {
        Vec lv = to_vec(planes[gens[i]].lambda);
        foot = vec_add(foot, vec_scale(sol->point[i], lv));
    }
    Rat rho2(0);
    for (int i = 0; i < k; ++i) rho2 += sol->point[i] * q[i];
    rho2 /= 2;
    return std::make_pair(std::move(foot), std::move(rho2));
}

// Number of codim-sized independent subsets of the incident planes; every
// such subset generates the flat.
long long generating_subset_count(const std::vector<int>& incident,
                                  const std::vector<BPlane>& planes, int codim,
                                  const Budget& budget) {
    long long count = 0;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            ++count;
            return;
        }
        for (int i = start; i + need <= static_cast<int>(incident.size()); ++i) {
            budget.charge(1, "focal spectrum multiplicity");
            pick.push_back(incident[i]);
            Mat rows;
            rows.reserve(pick.size());
            for (int p : pick) rows.push_back(to_vec(planes[p].lambda));
            if (mat_rank(rows) == static_cast<int>(pick.size())) rec(i + 1, need - 1);
            pick.pop_back();
        }
    };
    rec(0, codim);
    return count;
}

}  // namespace

FocalSpectrum focal_spectrum(const Lattice& lat, const Rat& cutoff2, int max_codim,
                             FlatMultiplicity mult, const Budget& budget) {
    const int n = lat.rank();
    if (sgn(cutoff2) <= 0) throw Error("focal_spectrum: cutoff2 must be positive");
    if (max_codim < 1 || max_codim > n)
        throw Error("focal_spectrum: max_codim must be in [1, rank]");

    // Every plane of a contributing flat satisfies <l,l>/4 <= rho2 <= cutoff2,
    // so the candidate planes are exactly those with <l,l> <= 4*cutoff2.
    Vec origin(n, Rat(0));
    auto lambdas = enumerate_ball(lat, origin, 4 * cutoff2, BallMode::closed, budget);
    std::vector<BPlane> planes;
    planes.reserve(lambdas.size());
    for (const LatticePoint& p : lambdas) {
        if (std::all_of(p.coords.begin(), p.coords.end(), [](auto c) { return c == 0; })) continue;
        planes.push_back(BPlane::of(lat, p));
    }

    // Level-by-level intersection.  A child flat is contained in its parent,
    // so rho2 only grows and pruning at cutoff2 stays complete.
    std::vector<std::map<FlatKey, FlatRec>> levels;
    {
        std::map<FlatKey, FlatRec> level;
        for (int pi = 0; pi < static_cast<int>(planes.size()); ++pi) {
            FlatRec rec;
            rec.gens = {pi};
            rec.lam_gram = {{planes[pi].rhs}};
            Vec lv = to_vec(planes[pi].lambda);
            rec.foot = vec_scale(rat(1, 2), lv);
            rec.rho2 = planes[pi].rhs / 4;  // tangency radius
            level.emplace(key_of(rec.gens, planes, n), std::move(rec));
        }
        levels.push_back(std::move(level));
    }

    for (int codim = 2; codim <= max_codim; ++codim) {
        // Parent x plane extension, parallel over parents, merged in order.
        std::vector<const FlatRec*> parents;
        parents.reserve(levels.back().size());
        for (const auto& [key, rec] : levels.back()) parents.push_back(&rec);
        std::vector<std::map<FlatKey, FlatRec>> partial(parents.size());

        parallel_for_jobs(static_cast<int>(parents.size()), [&](int job) {
            const FlatRec& flat = *parents[job];
            const int k = static_cast<int>(flat.gens.size());
            for (int pi = 0; pi < static_cast<int>(planes.size()); ++pi) {
                budget.charge(1, "focal spectrum flats");
                const BPlane& p = planes[pi];
                // Extended lambda Gram.
                Mat m(k + 1, Vec(k + 1));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) m[i][j] = flat.lam_gram[i][j];
                Vec plane_lv = to_vec(p.lambda);
                for (int i = 0; i < k; ++i) {
                    Rat ip = inner_via_plane(planes[flat.gens[i]], plane_lv);
                    m[i][k] = ip;
                    m[k][i] = ip;
                }
                m[k][k] = p.rhs;
                std::vector<int> gens = flat.gens;
                gens.push_back(pi);
                auto foot = flat_foot(gens, m, planes, n);
                if (!foot) continue;  // dependent lambda: same flat or empty, both skipped
                if (foot->second > cutoff2) continue;
                FlatKey key = key_of(gens, planes, n);
                FlatRec rec;
                rec.gens = std::move(gens);
                rec.lam_gram = std::move(m);
                rec.foot = std::move(foot->first);
                rec.rho2 = std::move(foot->second);
                partial[job].emplace(std::move(key), std::move(rec));
            }
        });

        std::map<FlatKey, FlatRec> next;
        for (auto& pm : partial)
            for (auto& [key, rec] : pm) next.emplace(std::move(key), std::move(rec));
        levels.push_back(std::move(next));
    }

    // Bucket by rho2.
    std::map<Rat, FocalSpectrum::Entry> buckets;
    for (std::size_t lv = 0; lv < levels.size(); ++lv) {
        const int codim = static_cast<int>(lv) + 1;
        for (const auto& [key, flat] : levels[lv]) {
            long long weight = 1;
            if (mult == FlatMultiplicity::generating_subsets && codim >= 2) {
                // Incident planes: lambda in the span of the generators and
                // the foot on the plane.
                std::vector<int> incident;
                for (int pi = 0; pi < static_cast<int>(planes.size()); ++pi) {
                    budget.charge(1, "focal spectrum multiplicity");
                    if (2 * inner_via_plane(planes[pi], flat.foot) != planes[pi].rhs) continue;
                    Mat rows;
                    rows.reserve(flat.gens.size() + 1);
                    for (int gi : flat.gens) rows.push_back(to_vec(planes[gi].lambda));
                    rows.push_back(to_vec(planes[pi].lambda));
                    if (mat_rank(rows) == codim) incident.push_back(pi);
                }
                weight = generating_subset_count(incident, planes, codim, budget);
            }
            auto& e = buckets[flat.rho2];
            e.rho2 = flat.rho2;
            e.multiplicity += weight;
            e.codim_breakdown[codim] += weight;
        }
    }

    FocalSpectrum s;
    s.cutoff2 = cutoff2;
    s.max_codim = max_codim;
    s.entries.reserve(buckets.size());
    for (auto& [rho2, e] : buckets) s.entries.push_back(std::move(e));
    return s;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

template <class Entries, class GetCount>
SpectrumDiff compare_entries(const Entries& left, const Entries& right, const GetCount& count) {
    SpectrumDiff d;
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
        bool take_left = j >= right.size() ||
                         (i < left.size() && left[i].first < right[j].first);
        bool take_right = i >= left.size() ||
                          (j < right.size() && right[j].first < left[i].first);
        Rat rho2;
        long long lc = 0, rc = 0;
        if (take_left && !take_right) {
            rho2 = left[i].first;
            lc = count(left[i]);
            ++i;
        } else if (take_right && !take_left) {
            rho2 = right[j].first;
            rc = count(right[j]);
            ++j;
        } else {
            rho2 = left[i].first;
            lc = count(left[i]);
            rc = count(right[j]);
            ++i;
            ++j;
        }
        if (lc != rc) {
            d.verdict = SpectrumDiff::Verdict::differ;
            d.first_discrepancy = SpectrumDiff::Discrepancy{rho2, lc, rc};
            return d;
        }
    }
    return d;
}

}  // namespace

SpectrumDiff compare(const LengthSpectrum& left, const LengthSpectrum& right) {
    if (left.cutoff2 != right.cutoff2)
        throw CutoffMismatchError("compare: length spectra have different cutoffs");
    return compare_entries(left.entries, right.entries,
                           [](const auto& e) { return e.second; });
}

SpectrumDiff compare(const FocalSpectrum& left, const FocalSpectrum& right) {
    if (left.cutoff2 != right.cutoff2)
        throw CutoffMismatchError("compare: focal spectra have different cutoffs");
    if (left.max_codim != right.max_codim)
        throw CutoffMismatchError("compare: focal spectra have different max_codim");
    std::vector<std::pair<Rat, long long>> l, r;
    for (const auto& e : left.entries) l.emplace_back(e.rho2, e.multiplicity);
    for (const auto& e : right.entries) r.emplace_back(e.rho2, e.multiplicity);
    return compare_entries(l, r, [](const auto& e) { return e.second; });
}

// ---------------------------------------------------------------------------
// Root graph

int root_graph_components(const Lattice& lat, const Budget& budget) {
    Rat m = minimal_norm2(lat, budget);
    Vec origin(lat.rank(), Rat(0));
    auto roots = enumerate_ball(lat, origin, m, BallMode::sphere, budget);

    // Quotient by +-: keep the lexicographically larger of {r, -r}.
    std::vector<Vec> reps;
    for (const LatticePoint& p : roots) {
        LatticePoint neg;
        neg.coords.reserve(p.coords.size());
        for (auto c : p.coords) neg.coords.push_back(-c);
        if (neg < p) reps.push_back(to_vec(p));
    }
    std::vector<Vec> grams(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        grams[i] = mat_vec(lat.gram().entries(), reps[i]);

    std::vector<int> parent(reps.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            budget.charge(1, "root graph");
            Rat ip(0);
            for (std::size_t k = 0; k < reps[i].size(); ++k) ip += grams[i][k] * reps[j][k];
            if (sgn(ip) != 0) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[a] = b;
            }
        }
    int components = 0;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
    return components;
}

// ---------------------------------------------------------------------------
// Export

std::string to_csv(const LengthSpectrum& s) {
    std::ostringstream os;
    os << "rho2_num,rho2_den,multiplicity\n";
    for (const auto& [norm2, count] : s.entries)
        os << norm2.get_num() << ',' << norm2.get_den() << ',' << count << '\n';
    return os.str();
}

std::string to_csv(const FocalSpectrum& s) {
    std::ostringstream os;
    os << "rho2_num,rho2_den,multiplicity,codim\n";
    for (const auto& e : s.entries)
        for (const auto& [codim, count] : e.codim_breakdown)
            os << e.rho2.get_num() << ',' << e.rho2.get_den() << ',' << count << ',' << codim
               << '\n';
    return os.str();
}

std::string to_json_string(const LengthSpectrum& s) {
    nlohmann::ordered_json j;
    j["kind"] = "length";
    j["cutoff2"] = rat_str(s.cutoff2);
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [norm2, count] : s.entries)
        j["entries"].push_back({{"rho2", rat_str(norm2)}, {"multiplicity", count}});
    return j.dump(2) + "\n";
}

std::string to_json_string(const FocalSpectrum& s) {
    nlohmann::ordered_json j;
    j["kind"] = "focal";
    j["cutoff2"] = rat_str(s.cutoff2);
    j["max_codim"] = s.max_codim;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
        nlohmann::ordered_json je;
        je["rho2"] = rat_str(e.rho2);
        je["multiplicity"] = e.multiplicity;
        je["by_codim"] = nlohmann::ordered_json::object();
        for (const auto& [codim, count] : e.codim_breakdown)
            je["by_codim"][std::to_string(codim)] = count;
        j["entries"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

}  // namespace focal
