// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Pinned constants were established by the independent oracles in
// tests/oracles.hpp (naive box scans, ambient-coordinate theta counts) and by
// pre-build oracle runs at higher sampling density where noted.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "focal/focal.hpp"
#include "focal/isometry.hpp"
#include "focal/parallel.hpp"
#include "focal/spectra.hpp"
#include "oracles.hpp"

using namespace focal;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int id_, std::string label_) : id(id_), label(std::move(label_)) {}
    void finish(bool ok, const std::string& detail = "") {
        double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("CRITERION %2d: %s — %s (%.1fs)%s%s\n", id, ok ? "PASS" : "FAIL",
                    label.c_str(), sec, detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

Budget big_budget() { return Budget(4'000'000'000LL, 3600.0); }

// Sample points for criteria 1-2: random rationals plus constructed wall
// points (halves of short vectors), scaled per lattice to keep balls small.
std::vector<Vec> sample_points(const Lattice& lat, int count, long scale_den, unsigned seed) {
    std::mt19937_64 rng(seed);
    const int n = lat.rank();
    std::vector<Vec> pts;
    pts.reserve(count);
    Vec origin(n, Rat(0));
    auto shorts = enumerate_ball(lat, origin, 2 * minimal_norm2(lat), BallMode::closed);
    std::uniform_int_distribution<long> den(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, shorts.empty() ? 0 : shorts.size() - 1);
    while (static_cast<int>(pts.size()) < count) {
        if (pts.size() % 10 == 0 && !shorts.empty()) {
            // wall point: half of a short lattice vector
            Vec v = vec_scale(rat(1, 2), to_vec(shorts[pick(rng)]));
            if (!is_zero_vec(v)) {
                pts.push_back(v);
                continue;
            }
        }
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            long d = den(rng);
            std::uniform_int_distribution<long> num(-d, d);
            v[i] = rat(num(rng), d * scale_den);
        }
        pts.push_back(std::move(v));
    }
    return pts;
}

void criterion_1_2() {
    struct LatticeSpec {
        const char* name;
        long scale_den;
    };
    const LatticeSpec lattices[] = {{"Z2", 1}, {"A2", 1}, {"Z3", 1}, {"D4", 2}, {"E8", 4}};
    const int kPoints = 10000;

    Criterion c1(1, "counting identity B = 1 + iota + mu on 5 x 10^4 random points");
    Criterion c2(2, "dual-oracle iota: segment route equals strict-ball route");
    std::atomic<long> id_fail{0}, dual_fail{0};
    for (const auto& [name, scale_den] : lattices) {
        Lattice lat = catalog(name);
        auto pts = sample_points(lat, kPoints, scale_den, 0xC0FFEE ^ lat.rank());
        parallel_for_jobs(static_cast<int>(pts.size()), [&](int i) {
            const Vec& v = pts[i];
            long m = mu(lat, v).first;
            long ia = 0, ib = 0;
            if (!is_zero_vec(v)) {
                ia = iota_via_crossings(lat, v);
                ib = iota_via_strict_ball(lat, v);
            }
            long b = brillouin_index(lat, v);
            if (b != 1 + ia + m) ++id_fail;
            if (ia != ib) ++dual_fail;
        });
    }
    c1.finish(id_fail == 0, id_fail ? std::to_string(id_fail) + " violations" : "");
    c2.finish(dual_fail == 0, dual_fail ? std::to_string(dual_fail) + " disagreements" : "");
}

void criterion_3() {
    Criterion c(3, "zone labels between radial crossings match classify (200 Farey rays)");
    auto dirs = farey_directions(200);
    std::atomic<long> bad{0};
    for (const char* name : {"Z2", "A2"}) {
        Lattice lat = catalog(name);
        parallel_for_jobs(static_cast<int>(dirs.size()), [&](int di) {
            const Vec& u = dirs[di];
            RadialProfile prof = radial_profile(lat, u, 10);
            for (int i = -1; i + 1 < static_cast<int>(prof.crossings.size()); ++i) {
                Rat lo = i < 0 ? Rat(0) : prof.crossings[i].t;
                Rat hi = prof.crossings[i + 1].t;
                long want = prof.zone_after(i);
                if (want > 10) break;
                for (int s = 1; s <= 5; ++s) {
                    Rat t = lo + (hi - lo) * rat(s, 6);
                    FocalClass fc = classify(lat, vec_scale(t, u));
                    if (fc.boundary() || *fc.zone != want) ++bad;
                }
            }
            // crossing parameters themselves sit on zone boundaries
            for (const auto& cr : prof.crossings)
                if (classify(lat, vec_scale(cr.t, u)).mu == 0) ++bad;
        });
    }
    c.finish(bad == 0, bad ? std::to_string(bad) + " mismatches" : "");
}

void criterion_4() {
    Criterion c(4, "Dirichlet cells: Z2 annulus (1/4, 1/2), A2 annulus (1/2, 2/3)");
    auto dirs = farey_directions(1000);
    auto z2 = zone_annulus(catalog("Z2"), 1, dirs);
    auto a2 = zone_annulus(catalog("A2"), 1, dirs);
    bool ok = z2.first == rat(1, 4) && z2.second == rat(1, 2) && a2.first == rat(1, 2) &&
              a2.second == rat(2, 3);
    c.finish(ok, ok ? ""
                    : "got Z2 (" + rat_str(z2.first) + ", " + rat_str(z2.second) + "), A2 (" +
                          rat_str(a2.first) + ", " + rat_str(a2.second) + ")");
}

void criterion_5() {
    // Pinned by the pre-build oracle at 10^4 directions: max width 0.521241
    // (Z2, at k=12) and 0.746033 (A2, at k=7); bounds are observed x 1.25.
    Criterion c(5, "annulus width sqrt(R2)-sqrt(r2) bounded for 5 < k <= 30 (10^3 rays)");
    const double pinned[] = {0.6516, 0.9326};
    auto dirs = farey_directions(1000);
    bool ok = true;
    std::string detail;
    const char* names[] = {"Z2", "A2"};
    for (int li = 0; li < 2; ++li) {
        Lattice lat = catalog(names[li]);
        auto slots = zone_annuli(lat, 30, dirs, big_budget());
        double maxw = 0;
        for (int k = 6; k <= 30; ++k) {
            if (!slots[k - 1]) {
                ok = false;
                detail += std::string(names[li]) + " zone " + std::to_string(k) + " unmet; ";
                continue;
            }
            double w = std::sqrt(to_double(slots[k - 1]->second)) -
                       std::sqrt(to_double(slots[k - 1]->first));
            maxw = std::max(maxw, w);
        }
        if (maxw > pinned[li]) {
            ok = false;
            detail += std::string(names[li]) + " width " + std::to_string(maxw) + " > " +
                      std::to_string(pinned[li]) + "; ";
        }
    }
    c.finish(ok, detail);
}

void criterion_6() {
    Criterion c(6, "Witt pair: equal length spectra to cutoff2 6, root components 2 vs 1");
    const std::vector<std::pair<Rat, long long>> pinned = {
        {rat(2), 480}, {rat(4), 61920}, {rat(6), 1050240}};
    auto sa = length_spectrum(catalog("E8xE8"), rat(6), big_budget());
    auto sb = length_spectrum(catalog("D16plus"), rat(6), big_budget());
    bool ok = sa.entries == pinned && sb.entries == pinned;
    // the ambient-coordinate oracle must reproduce the same counts
    auto oa = oracles::e8e8_theta(6);
    auto ob = oracles::dplus_theta(16, 6);
    for (const auto& [n2, cnt] : pinned) {
        long key = static_cast<long>(n2.get_num().get_si());
        if (oa[key] != cnt || ob[key] != cnt) ok = false;
    }
    int ra = root_graph_components(catalog("E8xE8"), big_budget());
    int rb = root_graph_components(catalog("D16plus"), big_budget());
    if (ra != 2 || rb != 1) ok = false;
    c.finish(ok, "components " + std::to_string(ra) + " vs " + std::to_string(rb));
}

void criterion_7() {
    Criterion c(7, "isometry decision: 100 random recoveries, Z2/A2 and Z3/D3 distinguished");
    std::mt19937_64 rng(0x15011905);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 2;
        Mat g = oracles::random_pd_gram(rng, n, 3);
        Mat u = oracles::random_unimodular(rng, n, 5);
        Rat cs = rat(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 4));
        Mat g2 = mat_scale(cs, mat_mul(transpose(u), mat_mul(g, u)));
        auto res = is_isometric_up_to_scale(make_lattice(g), make_lattice(g2), big_budget());
        auto* cert = std::get_if<IsometryCertificate>(&res);
        if (!cert) {
            ok = false;
            detail = "trial " + std::to_string(trial) + " found no certificate";
            break;
        }
        if (mat_mul(transpose(cert->transform), mat_mul(g, cert->transform)) !=
            mat_scale(cert->scale, g2)) {
            ok = false;
            detail = "trial " + std::to_string(trial) + " certificate invalid";
            break;
        }
    }
    if (!std::holds_alternative<NotIsometric>(
            is_isometric_up_to_scale(catalog("Z2"), catalog("A2")))) {
        ok = false;
        detail += " Z2 vs A2 not distinguished";
    }
    if (!std::holds_alternative<NotIsometric>(
            is_isometric_up_to_scale(catalog("Z3"), catalog("D3")))) {
        ok = false;
        detail += " Z3 vs D3 not distinguished";
    }
    c.finish(ok, detail);
}

void criterion_8() {
    Criterion c(8, "codim-1 focal spectrum = length spectrum / 4 on the catalog");
    bool ok = true;
    std::string detail;
    for (const char* name : {"Z2", "A2", "Z3", "D4", "E8", "E8xE8", "D16plus"}) {
        Lattice lat = catalog(name);
        LengthSpectrum ls = length_spectrum(lat, rat(4), big_budget());
        FocalSpectrum fs =
            focal_spectrum(lat, rat(1), 1, FlatMultiplicity::point_sets, big_budget());
        bool match = fs.entries.size() == ls.entries.size();
        for (std::size_t i = 0; match && i < ls.entries.size(); ++i)
            match = fs.entries[i].rho2 == ls.entries[i].first / 4 &&
                    fs.entries[i].multiplicity == ls.entries[i].second;
        if (!match) {
            ok = false;
            detail += std::string(name) + " mismatch; ";
        }
    }
    c.finish(ok, detail);
}

void criterion_9() {
    Criterion c(9, "Z2 focal spectrum at cutoff2 1/2, codim 2: (1/4, 4) and (1/2, 8)");
    FocalSpectrum s = focal_spectrum(catalog("Z2"), rat(1, 2), 2);
    bool ok = s.entries.size() == 2 && s.entries[0].rho2 == rat(1, 4) &&
              s.entries[0].multiplicity == 4 && s.entries[1].rho2 == rat(1, 2) &&
              s.entries[1].multiplicity == 8;

    // Exhaustive pair-of-planes oracle over |lambda|^2 <= 2: the codim-2
    // flats within the cutoff are four distinct corner points at 1/2.
    Lattice z2 = catalog("Z2");
    std::vector<LatticePoint> lams;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            if (a || b) lams.push_back(LatticePoint{{a, b}});
    std::set<std::string> corners;
    for (std::size_t i = 0; i < lams.size(); ++i)
        for (std::size_t j = i + 1; j < lams.size(); ++j) {
            std::vector<BPlane> pair = {BPlane::of(z2, lams[i]), BPlane::of(z2, lams[j])};
            auto flat = flat_intersection(pair, z2.gram());
            if (!flat || flat->codim != 2) continue;
            auto [foot, rho2] = foot_of_origin(*flat, z2.gram());
            if (rho2 > rat(1, 2)) continue;
            if (rho2 != rat(1, 2)) ok = false;  // oracle: corners all sit at 1/2
            corners.insert(rat_str(foot[0]) + "," + rat_str(foot[1]));
        }
    if (corners.size() != 4) ok = false;
    c.finish(ok);
}

// --- criterion 10: CLI determinism ------------------------------------------

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    std::string out_path = "/tmp/focal_acc_" + tag + ".out";
    std::string cmd = std::string(FOCALTOOL_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10() {
    Criterion c(10, "CLI determinism: byte-identical output across runs and thread counts");
    bool ok = true;
    std::string detail;
    const std::vector<std::string> cmds = {
        "info --catalog E8 --json",
        "classify --catalog A2 --point 1/2,1/2 --json",
        "spectra --catalog Z2 --kind focal --cutoff2 1/2 --max-codim 2",
        "spectra --catalog E8 --kind length --cutoff2 4 --format json",
        "compare catalog:Z2 catalog:A2",
        "witt --cutoff2 2 --max-codim 1 --focal-cutoff2 1/2",
    };
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        RunResult a = run_cli(cmds[i] + " --threads 1", "a");
        RunResult b = run_cli(cmds[i] + " --threads 1", "b");
        RunResult d = run_cli(cmds[i] + " --threads 4", "c");
        if (a.out != b.out || a.out != d.out || a.exit_code != d.exit_code) {
            ok = false;
            detail += "cmd " + std::to_string(i) + " unstable; ";
        }
    }
    // SVG bytes across thread counts
    RunResult s1 =
        run_cli("zones --catalog A2 --k-max 3 --svg /tmp/focal_acc_a.svg --threads 1", "s1");
    RunResult s2 =
        run_cli("zones --catalog A2 --k-max 3 --svg /tmp/focal_acc_b.svg --threads 4", "s2");
    if (s1.out != s2.out || slurp("/tmp/focal_acc_a.svg") != slurp("/tmp/focal_acc_b.svg") ||
        slurp("/tmp/focal_acc_a.svg").empty()) {
        ok = false;
        detail += "zones SVG unstable; ";
    }
    std::remove("/tmp/focal_acc_a.svg");
    std::remove("/tmp/focal_acc_b.svg");
    c.finish(ok, detail);
}

}  // namespace

int main() {
    criterion_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
