// focaltool: exact computations on flat tori given by rational Gram matrices.
// Subcommands: info, classify, zones, spectra, compare, witt.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "focal/focal.hpp"
#include "focal/isometry.hpp"
#include "focal/parallel.hpp"
#include "focal/spectra.hpp"

using namespace focal;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    int threads = -1;  // -1: unset, use FOCAL_THREADS or auto
    long long max_ops = 10'000'000;
    double timeout_s = 300.0;
};

void apply_globals(const GlobalOpts& g) {
    int threads = g.threads;
    if (threads < 0) {
        if (const char* env = std::getenv("FOCAL_THREADS")) threads = std::atoi(env);
        else threads = 0;
    }
    set_thread_count(threads);
}

Budget make_budget(const GlobalOpts& g) { return Budget(g.max_ops, g.timeout_s); }

Lattice load_lattice(const std::string& positional, const std::string& catalog_name) {
    if (!catalog_name.empty() && !positional.empty())
        throw Error("give either a lattice file or --catalog, not both");
    if (!catalog_name.empty()) return catalog(catalog_name);
    if (positional.empty()) throw Error("no lattice given (file path or --catalog NAME)");
    if (positional.rfind("catalog:", 0) == 0) return catalog(positional.substr(8));
    return read_lattice_file(positional);
}

Vec parse_point(const std::string& text, int rank) {
    Vec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        v.push_back(parse_rat(tok));
    }
    if (static_cast<int>(v.size()) != rank)
        throw DimensionMismatch("point has " + std::to_string(v.size()) +
                                " coordinates, lattice rank is " + std::to_string(rank));
    return v;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

std::string point_str(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(p.coords[i]);
    }
    return s + ")";
}

ordered_json gram_json(const Lattice& lat) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < lat.rank(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < lat.rank(); ++j) row.push_back(rat_str(lat.gram().at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------

int cmd_info(const Lattice& lat, const Rat& cutoff2, bool as_json, const Budget& budget) {
    Rat min2 = minimal_norm2(lat, budget);
    LengthSpectrum spec = length_spectrum(lat, cutoff2, budget);
    if (as_json) {
        ordered_json j;
        j["name"] = lat.name();
        j["rank"] = lat.rank();
        j["gram"] = gram_json(lat);
        j["minimal_norm2"] = rat_str(min2);
        j["sphere_counts"] = ordered_json::array();
        for (const auto& [n2, c] : spec.entries)
            j["sphere_counts"].push_back({{"norm2", rat_str(n2)}, {"count", c}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "name: " << (lat.name().empty() ? "(unnamed)" : lat.name()) << "\n";
        std::cout << "rank: " << lat.rank() << "\n";
        std::cout << "gram:\n";
        for (int i = 0; i < lat.rank(); ++i) {
            std::cout << " ";
            for (int j = 0; j < lat.rank(); ++j) std::cout << " " << rat_str(lat.gram().at(i, j));
            std::cout << "\n";
        }
        std::cout << "minimal_norm2: " << rat_str(min2) << "\n";
        std::cout << "sphere_counts (norm2 <= " << rat_str(cutoff2) << "):\n";
        for (const auto& [n2, c] : spec.entries)
            std::cout << "  " << rat_str(n2) << ": " << c << "\n";
    }
    return 0;
}

int cmd_classify(const Lattice& lat, const Vec& v, bool as_json, const Budget& budget) {
    FocalClass fc = classify(lat, v, budget);
    auto [m, planes] = mu(lat, v, budget);
    if (as_json) {
        ordered_json j;
        j["point"] = ordered_json::array();
        for (const Rat& x : v) j["point"].push_back(rat_str(x));
        j["mu"] = fc.mu;
        j["iota"] = fc.iota;
        j["brillouin"] = fc.brillouin;
        j["sigma_index"] = fc.sigma_index;
        j["nu"] = fc.nu;
        if (fc.zone) j["zone"] = *fc.zone;
        else j["zone"] = "boundary";
        j["incident_lambdas"] = ordered_json::array();
        for (const BPlane& p : planes) {
            ordered_json lam = ordered_json::array();
            for (auto c : p.lambda.coords) lam.push_back(c);
            j["incident_lambdas"].push_back(std::move(lam));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "point: " << vec_str(v) << "\n";
        std::cout << "mu: " << fc.mu << "\n";
        std::cout << "iota: " << fc.iota << "\n";
        std::cout << "brillouin: " << fc.brillouin << "\n";
        std::cout << "sigma_index: " << fc.sigma_index << "\n";
        std::cout << "nu: " << fc.nu << "\n";
        if (fc.zone) std::cout << "zone: Int(B" << *fc.zone << ")\n";
        else std::cout << "zone: boundary\n";
        if (!planes.empty()) {
            std::cout << "incident_lambdas:\n";
            for (const BPlane& p : planes) std::cout << "  " << point_str(p.lambda) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// zones: annulus table + radial fan SVG (rank 2 only)

std::string fmt_px(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string render_zone_svg(const Lattice& lat, int k_max, const std::vector<Vec>& directions,
                            const std::vector<std::pair<Rat, Rat>>& annuli, const Budget& budget) {
    static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                     "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    const double cx = 400.0, cy = 400.0;
    double outer = 0.0;
    for (const auto& [lo, hi] : annuli) outer = std::max(outer, std::sqrt(to_double(hi)));
    if (outer <= 0.0) outer = 1.0;
    const double px_per_unit = 360.0 / outer;

    auto emb = lat.embedding();
    auto to_xy = [&](const Vec& u, double t) {
        double ax = 0.0, ay = 0.0;
        for (int i = 0; i < 2; ++i) {
            double ui = to_double(u[i]) * t;
            ax += ui * emb[i][0];
            ay += ui * emb[i][1];
        }
        return std::pair<double, double>{cx + ax * px_per_unit, cy - ay * px_per_unit};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    // Radial fan: one polyline segment per zone interval per ray (and the
    // opposite ray, which has the same crossings by central symmetry).
    for (const Vec& u : directions) {
        RadialProfile prof = radial_profile(lat, u, k_max, budget);
        for (int sign = +1; sign >= -1; sign -= 2) {
            double t_prev = 0.0;
            long zone = 1;
            for (std::size_t i = 0; i < prof.crossings.size() && zone <= k_max; ++i) {
                double t_next = to_double(prof.crossings[i].t);
                auto [x1, y1] = to_xy(u, sign * t_prev);
                auto [x2, y2] = to_xy(u, sign * t_next);
                svg << "<line x1=\"" << fmt_px(x1) << "\" y1=\"" << fmt_px(y1) << "\" x2=\""
                    << fmt_px(x2) << "\" y2=\"" << fmt_px(y2) << "\" stroke=\""
                    << kPalette[(zone - 1) % 10] << "\" stroke-width=\"2\"/>\n";
                t_prev = t_next;
                zone += static_cast<long>(prof.crossings[i].entering.size());
            }
        }
    }

    // Annulus circles per zone index.
    for (std::size_t k = 0; k < annuli.size(); ++k) {
        for (const Rat& r2 : {annuli[k].first, annuli[k].second}) {
            double r = std::sqrt(to_double(r2)) * px_per_unit;
            svg << "<circle cx=\"" << fmt_px(cx) << "\" cy=\"" << fmt_px(cy) << "\" r=\""
                << fmt_px(r) << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.75\" "
                << "stroke-dasharray=\"4 3\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_zones(const Lattice& lat, int k_max, int n_directions, const std::string& svg_path,
              bool as_json, const Budget& budget) {
    if (lat.rank() != 2) throw Error("zones: only rank-2 lattices are supported");
    if (k_max < 1) throw Error("zones: k-max must be >= 1");
    std::vector<Vec> dirs = farey_directions(n_directions);

    auto slots = zone_annuli(lat, k_max, dirs, budget);
    std::vector<std::pair<Rat, Rat>> annuli;
    annuli.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        if (!slots[k - 1])
            throw Error("zones: zone " + std::to_string(k) +
                        " not met by any sampled direction; raise --directions");
        annuli.push_back(*slots[k - 1]);
    }

    if (as_json) {
        ordered_json j;
        j["name"] = lat.name();
        j["k_max"] = k_max;
        j["directions"] = static_cast<int>(dirs.size());
        j["annuli"] = ordered_json::array();
        for (int k = 1; k <= k_max; ++k)
            j["annuli"].push_back({{"k", k},
                                   {"r2_min", rat_str(annuli[k - 1].first)},
                                   {"r2_max", rat_str(annuli[k - 1].second)}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k r2_min r2_max\n";
        for (int k = 1; k <= k_max; ++k)
            std::cout << k << " " << rat_str(annuli[k - 1].first) << " "
                      << rat_str(annuli[k - 1].second) << "\n";
    }

    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) throw Error("cannot write SVG to '" + svg_path + "'");
        out << render_zone_svg(lat, k_max, dirs, annuli, budget);
    }
    return 0;
}

int cmd_spectra(const Lattice& lat, const std::string& kind, const Rat& cutoff2, int max_codim,
                const std::string& format, FlatMultiplicity mult, const Budget& budget) {
    if (kind == "length") {
        LengthSpectrum s = length_spectrum(lat, cutoff2, budget);
        std::cout << (format == "json" ? to_json_string(s) : to_csv(s));
    } else if (kind == "focal") {
        FocalSpectrum s = focal_spectrum(lat, cutoff2, max_codim, mult, budget);
        std::cout << (format == "json" ? to_json_string(s) : to_csv(s));
    } else {
        throw Error("spectra: --kind must be 'length' or 'focal'");
    }
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_compare(const Lattice& a, const Lattice& b, const Rat& cutoff2, int max_codim,
                const GlobalOpts& g) {
    if (a.rank() != b.rank()) throw RankMismatchError("compare: lattice ranks differ");
    Budget budget = make_budget(g);

    auto [na, sa] = normalize_scale(a, budget);
    auto [nb, sb] = normalize_scale(b, budget);
    std::cout << "rank: " << a.rank() << "\n";
    std::cout << "scale_left: " << rat_str(sa) << "\n";
    std::cout << "scale_right: " << rat_str(sb) << "\n";

    if (a.rank() <= kMaxExactIsometryRank) {
        auto result = is_isometric_up_to_scale(a, b, budget);
        // Informational invariants alongside the decision.
        try {
            Budget phase = make_budget(g);
            auto ls_a = length_spectrum(na, cutoff2, phase);
            auto ls_b = length_spectrum(nb, cutoff2, phase);
            SpectrumDiff ld = compare(ls_a, ls_b);
            if (ld.verdict == SpectrumDiff::Verdict::differ) {
                const auto& disc = *ld.first_discrepancy;
                std::cout << "length_spectra: differ at norm2 " << rat_str(disc.rho2) << " ("
                          << disc.left << " vs " << disc.right << ")\n";
            } else {
                std::cout << "length_spectra: equal up to cutoff2 " << rat_str(cutoff2) << "\n";
            }
            std::cout << "root_graph_components: " << root_graph_components(na, phase) << " vs "
                      << root_graph_components(nb, phase) << "\n";
        } catch (const ResourceError& e) {
            std::cout << "invariants: skipped (" << e.what() << ")\n";
        }
        if (auto* cert = std::get_if<IsometryCertificate>(&result)) {
            std::cout << "exact_decision: equivalent\n";
            std::cout << "certificate_scale: " << rat_str(cert->scale) << "\n";
            std::cout << "certificate_transform:\n";
            for (const Vec& row : cert->transform) {
                std::cout << " ";
                for (const Rat& x : row) std::cout << " " << rat_str(x);
                std::cout << "\n";
            }
            std::cout << "verdict: equivalent\n";
            return 0;
        }
        std::cout << "exact_decision: not isometric\n";
        std::cout << "witness: " << std::get<NotIsometric>(result).witness << "\n";
        std::cout << "verdict: distinguished\n";
        return 1;
    }

    // Rank too large for the exact decision: compare scale-invariant data of
    // the normalized lattices.  A phase the budget cuts off is reported and
    // skipped; the verdict uses whatever completed.
    bool skipped = false;
    try {
        Budget phase = make_budget(g);
        auto ls_a = length_spectrum(na, cutoff2, phase);
        auto ls_b = length_spectrum(nb, cutoff2, phase);
        SpectrumDiff ld = compare(ls_a, ls_b);
        if (ld.verdict == SpectrumDiff::Verdict::differ) {
            const auto& disc = *ld.first_discrepancy;
            std::cout << "length_spectra: differ at norm2 " << rat_str(disc.rho2) << " ("
                      << disc.left << " vs " << disc.right << ")\n";
            std::cout << "verdict: distinguished\n";
            return 1;
        }
        std::cout << "length_spectra: equal up to cutoff2 " << rat_str(cutoff2) << "\n";
    } catch (const ResourceError& e) {
        std::cout << "length_spectra: skipped (" << e.what() << ")\n";
        skipped = true;
    }

    try {
        Budget phase = make_budget(g);
        int ra = root_graph_components(na, phase);
        int rb = root_graph_components(nb, phase);
        std::cout << "root_graph_components: " << ra << " vs " << rb << "\n";
        if (ra != rb) {
            std::cout << "verdict: distinguished\n";
            return 1;
        }
    } catch (const ResourceError& e) {
        std::cout << "root_graph_components: skipped (" << e.what() << ")\n";
        skipped = true;
    }

    try {
        Budget phase = make_budget(g);
        Rat focal_cut = cutoff2 / 4;  // same plane set as the length comparison
        auto fa = focal_spectrum(na, focal_cut, max_codim, FlatMultiplicity::point_sets, phase);
        auto fb = focal_spectrum(nb, focal_cut, max_codim, FlatMultiplicity::point_sets, phase);
        SpectrumDiff fd = compare(fa, fb);
        if (fd.verdict == SpectrumDiff::Verdict::differ) {
            const auto& disc = *fd.first_discrepancy;
            std::cout << "focal_spectra: differ at rho2 " << rat_str(disc.rho2) << " ("
                      << disc.left << " vs " << disc.right << ")\n";
            std::cout << "verdict: distinguished\n";
            return 1;
        }
        std::cout << "focal_spectra: equal up to cutoff2 " << rat_str(focal_cut)
                  << " (max_codim " << max_codim << ")\n";
    } catch (const ResourceError& e) {
        std::cout << "focal_spectra: skipped (" << e.what() << ")\n";
        skipped = true;
    }

    std::cout << "verdict: inconclusive" << (skipped ? " (phases skipped)" : "") << "\n";
    return 2;
}

int cmd_witt(const Rat& cutoff2, int max_codim, const Rat& focal_cutoff2, const GlobalOpts& g) {
    Lattice a = catalog("E8xE8");
    Lattice b = catalog("D16plus");
    std::cout << "pair: E8xE8 vs D16plus\n";

    {
        Budget budget = make_budget(g);
        try {
            auto sa = length_spectrum(a, cutoff2, budget);
            auto sb = length_spectrum(b, cutoff2, budget);
            std::cout << "length_spectrum E8xE8:";
            for (const auto& [n2, c] : sa.entries) std::cout << " (" << rat_str(n2) << "," << c << ")";
            std::cout << "\nlength_spectrum D16plus:";
            for (const auto& [n2, c] : sb.entries) std::cout << " (" << rat_str(n2) << "," << c << ")";
            std::cout << "\n";
            SpectrumDiff d = compare(sa, sb);
            if (d.verdict == SpectrumDiff::Verdict::equal_up_to_cutoff)
                std::cout << "length_spectra: equal up to cutoff2 " << rat_str(cutoff2) << "\n";
            else {
                const auto& disc = *d.first_discrepancy;
                std::cout << "length_spectra: differ at " << rat_str(disc.rho2) << " ("
                          << disc.left << " vs " << disc.right << ")\n";
            }
        } catch (const ResourceError& e) {
            std::cout << "length phase: skipped (" << e.what() << ")\n";
        }
    }

    {
        Budget budget = make_budget(g);
        try {
            int ca = root_graph_components(a, budget);
            int cb = root_graph_components(b, budget);
            std::cout << "root_graph_components: E8xE8 " << ca << ", D16plus " << cb << "\n";
            if (ca != cb) std::cout << "non_isometry_witness: root graph components differ\n";
        } catch (const ResourceError& e) {
            std::cout << "root graph phase: skipped (" << e.what() << ")\n";
        }
    }

    {
        Budget budget = make_budget(g);
        try {
            auto fa = focal_spectrum(a, focal_cutoff2, max_codim, FlatMultiplicity::point_sets,
                                     budget);
            auto fb = focal_spectrum(b, focal_cutoff2, max_codim, FlatMultiplicity::point_sets,
                                     budget);
            std::cout << "focal_spectrum E8xE8 (cutoff2 " << rat_str(focal_cutoff2)
                      << ", max_codim " << max_codim << "):\n" << to_csv(fa);
            std::cout << "focal_spectrum D16plus:\n" << to_csv(fb);
            SpectrumDiff d = compare(fa, fb);
            if (d.verdict == SpectrumDiff::Verdict::equal_up_to_cutoff)
                std::cout << "focal_spectra: equal up to cutoff2 " << rat_str(focal_cutoff2)
                          << "\n";
            else {
                const auto& disc = *d.first_discrepancy;
                std::cout << "focal_spectra: differ at rho2 " << rat_str(disc.rho2) << " ("
                          << disc.left << " vs " << disc.right << ")\n";
            }
        } catch (const ResourceError& e) {
            std::cout << "focal phase: skipped (" << e.what() << ")\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact focal decompositions, Brillouin zones and spectra of flat tori"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads (0 = all cores; env FOCAL_THREADS)");
    app.add_option("--max-ops", g.max_ops, "work budget before a resource error");
    app.add_option("--timeout", g.timeout_s, "soft wall-clock cap in seconds");

    std::string lattice_arg, lattice_arg2, catalog_name, point_text, svg_path;
    std::string kind = "length", format = "csv", cutoff_text = "4", multiplicity = "point-sets";
    std::string witt_cutoff_text = "6", focal_cutoff_text = "3/4";
    int k_max = 3, n_directions = 64, max_codim = 2;
    bool as_json = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("lattice", lattice_arg, "lattice file (or catalog:NAME)");
        cmd->add_option("--catalog", catalog_name, "catalog lattice name");
    };

    CLI::App* info = app.add_subcommand("info", "rank, Gram, minimal norm, sphere counts");
    add_source(info);
    info->add_option("--cutoff2", cutoff_text, "sphere-count cutoff (squared norm)");
    info->add_flag("--json", as_json, "JSON output");

    CLI::App* cls = app.add_subcommand("classify", "focal classification of a point");
    add_source(cls);
    cls->add_option("--point", point_text, "rational coordinates, comma separated")->required();
    cls->add_flag("--json", as_json, "JSON output");

    CLI::App* zones = app.add_subcommand("zones", "zone annuli and radial fan (rank 2)");
    add_source(zones);
    zones->add_option("--k-max", k_max, "zones 1..k");
    zones->add_option("--directions", n_directions, "minimum number of Farey directions");
    zones->add_option("--svg", svg_path, "write an SVG rendering to this path");
    zones->add_flag("--json", as_json, "JSON output");

    CLI::App* spectra = app.add_subcommand("spectra", "length or focal spectrum");
    add_source(spectra);
    spectra->add_option("--kind", kind, "length | focal");
    spectra->add_option("--cutoff2", cutoff_text, "spectrum cutoff (squared radius)");
    spectra->add_option("--max-codim", max_codim, "focal: deepest intersection codimension");
    spectra->add_option("--format", format, "csv | json");
    spectra->add_option("--multiplicity", multiplicity,
                        "focal: point-sets | generating-subsets");

    CLI::App* cmp = app.add_subcommand("compare", "isometry-up-to-rescaling decision");
    cmp->add_option("latticeA", lattice_arg, "first lattice (file or catalog:NAME)")->required();
    cmp->add_option("latticeB", lattice_arg2, "second lattice (file or catalog:NAME)")->required();
    cmp->add_option("--cutoff2", cutoff_text, "length-spectrum cutoff for rank > 8");
    cmp->add_option("--max-codim", max_codim, "focal-spectrum codimension for rank > 8");

    CLI::App* witt = app.add_subcommand("witt", "the dimension-16 isospectral pair experiment");
    witt->add_option("--cutoff2", witt_cutoff_text, "length-spectrum cutoff");
    witt->add_option("--max-codim", max_codim, "focal-spectrum codimension");
    witt->add_option("--focal-cutoff2", focal_cutoff_text, "focal-spectrum cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        apply_globals(g);
        if (witt->parsed())
            return cmd_witt(parse_rat(witt_cutoff_text), max_codim, parse_rat(focal_cutoff_text),
                            g);
        Rat cutoff2 = parse_rat(cutoff_text);
        if (info->parsed())
            return cmd_info(load_lattice(lattice_arg, catalog_name), cutoff2, as_json,
                            make_budget(g));
        if (cls->parsed()) {
            Lattice lat = load_lattice(lattice_arg, catalog_name);
            return cmd_classify(lat, parse_point(point_text, lat.rank()), as_json,
                                make_budget(g));
        }
        if (zones->parsed())
            return cmd_zones(load_lattice(lattice_arg, catalog_name), k_max, n_directions,
                             svg_path, as_json, make_budget(g));
        if (spectra->parsed()) {
            FlatMultiplicity mult;
            if (multiplicity == "point-sets") mult = FlatMultiplicity::point_sets;
            else if (multiplicity == "generating-subsets")
                mult = FlatMultiplicity::generating_subsets;
            else throw Error("spectra: --multiplicity must be point-sets or generating-subsets");
            return cmd_spectra(load_lattice(lattice_arg, catalog_name), kind, cutoff2, max_codim,
                               format, mult, make_budget(g));
        }
        if (cmp->parsed())
            return cmd_compare(load_lattice(lattice_arg, ""), load_lattice(lattice_arg2, ""),
                               cutoff2, max_codim, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
