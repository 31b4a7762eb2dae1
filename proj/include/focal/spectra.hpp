#ifndef FOCAL_SPECTRA_HPP
#define FOCAL_SPECTRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focal/focal.hpp"

namespace focal {

// Sorted multiset of attained squared norms with exact sphere counts.
struct LengthSpectrum {
    Rat cutoff2;
    std::vector<std::pair<Rat, long long>> entries;  // (norm2, count), norm2 ascending
};

// Critical values of the distance-from-origin over the B-plane arrangement:
// for every nonempty intersection flat of >= 1 planes with codim <= max_codim,
// the squared norm of the foot of the origin.  codim-1 entries are exactly
// the tangency radii <l,l>/4.
struct FocalSpectrum {
    Rat cutoff2;
    int max_codim = 1;
    struct Entry {
        Rat rho2;
        long long multiplicity = 0;
        std::map<int, long long> codim_breakdown;  // codim -> distinct flats
    };
    std::vector<Entry> entries;  // rho2 ascending
};

// Flats counted as distinct point sets (default), or by the number of
// minimal generating plane subsets (exposed for experimentation: the corner
// of Z2 lies on three planes and counts 3 in that convention).
enum class FlatMultiplicity { point_sets, generating_subsets };

struct SpectrumDiff {
    enum class Verdict { equal_up_to_cutoff, differ };
    Verdict verdict = Verdict::equal_up_to_cutoff;
    struct Discrepancy {
        Rat rho2;
        long long left = 0;
        long long right = 0;
    };
    std::optional<Discrepancy> first_discrepancy;
};

LengthSpectrum length_spectrum(const Lattice& lat, const Rat& cutoff2,
                               const Budget& budget = Budget());

FocalSpectrum focal_spectrum(const Lattice& lat, const Rat& cutoff2, int max_codim,
                             FlatMultiplicity mult = FlatMultiplicity::point_sets,
                             const Budget& budget = Budget());

SpectrumDiff compare(const LengthSpectrum& left, const LengthSpectrum& right);
SpectrumDiff compare(const FocalSpectrum& left, const FocalSpectrum& right);

// Connected components of the graph on +-classes of minimal vectors with
// edges between classes of nonzero inner product.  A cheap non-isometry
// witness: 2 for E8xE8, 1 for D16plus.
int root_graph_components(const Lattice& lat, const Budget& budget = Budget());

std::string to_csv(const LengthSpectrum& s);
std::string to_csv(const FocalSpectrum& s);
std::string to_json_string(const LengthSpectrum& s);
std::string to_json_string(const FocalSpectrum& s);

}  // namespace focal

#endif
