#ifndef ALTSURG_OSB_SEARCH_HPP
#define ALTSURG_OSB_SEARCH_HPP

#include "altsurg/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace altsurg {

enum class SearchMode { Quick, Full };
enum class SearchStatus { Found, NoneExists, Inconclusive };

enum class ObstructionReason { SigmaMTooSmall, LongRun };

struct SearchCaps {
    int64_t max_vectors = 5'000'000;
    uint64_t max_nodes = 1'000'000'000;
};

enum class BoundOrigin { CauchySchwarz, IrredBound, SigmaM, HalfIntColSum, QuickBox };

struct CoordinateBounds {
    std::vector<int64_t> b;
    std::vector<BoundOrigin> origin;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    SearchMode mode = SearchMode::Full;
    std::optional<ObtuseSuperbase> superbase;
    std::optional<ExhaustionRecord> exhaustion;
};

// Formula-level obstructions that rule out an obtuse superbase before any
// enumeration: sigma_m < m - 2, or an equal run of length >= 4 in the stable
// part followed by a coefficient strictly between sigma_b and (l-1) sigma_b.
std::optional<ObstructionReason> pre_obstructions(const ChangemakerVector& sigma);

// Static per-coordinate box for superbase members of an integer changemaker
// lattice: minimum over the discriminant bound, the irreducibility bounds
// (with earlier coordinate bounds substituted), and the index-m cap.
CoordinateBounds coordinate_bounds(const ChangemakerLattice& L);

// Box for irreducible vectors of the inner lattice of a half-integer lattice.
// The norm bound uses the half-integer discriminant 2n+1; with a column-sum
// witness for the inner lattice every coordinate is capped at 2.
CoordinateBounds half_integer_inner_bounds(const ChangemakerLattice& L, bool column_sum_cap);

// All nonzero integer vectors orthogonal to sigma inside the box, found by
// coordinate DFS with interval pruning; the per-vector irreducibility bounds
// are also applied with the actual prefix coordinates, which discards only
// reducible vectors.
std::vector<Vec> enumerate_v_bound(const ChangemakerVector& sigma, const CoordinateBounds& bounds,
                                   const SearchCaps& caps = {});

// Keeps v with (v - w) . w < 0 against every other w, and with v in V2 or
// v . w in {0,-1} for all w in V2.
std::vector<Vec> filter_v_irred(const std::vector<Vec>& v_bound, const std::vector<Vec>& v2);

// The norm-two chain vectors e_k - e_{k+1} present in the lattice.
std::vector<Vec> norm_two_chain(const ChangemakerVector& sigma);

SearchResult search_integer(const ChangemakerLattice& L, SearchMode mode, const SearchCaps& caps = {});

// inner_witness: a previously found obtuse superbase of the inner integer
// lattice; when all of its coordinate column sums are at most 4 the
// coordinate cap of 2 is applied. Passing a witness that does not meet the
// hypothesis simply leaves the cap off.
SearchResult search_half_integer(const ChangemakerLattice& L, SearchMode mode, const SearchCaps& caps = {},
                                 const ObtuseSuperbase* inner_witness = nullptr);

// n <= 4 + (3/2) sum sigma_i (sigma_i - 1); requires sigma_r >= 3.
bool genus_inequality_check(const ChangemakerVector& sigma, int64_t n);

extern const char* const kSearchVersion;

} // namespace altsurg

#endif
