#ifndef ALTSURG_CORPUS_HPP
#define ALTSURG_CORPUS_HPP

#include "altsurg/classify.hpp"

#include <functional>
#include <string>
#include <vector>

namespace altsurg::corpus {

struct KnotRow {
    const char* id;
    std::vector<int64_t> rho;
    int64_t N;
};

// Census knots with exactly one alternating slope (N - 1).
const std::vector<KnotRow>& unique_slope_rows();
// Asymmetric hyperbolic L-space knot family with slopes {N-1, N}.
const std::vector<KnotRow>& two_slope_rows();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    int64_t wall_ms = 0;
};

// Runs the acceptance criteria (all when `only` is 0) and reports each result
// through the callback as soon as it finishes. Returns true when every
// executed criterion passed.
bool run_acceptance(int only, const std::function<void(const CriterionResult&)>& on_result);

} // namespace altsurg::corpus

namespace altsurg::oracle {

// Reference decision procedure: every lattice vector of norm at most the
// discriminant, then every subset of rank+1 of them that sums to zero with
// nonpositive pairings and full span. Independent of the staged search.
bool has_obtuse_superbase(const ChangemakerLattice& L);

// All changemaker vectors with at most max_rank entries and norm at most
// max_norm.
std::vector<ChangemakerVector> all_changemakers(int max_rank, int64_t max_norm);

} // namespace altsurg::oracle

#endif
