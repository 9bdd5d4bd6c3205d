#ifndef ALTSURG_CLASSIFY_HPP
#define ALTSURG_CLASSIFY_HPP

#include "altsurg/alexpoly.hpp"
#include "altsurg/goeritz.hpp"
#include "altsurg/osb_search.hpp"

#include <map>
#include <optional>
#include <string>

namespace altsurg {

enum class Outcome {
    UnknotForm,
    NoStableCoefficients,
    Obstructed,
    AtMostOne,
    AtMostTwo,
    CandidateIntervalD,
    CounterexampleFlag,
};

const char* outcome_name(Outcome o);

// A completed search on one lattice, with planarity attached when found.
struct SlopeCertificate {
    std::string slope;        // "n" or "2n-1/2"
    int64_t slope_numerator = 0;
    int64_t slope_denominator = 1;
    SearchResult result;
    bool planar = false;
    std::optional<PlanarEmbedding> embedding;
};

struct Classification {
    Outcome outcome = Outcome::Obstructed;
    bool unknot_form = false;
    std::optional<StableCoefficients> rho;
    std::optional<int64_t> N;
    std::optional<int64_t> genus;
    std::optional<int64_t> genus_bound;
    // single surviving integer slope for AtMostOne
    std::optional<int64_t> single_slope;
    std::vector<SlopeCertificate> certificates;
    std::vector<std::string> caveats;
    bool overflow = false; // a search hit its budget; partial results kept
};

struct ClassifyOptions {
    SearchMode mode = SearchMode::Full;
    SearchCaps caps;
    int threads = 1;
    bool mirror = false; // report slopes with flipped sign
};

// The end-to-end decision pipeline on an Alexander polynomial.
Classification classify(const AlexanderPolynomial& p, const ClassifyOptions& opt = {});

// The same pipeline entered at known stable coefficients.
Classification classify_rho(const StableCoefficients& rho, const ClassifyOptions& opt = {});

// 4g+3 when every stable coefficient is 2 (two-stranded torus form), else 3g+4.
int64_t genus_slope_bound(const StableCoefficients& rho);

// Human-readable rendering.
std::string report(const Classification& c, const ClassifyOptions& opt = {});

} // namespace altsurg

#endif
