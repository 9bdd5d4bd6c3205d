#include "altsurg/classify.hpp"

#include "altsurg/errors.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace altsurg {

const char* outcome_name(Outcome o)
{
    switch (o) {
        case Outcome::UnknotForm: return "unknot_form";
        case Outcome::NoStableCoefficients: return "no_stable_coefficients";
        case Outcome::Obstructed: return "obstructed";
        case Outcome::AtMostOne: return "at_most_one";
        case Outcome::AtMostTwo: return "at_most_two";
        case Outcome::CandidateIntervalD: return "candidate_interval_d";
        case Outcome::CounterexampleFlag: return "counterexample_flag";
    }
    return "?";
}

int64_t genus_slope_bound(const StableCoefficients& rho)
{
    if (rho.empty()) fail(ErrorCode::EmptyStableCoefficients, "genus bound needs stable coefficients");
    const int64_t g = rho.genus();
    bool all_twos = std::all_of(rho.rho.begin(), rho.rho.end(), [](int64_t x) { return x == 2; });
    return all_twos ? 4 * g + 3 : 3 * g + 4;
}

namespace {

SlopeCertificate run_integer(const StableCoefficients& rho, int64_t n, const ClassifyOptions& opt)
{
    SlopeCertificate cert;
    cert.slope = std::to_string(n);
    cert.slope_numerator = n;
    cert.slope_denominator = 1;
    ChangemakerLattice L = build_integer_lattice(rho, n);
    cert.result = search_integer(L, opt.mode, opt.caps);
    if (cert.result.status == SearchStatus::Found) {
        auto emb = planarity(cert.result.superbase->graph);
        cert.planar = emb.has_value();
        cert.embedding = emb;
    }
    return cert;
}

SlopeCertificate run_half(const StableCoefficients& rho, int64_t n, const ClassifyOptions& opt,
                          const ObtuseSuperbase* witness)
{
    SlopeCertificate cert;
    cert.slope = std::to_string(2 * n - 1) + "/2";
    cert.slope_numerator = 2 * n - 1;
    cert.slope_denominator = 2;
    ChangemakerLattice L = build_half_integer_lattice(rho, n);
    cert.result = search_half_integer(L, opt.mode, opt.caps, witness);
    if (cert.result.status == SearchStatus::Found) {
        auto emb = planarity(cert.result.superbase->graph);
        cert.planar = emb.has_value();
        cert.embedding = emb;
    }
    return cert;
}

bool found_planar(const SlopeCertificate& c)
{
    return c.result.status == SearchStatus::Found && c.planar;
}

// A found-but-nonplanar superbase cannot witness an alternating slope;
// planarity is intrinsic to the lattice, so it counts as an exclusion.
bool excluded(const SlopeCertificate& c)
{
    return c.result.status == SearchStatus::NoneExists ||
           (c.result.status == SearchStatus::Found && !c.planar);
}

} // namespace

Classification classify_rho(const StableCoefficients& rho, const ClassifyOptions& opt)
{
    Classification out;
    out.rho = rho;
    if (rho.empty()) {
        out.outcome = Outcome::UnknotForm;
        out.unknot_form = true;
        out.caveats.push_back("trivial polynomial: no nontrivial alternating-surgery analysis");
        return out;
    }
    const int64_t N = n_invariant(rho);
    out.N = N;
    out.genus = rho.genus();
    out.genus_bound = genus_slope_bound(rho);

    auto launch = [&](int64_t n) {
        if (opt.threads > 1) return std::async(std::launch::async, run_integer, rho, n, opt);
        return std::async(std::launch::deferred, run_integer, rho, n, opt);
    };

    try {
        auto f_up = launch(N + 1);
        auto f_mid = launch(N);
        auto f_low = launch(N - 1);
        SlopeCertificate up = f_up.get();
        SlopeCertificate mid = f_mid.get();
        SlopeCertificate low = f_low.get();

        bool inconclusive = up.result.status == SearchStatus::Inconclusive ||
                            mid.result.status == SearchStatus::Inconclusive ||
                            low.result.status == SearchStatus::Inconclusive;

        if (found_planar(up)) {
            out.outcome = Outcome::CounterexampleFlag;
            out.caveats.push_back("the lattice one step above the window admits a planar obtuse superbase; "
                                  "either no alternating surgery exists for this input or it contradicts the "
                                  "expected two-slope structure");
            out.certificates = {std::move(up), std::move(mid), std::move(low)};
            return out;
        }

        if (found_planar(mid) && found_planar(low)) {
            // The half-integer lattice sits between the two integer slopes;
            // its inner lattice is the low one, whose superbase can cap the
            // coordinate box.
            const ObtuseSuperbase* witness = low.result.superbase ? &*low.result.superbase : nullptr;
            SlopeCertificate half = run_half(rho, N, opt, witness);
            bool half_inconclusive = half.result.status == SearchStatus::Inconclusive;
            if (found_planar(half)) {
                out.outcome = Outcome::CandidateIntervalD;
                out.caveats.push_back("deciding whether the knot itself realizes the interval requires "
                                      "3-manifold software; this tool reports the candidate interval only");
            } else if (excluded(half)) {
                out.outcome = Outcome::AtMostTwo;
                out.caveats.push_back("realization of either slope as an alternating surgery requires a "
                                      "homeomorphism check that is out of scope");
            } else {
                out.outcome = Outcome::AtMostTwo;
                out.overflow = true;
                out.caveats.push_back("half-integer search was inconclusive; interval membership undecided");
            }
            if (half_inconclusive) out.overflow = true;
            out.certificates = {std::move(up), std::move(mid), std::move(low), std::move(half)};
        } else if (found_planar(low) && excluded(mid)) {
            out.outcome = Outcome::AtMostOne;
            out.single_slope = N - 1;
            out.caveats.push_back("realization of the slope as an alternating surgery requires a homeomorphism "
                                  "check that is out of scope");
            out.certificates = {std::move(up), std::move(mid), std::move(low)};
        } else if (found_planar(mid) && excluded(low)) {
            // Not realized by any known example, but the window logic allows it.
            out.outcome = Outcome::AtMostOne;
            out.single_slope = N;
            out.caveats.push_back("realization of the slope as an alternating surgery requires a homeomorphism "
                                  "check that is out of scope");
            out.certificates = {std::move(up), std::move(mid), std::move(low)};
        } else if (excluded(mid) && excluded(low)) {
            out.outcome = Outcome::Obstructed;
            out.certificates = {std::move(up), std::move(mid), std::move(low)};
        } else {
            out.outcome = Outcome::Obstructed;
            out.overflow = true;
            out.caveats.push_back("at least one search was inconclusive; classification is a lower bound");
            out.certificates = {std::move(up), std::move(mid), std::move(low)};
        }
        if (inconclusive) out.overflow = true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchSpaceOverflow) throw;
        out.overflow = true;
        out.outcome = Outcome::Obstructed;
        out.caveats.push_back("search budget exhausted; partial results only");
    }
    return out;
}

Classification classify(const AlexanderPolynomial& p, const ClassifyOptions& opt)
{
    Classification out;
    if (p.genus_degree() == 0) {
        out.outcome = Outcome::UnknotForm;
        out.unknot_form = true;
        out.caveats.push_back("trivial polynomial: no nontrivial alternating-surgery analysis");
        return out;
    }
    TorsionProfile t = torsion_coefficients(p);
    if (!is_lspace_form(t)) {
        out.outcome = Outcome::NoStableCoefficients;
        return out;
    }
    TorsionCounts counts = torsion_counts(t);
    auto rho = stable_coefficients(counts, counts.g, counts.t0());
    if (!rho) {
        out.outcome = Outcome::NoStableCoefficients;
        return out;
    }
    return classify_rho(*rho, opt);
}

namespace {

std::string slope_str(int64_t num, int64_t den, bool mirror)
{
    std::ostringstream os;
    if (mirror) os << "-";
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

} // namespace

std::string report(const Classification& c, const ClassifyOptions& opt)
{
    std::ostringstream os;
    os << "outcome: " << outcome_name(c.outcome) << "\n";
    if (c.rho && !c.rho->empty()) {
        os << "stable coefficients: [";
        for (size_t i = 0; i < c.rho->rho.size(); ++i) os << (i ? "," : "") << c.rho->rho[i];
        os << "]\n";
        os << "genus: " << *c.genus << "\n";
        os << "N: " << *c.N << "\n";
        os << "slope window: [" << slope_str(*c.N - 1, 1, opt.mirror) << ", " << slope_str(*c.N + 1, 1, opt.mirror)
           << "]\n";
        os << "genus slope bound: " << *c.genus_bound << "\n";
    }
    switch (c.outcome) {
        case Outcome::UnknotForm:
            os << "input has genus 0 (unknot form)\n";
            break;
        case Outcome::NoStableCoefficients:
            os << "no compatible stable coefficients: no alternating surgeries\n";
            break;
        case Outcome::Obstructed:
            os << "every candidate lattice is obstructed: no alternating surgeries\n";
            break;
        case Outcome::AtMostOne:
            os << "at most one alternating slope: " << slope_str(*c.single_slope, 1, opt.mirror) << "\n";
            break;
        case Outcome::AtMostTwo:
            os << "alternating slopes form a subset of {" << slope_str(*c.N - 1, 1, opt.mirror) << ", "
               << slope_str(*c.N, 1, opt.mirror) << "}\n";
            break;
        case Outcome::CandidateIntervalD:
            os << "candidate interval [" << slope_str(*c.N - 1, 1, opt.mirror) << ", " << slope_str(*c.N, 1, opt.mirror)
               << "] (all rationals inside, pending the knot-family check)\n";
            break;
        case Outcome::CounterexampleFlag:
            os << "unexpected superbase above the window; see caveats\n";
            break;
    }
    for (const auto& cert : c.certificates) {
        os << "  lattice " << slope_str(cert.slope_numerator, cert.slope_denominator, opt.mirror) << ": ";
        switch (cert.result.status) {
            case SearchStatus::Found:
                os << (cert.planar ? "superbase found (planar)" : "superbase found (non-planar)");
                break;
            case SearchStatus::NoneExists:
                os << "no obtuse superbase (exhaustive)";
                break;
            case SearchStatus::Inconclusive:
                os << "inconclusive (quick mode)";
                break;
        }
        os << "\n";
    }
    for (const auto& cv : c.caveats) os << "caveat: " << cv << "\n";
    if (opt.mirror) os << "caveat: slopes are reported for the mirror (negated)\n";
    return os.str();
}

} // namespace altsurg
