#include "altsurg/corpus.hpp"

#include "altsurg/errors.hpp"
#include "altsurg/intmath.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace altsurg::oracle {

namespace {

void short_vectors_rec(const ChangemakerLattice& L, size_t k, int64_t partial, int64_t norm_used, Vec& z,
                       std::vector<Vec>& out)
{
    // Integer flavor only: orthogonality to sigma, norm <= disc.
    const auto& sig = L.sigma.sigma;
    const int64_t disc = L.discriminant;
    if (k == sig.size()) {
        if (partial == 0 && norm_used > 0) out.push_back(z);
        return;
    }
    int64_t b = isqrt64(disc - norm_used);
    for (int64_t v = -b; v <= b; ++v) {
        z[k] = v;
        short_vectors_rec(L, k + 1, partial + sig[k] * v, norm_used + v * v, z, out);
    }
    z[k] = 0;
}

struct OracleSearch {
    const ChangemakerLattice* L;
    const std::vector<Vec>* cand;
    std::vector<const Vec*> chosen;
    Vec sum;

    bool dfs(size_t start)
    {
        const int need = L->rank + 1;
        if (static_cast<int>(chosen.size()) == need) {
            if (!std::all_of(sum.begin(), sum.end(), [](int64_t x) { return x == 0; })) return false;
            // span: the first rank vectors must have Gram determinant equal
            // to the discriminant
            std::vector<std::vector<int64_t>> gram(L->rank, std::vector<int64_t>(L->rank));
            for (int i = 0; i < L->rank; ++i)
                for (int j = 0; j < L->rank; ++j) gram[i][j] = pairing(*chosen[i], *chosen[j]);
            return det_bareiss(std::move(gram)) == L->discriminant;
        }
        for (size_t i = start; i < cand->size(); ++i) {
            const Vec& v = (*cand)[i];
            bool ok = true;
            for (const Vec* c : chosen)
                if (pairing(*c, v) > 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&v);
            for (size_t t = 0; t < sum.size(); ++t) sum[t] += v[t];
            if (dfs(i + 1)) return true;
            for (size_t t = 0; t < sum.size(); ++t) sum[t] -= v[t];
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

bool has_obtuse_superbase(const ChangemakerLattice& L)
{
    if (L.flavor != LatticeFlavor::Integer) fail(ErrorCode::PreconditionViolation, "oracle handles the integer flavor");
    if (L.rank == 0) return true;
    std::vector<Vec> cand;
    Vec z(L.ambient_rank, 0);
    short_vectors_rec(L, 0, 0, 0, z, cand);

    OracleSearch s;
    s.L = &L;
    s.cand = &cand;
    s.sum.assign(L.ambient_rank, 0);
    return s.dfs(0);
}

std::vector<ChangemakerVector> all_changemakers(int max_rank, int64_t max_norm)
{
    std::vector<ChangemakerVector> out;
    std::vector<int64_t> cur = {1};
    std::function<void()> rec = [&]() {
        int64_t norm = 0, prefix = 0;
        for (int64_t s : cur) {
            norm += s * s;
            prefix += s;
        }
        if (norm <= max_norm) out.push_back(ChangemakerVector{cur});
        if (static_cast<int>(cur.size()) >= max_rank) return;
        for (int64_t next = cur.back(); next <= prefix + 1; ++next) {
            if (norm + next * next > max_norm) break;
            cur.push_back(next);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace altsurg::oracle

namespace altsurg::corpus {

const std::vector<KnotRow>& unique_slope_rows()
{
    static const std::vector<KnotRow> rows = {
        {"t10188", {5, 4, 3, 2, 2}, 60},    {"t11556", {6, 4, 3, 2}, 67},
        {"t12753", {7, 5, 3, 3}, 95},       {"o9_32132", {7, 5, 3}, 86},
        {"o9_32588", {5, 5, 4, 3, 2, 2}, 85}, {"o9_37754", {6, 6, 4, 3, 2}, 103},
        {"o9_39451", {7, 6, 3, 2, 2}, 104}, {"o9_40179", {8, 7, 3, 2, 2}, 132},
        {"o9_43001", {8, 5, 4, 2, 2}, 115}, {"o9_43679", {7, 7, 5, 3, 3}, 144},
        {"o9_43953", {9, 4, 3, 3}, 118},    {"o9_44054", {9, 5, 3, 3}, 127},
    };
    return rows;
}

const std::vector<KnotRow>& two_slope_rows()
{
    static const std::vector<KnotRow> rows = {
        {"bl_1_1_1_1_0", {12, 9, 5, 4, 2}, 272},
        {"bl_1_1_0_1_1", {16, 12, 7, 4, 2}, 471},
        {"bl_1_1_1_2_0", {12, 12, 9, 5, 4, 2}, 416},
        {"bl_1_1_2_1_0", {17, 14, 5, 5, 4, 2}, 557},
        {"bl_1_2_1_1_0", {17, 13, 7, 6, 3}, 555},
        {"bl_2_1_1_1_0", {18, 13, 7, 6, 2, 2}, 588},
        {"bl_1_1_1_1_1", {26, 17, 12, 5, 4, 2}, 1156},
        {"bl_1_1_0_2_1", {23, 19, 7, 7, 4, 2}, 1010},
        {"bl_1_2_0_1_1", {23, 17, 10, 6, 3}, 966},
        {"bl_1_1_2_2_0", {17, 17, 14, 5, 5, 4, 2}, 846},
        {"bl_1_2_1_2_0", {17, 17, 13, 7, 6, 3}, 844},
        {"bl_2_1_1_2_0", {18, 18, 13, 7, 6, 2, 2}, 912},
        {"bl_1_1_0_1_2", {28, 12, 12, 7, 4, 2}, 1143},
        {"bl_2_1_0_1_1", {24, 18, 11, 6, 2, 2}, 1067},
    };
    return rows;
}

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            log << (log.tellp() > 0 ? "; " : "") << what;
        }
    }
};

struct FoundCert {
    ChangemakerLattice lattice;
    ObtuseSuperbase superbase;
};

std::vector<FoundCert>& found_registry()
{
    static std::vector<FoundCert> reg;
    return reg;
}

void remember(const ChangemakerLattice& L, const SearchResult& r)
{
    if (r.status == SearchStatus::Found) found_registry().push_back({L, *r.superbase});
}

SearchResult full_integer(const StableCoefficients& rho, int64_t n)
{
    ChangemakerLattice L = build_integer_lattice(rho, n);
    SearchResult r = search_integer(L, SearchMode::Full);
    remember(L, r);
    return r;
}

SearchResult full_half(const StableCoefficients& rho, int64_t n, const ObtuseSuperbase* witness)
{
    ChangemakerLattice L = build_half_integer_lattice(rho, n);
    SearchResult r = search_half_integer(L, SearchMode::Full, {}, witness);
    remember(L, r);
    return r;
}

bool found_planar(const SearchResult& r)
{
    return r.status == SearchStatus::Found && planarity(r.superbase->graph).has_value();
}

CriterionResult criterion1()
{
    Check c;
    for (const auto& row : unique_slope_rows()) {
        StableCoefficients rho{row.rho};
        c.expect(n_invariant(rho) == row.N, std::string(row.id) + ": N mismatch");
        SearchResult low = full_integer(rho, row.N - 1);
        c.expect(found_planar(low), std::string(row.id) + ": expected planar superbase at N-1");
        SearchResult mid = full_integer(rho, row.N);
        c.expect(mid.status == SearchStatus::NoneExists, std::string(row.id) + ": expected exhaustion at N");
        SearchResult up = full_integer(rho, row.N + 1);
        c.expect(up.status == SearchStatus::NoneExists, std::string(row.id) + ": expected exhaustion at N+1");
        const ObtuseSuperbase* witness = low.superbase ? &*low.superbase : nullptr;
        SearchResult half = full_half(rho, row.N, witness);
        c.expect(half.status == SearchStatus::NoneExists, std::string(row.id) + ": expected exhaustion at N-1/2");
    }
    return {1, "single-slope census rows: N, N-1 planar superbase, exhaustions at N, N+1, N-1/2", c.ok, c.log.str()};
}

CriterionResult criterion2()
{
    Check c;
    for (const auto& row : two_slope_rows()) {
        StableCoefficients rho{row.rho};
        c.expect(n_invariant(rho) == row.N, std::string(row.id) + ": N mismatch");
        SearchResult low = full_integer(rho, row.N - 1);
        c.expect(low.status == SearchStatus::Found, std::string(row.id) + ": expected superbase at N-1");
        SearchResult mid = full_integer(rho, row.N);
        c.expect(mid.status == SearchStatus::Found, std::string(row.id) + ": expected superbase at N");
        SearchResult up = full_integer(rho, row.N + 1);
        c.expect(up.status == SearchStatus::NoneExists, std::string(row.id) + ": expected exhaustion at N+1");
        const ObtuseSuperbase* witness = low.superbase ? &*low.superbase : nullptr;
        SearchResult half = full_half(rho, row.N, witness);
        c.expect(half.status == SearchStatus::NoneExists, std::string(row.id) + ": expected exhaustion at N-1/2");
    }
    return {2, "two-slope family rows: N, superbases at N-1 and N, exhaustions at N+1 and N-1/2", c.ok, c.log.str()};
}

CriterionResult criterion3()
{
    Check c;
    const std::vector<std::vector<int64_t>> tuples = {{3, 2, 2, 2}, {3, 3, 2, 2, 2}, {3, 3, 3, 2, 2, 2}};
    for (const auto& t : tuples) {
        StableCoefficients rho{t};
        for (int m = 2; m <= 4; ++m) {
            int64_t n = (m - 1) + rho.sum_squares();
            SearchResult r = full_integer(rho, n);
            std::ostringstream what;
            what << "tuple size " << t.size() << ", m=" << m << ": expected exhaustion";
            c.expect(r.status == SearchStatus::NoneExists, what.str());
        }
    }
    return {3, "nine small twos-and-threes lattices admit no obtuse superbase", c.ok, c.log.str()};
}

CriterionResult criterion4()
{
    Check c;
    AlexanderPolynomial p = parse_polynomial({1, -1, 1, 0, -1, 1});
    TorsionProfile t = torsion_coefficients(p);
    c.expect(t.t == std::vector<int64_t>({2, 2, 1, 1, 1, 0}), "torsion profile mismatch");
    c.expect(is_lspace_form(t), "profile should have L-space form");
    TorsionCounts counts = torsion_counts(t);
    c.expect(counts.T == std::vector<int64_t>({0, 3, 5}), "counts mismatch");
    auto rho = stable_coefficients(counts, counts.g, counts.t0());
    c.expect(rho.has_value() && rho->rho == std::vector<int64_t>({3, 2, 2}), "stable coefficients mismatch");
    if (rho) {
        c.expect(n_invariant(*rho) == 19, "N mismatch");
        Classification cl = classify(p);
        c.expect(cl.outcome == Outcome::CandidateIntervalD, "expected the candidate interval outcome");
        c.expect(cl.N && *cl.N == 19, "classified N mismatch");
        bool half_seen = false;
        for (const auto& cert : cl.certificates) {
            if (cert.slope_denominator != 2) continue;
            half_seen = true;
            c.expect(cert.result.status == SearchStatus::Found && cert.planar,
                     "half-integer certificate should be found and planar");
            if (cert.result.superbase) {
                remember(build_half_integer_lattice(*rho, 19), cert.result);
                c.expect(spanning_tree_count(cert.result.superbase->graph) == 37,
                         "half-integer certificate determinant should be 37");
            }
        }
        c.expect(half_seen, "classification should include the half-integer certificate");
    }
    return {4, "pretzel pipeline: torsion, counts, stable coefficients, N=19, interval [18,19], det 37", c.ok,
            c.log.str()};
}

CriterionResult criterion5()
{
    Check c;
    for (int n = 1; n <= 5; ++n) {
        StableCoefficients rho;
        rho.rho.assign(n, 3);
        rho.rho.push_back(2);
        rho.rho.push_back(2);
        int64_t N = n_invariant(rho);
        c.expect(N == 9 * n + 10, "family N mismatch");
        c.expect(genus_slope_bound(rho) == N, "genus slope bound should equal N (sharpness)");
        SearchResult low = full_integer(rho, N - 1);
        const ObtuseSuperbase* witness =
            low.status == SearchStatus::Found && low.superbase ? &*low.superbase : nullptr;
        ChangemakerLattice L = build_half_integer_lattice(rho, N);
        SearchResult half = search_half_integer(L, SearchMode::Full, {}, witness);
        remember(L, half);
        bool ok = half.status == SearchStatus::Found && planarity(half.superbase->graph).has_value();
        std::ostringstream what;
        what << "n=" << n << ": expected planar half-integer superbase at " << (2 * N - 1) << "/2";
        c.expect(ok, what.str());
    }
    return {5, "interval family: planar half-integer superbases at 9n+19/2 and sharp genus bound", c.ok, c.log.str()};
}

CriterionResult criterion6()
{
    Check c;
    StableCoefficients rho{{5, 2}};
    c.expect(n_invariant(rho) == 32, "N should be 32");
    Classification cl = classify_rho(rho);
    c.expect(cl.outcome == Outcome::CandidateIntervalD, "expected the candidate interval outcome");
    c.expect(cl.N && *cl.N == 32, "classified N mismatch");
    for (const auto& cert : cl.certificates)
        if (cert.result.status == SearchStatus::Found && cert.result.superbase) {
            ChangemakerLattice L = cert.slope_denominator == 2 ? build_half_integer_lattice(rho, 32)
                                                               : build_integer_lattice(rho, cert.slope_numerator);
            remember(L, cert.result);
        }
    return {6, "stable tuple (5,2): N=32 and candidate interval [31,32]", c.ok, c.log.str()};
}

CriterionResult criterion7()
{
    Check c;
    int checked = 0;
    for (const auto& sigma : oracle::all_changemakers(5, 20)) {
        StableCoefficients rho;
        for (int i = sigma.r() - 1; i >= 0; --i)
            if (sigma.sigma[i] >= 2) rho.rho.push_back(sigma.sigma[i]);
        ChangemakerLattice L = build_integer_lattice(rho, sigma.norm());
        if (L.sigma.sigma != sigma.sigma) {
            c.expect(false, "lattice reconstruction mismatch");
            continue;
        }
        bool fast = search_integer(L, SearchMode::Full).status == SearchStatus::Found;
        bool slow = oracle::has_obtuse_superbase(L);
        if (fast != slow) {
            std::ostringstream what;
            what << "disagreement on sigma=(";
            for (int i = 0; i < sigma.r(); ++i) what << (i ? "," : "") << sigma.sigma[i];
            what << "): search=" << fast << " oracle=" << slow;
            c.expect(false, what.str());
        }
        ++checked;
    }
    std::ostringstream detail;
    detail << checked << " lattices compared";
    if (!c.ok) detail << "; " << c.log.str();
    return {7, "search agrees with the short-vector subset oracle on every lattice with r<=5, n<=20", c.ok,
            detail.str()};
}

CriterionResult criterion8()
{
    Check c;
    // Determinant identities and independent validation on every certificate
    // collected by the preceding criteria.
    int certs = 0;
    for (const auto& fc : found_registry()) {
        ++certs;
        int64_t disc = fc.lattice.discriminant;
        int64_t trees = spanning_tree_count(fc.superbase.graph);
        int64_t goeritz = goeritz_matrix(fc.superbase).determinant;
        c.expect(trees == disc, "spanning tree count differs from the discriminant");
        c.expect(goeritz == disc, "Goeritz determinant differs from the discriminant");
        try {
            validate_superbase(fc.lattice, fc.superbase.vectors);
        } catch (const Error& e) {
            c.expect(false, std::string("revalidation failed: ") + e.what());
        }
    }
    c.expect(certs > 0, "no certificates were collected");

    // Consistency of formula-level obstructions with full searches on random
    // changemaker vectors.
    std::mt19937 rng(20240817u);
    int tested = 0;
    while (tested < 500) {
        std::uniform_int_distribution<int> len_d(1, 4), val_d(2, 6), ones_d(1, 5);
        std::vector<int64_t> stable;
        int len = len_d(rng);
        for (int i = 0; i < len; ++i) stable.push_back(val_d(rng));
        std::sort(stable.rbegin(), stable.rend());
        StableCoefficients rho{stable};
        int64_t lo = n_invariant(rho) - 1;
        int64_t n = lo + ones_d(rng) - 1;
        ChangemakerLattice L = build_integer_lattice(rho, n);
        ++tested;
        SearchResult r = search_integer(L, SearchMode::Full);
        bool found = r.status == SearchStatus::Found;
        if (pre_obstructions(L.sigma).has_value())
            c.expect(!found, "superbase found although a formula-level obstruction fired");
        if (found && L.sigma.sigma.back() >= 3)
            c.expect(genus_inequality_check(L.sigma, n), "superbase found beyond the genus inequality");
    }
    std::ostringstream detail;
    detail << certs << " certificates revalidated, " << tested << " random vectors cross-checked";
    if (!c.ok) detail << "; " << c.log.str();
    return {8, "determinant identities, revalidation, and obstruction consistency", c.ok, detail.str()};
}

} // namespace

bool run_acceptance(int only, const std::function<void(const CriterionResult&)>& on_result)
{
    found_registry().clear();
    using Fn = CriterionResult (*)();
    const Fn fns[] = {criterion1, criterion2, criterion3, criterion4,
                      criterion5, criterion6, criterion7, criterion8};
    bool all_ok = true;
    for (int i = 0; i < 8; ++i) {
        if (only != 0 && only != i + 1) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult res = fns[i]();
        res.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        all_ok = all_ok && res.pass;
        if (on_result) on_result(res);
    }
    return all_ok;
}

} // namespace altsurg::corpus
