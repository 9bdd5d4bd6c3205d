#include "altsurg/osb_search.hpp"

#include "altsurg/errors.hpp"
#include "altsurg/intmath.hpp"
#include "altsurg/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstring>

namespace altsurg {

const char* const kSearchVersion = "altsurg-osb-1";

std::optional<ObstructionReason> pre_obstructions(const ChangemakerVector& sigma)
{
    const int r = sigma.r();
    if (r == 0 || sigma.sigma[r - 1] < 2)
        fail(ErrorCode::PreconditionViolation, "pre_obstructions needs a nontrivial stable part");
    const int m = sigma.m_index();
    if (sigma.sigma[m - 1] < m - 2) return ObstructionReason::SigmaMTooSmall;

    // Maximal equal runs in the stable part.
    for (int i = m - 1; i < r;) {
        int j = i;
        while (j + 1 < r && sigma.sigma[j + 1] == sigma.sigma[i]) ++j;
        const int64_t val = sigma.sigma[i];
        const int64_t len = j - i + 1;
        if (len >= 4) {
            for (int k = j + 1; k < r; ++k)
                if (sigma.sigma[k] > val && sigma.sigma[k] < (len - 1) * val) return ObstructionReason::LongRun;
        }
        i = j + 1;
    }
    return std::nullopt;
}

namespace {

struct BoundCandidate {
    int64_t value;
    BoundOrigin origin;
};

CoordinateBounds bounds_common(const ChangemakerVector& sigma, bool lattice_tight,
                               int64_t cs_num_scale, int64_t cs_sub, int64_t cs_den,
                               std::optional<int64_t> flat_cap, BoundOrigin flat_origin)
{
    // Norm-style bound: largest b with b^2 * cs_den <= cs_num_scale * (cs_sub - sigma_k^2).
    const int r = sigma.r();
    const int m = sigma.m_index();
    CoordinateBounds out;
    out.b.resize(r);
    out.origin.resize(r);
    int64_t prefix = 0;
    for (int k = 1; k <= r; ++k) {
        const int64_t sk = sigma.sigma[k - 1];
        std::vector<BoundCandidate> cands;
        cands.push_back({isqrt_ratio(cs_num_scale * (cs_sub - sk * sk), cs_den), BoundOrigin::CauchySchwarz});
        if (sk == 1) {
            cands.push_back({lattice_tight ? 2 : 1, BoundOrigin::IrredBound});
        } else if (sk == 1 + prefix) {
            int64_t s = 5;
            for (int i = 1; i < k; ++i) s += out.b[i - 1] + 1;
            cands.push_back({s, BoundOrigin::IrredBound});
        } else {
            int64_t s = 0;
            for (int i : subset_representation(sigma, k - 1, sk)) s += out.b[i - 1] + 1;
            cands.push_back({s, BoundOrigin::IrredBound});
        }
        if (k == m) cands.push_back({sk, BoundOrigin::SigmaM});
        if (flat_cap) cands.push_back({*flat_cap, flat_origin});

        BoundCandidate best = cands[0];
        for (const auto& c : cands)
            if (c.value < best.value) best = c;
        out.b[k - 1] = best.value;
        out.origin[k - 1] = best.origin;
        prefix += sk;
    }
    return out;
}

void apply_quick_box(CoordinateBounds& b)
{
    for (size_t i = 0; i < b.b.size(); ++i) {
        if (b.b[i] > 2) {
            b.b[i] = 2;
            b.origin[i] = BoundOrigin::QuickBox;
        }
    }
}

} // namespace

CoordinateBounds coordinate_bounds(const ChangemakerLattice& L)
{
    if (L.flavor != LatticeFlavor::Integer)
        fail(ErrorCode::PreconditionViolation, "coordinate_bounds is for the integer flavor");
    const bool tight = classify_flags(L.sigma).tight;
    // |z_k| <= sqrt(n - sigma_k^2)
    return bounds_common(L.sigma, tight, 1, L.slope_numerator, 1, std::nullopt, BoundOrigin::CauchySchwarz);
}

CoordinateBounds half_integer_inner_bounds(const ChangemakerLattice& L, bool column_sum_cap)
{
    if (L.flavor != LatticeFlavor::HalfInteger)
        fail(ErrorCode::PreconditionViolation, "half_integer_inner_bounds is for the half-integer flavor");
    const bool tight = classify_flags(L.sigma).tight;
    const int64_t s = L.sigma.norm();
    // A superbase member lying in the inner lattice has norm at most the
    // discriminant 2s+1, which gives |z_k|^2 * s <= (2s+1)(s - sigma_k^2).
    std::optional<int64_t> cap;
    if (column_sum_cap) cap = 2;
    return bounds_common(L.sigma, tight, 2 * s + 1, s, s, cap, BoundOrigin::HalfIntColSum);
}

namespace {

// Per-coordinate recipe for the irreducibility bound evaluated against the
// actual prefix of a partially built vector.
struct DynBounds {
    struct Entry {
        int kind; // 0 fixed, 1 subset, 2 tight
        int64_t fixed = 0;
        std::vector<int> subset; // 0-based
    };
    std::vector<Entry> entries;
};

DynBounds dyn_bounds(const ChangemakerVector& sigma, bool lattice_tight)
{
    DynBounds info;
    const int r = sigma.r();
    info.entries.resize(r);
    int64_t prefix = 0;
    for (int k = 1; k <= r; ++k) {
        const int64_t sk = sigma.sigma[k - 1];
        auto& e = info.entries[k - 1];
        if (sk == 1) {
            e.kind = 0;
            e.fixed = lattice_tight ? 2 : 1;
        } else if (sk == 1 + prefix) {
            e.kind = 2;
        } else {
            e.kind = 1;
            for (int i : subset_representation(sigma, k - 1, sk)) e.subset.push_back(i - 1);
        }
        prefix += sk;
    }
    return info;
}

struct EnumState {
    const ChangemakerVector* sigma;
    const CoordinateBounds* bounds;
    DynBounds dyn;
    std::vector<int64_t> suffix_max;
    const SearchCaps* caps;
    uint64_t* nodes;
    std::vector<Vec>* out;
    Vec z;
};

void enum_rec(EnumState& st, int k, int64_t partial, bool any_nonzero)
{
    const int r = st.sigma->r();
    const auto& sig = st.sigma->sigma;
    if (++*st.nodes > st.caps->max_nodes)
        fail(ErrorCode::SearchSpaceOverflow, "enumeration exceeded the node budget");

    int64_t b = st.bounds->b[k];
    const auto& e = st.dyn.entries[k];
    if (e.kind == 1) {
        int64_t d = 0;
        for (int i : e.subset) d += std::abs(st.z[i]) + 1;
        b = std::min(b, d);
    } else if (e.kind == 2) {
        int64_t d = 5;
        for (int i = 0; i < k; ++i) d += std::abs(st.z[i]) + 1;
        b = std::min(b, d);
    }

    if (k == r - 1) {
        // The last coordinate is forced by orthogonality.
        if (partial % sig[k] == 0) {
            int64_t zk = -partial / sig[k];
            if (std::abs(zk) <= b && (any_nonzero || zk != 0)) {
                st.z[k] = zk;
                if (static_cast<int64_t>(st.out->size()) >= st.caps->max_vectors)
                    fail(ErrorCode::SearchSpaceOverflow, "candidate list exceeded the vector budget");
                st.out->push_back(st.z);
                st.z[k] = 0;
            }
        }
        return;
    }

    const int64_t tail = st.suffix_max[k + 1];
    const int64_t sk = sig[k];
    // partial + sigma_k * z must stay within [-tail, tail].
    int64_t lo2 = -(tail + partial);
    int64_t hi2 = tail - partial;
    int64_t lo = std::max(-b, lo2 >= 0 ? (lo2 + sk - 1) / sk : -((-lo2) / sk));
    int64_t hi = std::min(b, hi2 >= 0 ? hi2 / sk : -(((-hi2) + sk - 1) / sk));
    for (int64_t v = lo; v <= hi; ++v) {
        st.z[k] = v;
        enum_rec(st, k + 1, partial + sk * v, any_nonzero || v != 0);
    }
    st.z[k] = 0;
}

} // namespace

std::vector<Vec> enumerate_v_bound(const ChangemakerVector& sigma, const CoordinateBounds& bounds,
                                   const SearchCaps& caps)
{
    const int r = sigma.r();
    if (static_cast<int>(bounds.b.size()) != r) fail(ErrorCode::RankMismatch, "bounds table size mismatch");
    std::vector<Vec> out;
    if (r == 0) return out;

    uint64_t nodes = 0;
    EnumState st;
    st.sigma = &sigma;
    st.bounds = &bounds;
    st.dyn = dyn_bounds(sigma, classify_flags(sigma).tight);
    st.suffix_max.assign(r + 1, 0);
    for (int k = r - 1; k >= 0; --k) st.suffix_max[k] = st.suffix_max[k + 1] + sigma.sigma[k] * bounds.b[k];
    st.caps = &caps;
    st.nodes = &nodes;
    st.out = &out;
    st.z.assign(r, 0);
    enum_rec(st, 0, 0, false);
    return out;
}

std::vector<Vec> norm_two_chain(const ChangemakerVector& sigma)
{
    std::vector<Vec> v2;
    for (int k = 1; k < sigma.r(); ++k) {
        if (sigma.sigma[k - 1] == sigma.sigma[k]) {
            Vec v(sigma.r(), 0);
            v[k - 1] = 1;
            v[k] = -1;
            v2.push_back(std::move(v));
        }
    }
    return v2;
}

namespace {

kernels::PackedVectors pack(const std::vector<Vec>& vs, int cols)
{
    kernels::PackedVectors pv;
    pv.reset(cols);
    std::vector<int32_t> row(cols);
    for (const auto& v : vs) {
        for (int i = 0; i < cols; ++i) {
            if (v[i] > INT32_MAX / 4 || v[i] < INT32_MIN / 4)
                fail(ErrorCode::Overflow, "coordinate too large for packed kernels");
            row[i] = static_cast<int32_t>(v[i]);
        }
        pv.push_row(row.data());
    }
    return pv;
}

std::vector<int32_t> to_i32(const Vec& v)
{
    std::vector<int32_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<int32_t>(v[i]);
    return out;
}

} // namespace

std::vector<Vec> filter_v_irred(const std::vector<Vec>& v_bound, const std::vector<Vec>& v2)
{
    if (v_bound.empty()) return {};
    const int cols = static_cast<int>(v_bound[0].size());
    kernels::PackedVectors pv = pack(v_bound, cols);
    std::vector<int32_t> thr(v_bound.size());
    for (size_t i = 0; i < v_bound.size(); ++i) {
        int64_t n = norm2(v_bound[i]);
        if (n > INT32_MAX) fail(ErrorCode::Overflow, "norm too large for packed kernels");
        thr[i] = static_cast<int32_t>(n);
    }

    std::vector<int32_t> q(pv.stride, 0);
    std::vector<Vec> out;
    for (size_t i = 0; i < v_bound.size(); ++i) {
        const Vec& v = v_bound[i];
        bool in_v2 = std::find(v2.begin(), v2.end(), v) != v2.end();
        if (!in_v2) {
            bool ok = true;
            for (const auto& w : v2) {
                int64_t d = pairing(v, w);
                if (d != 0 && d != -1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        std::memcpy(q.data(), pv.row(static_cast<int>(i)), sizeof(int32_t) * pv.stride);
        if (!kernels::all_dots_below(q.data(), pv, thr.data(), static_cast<int>(i))) continue;
        out.push_back(v);
    }
    return out;
}

namespace {

// Closure search over subsets of the filtered irreducible candidates.
// Everything is kept in "inner" coordinates: the full ambient space for the
// integer flavor, coordinates e_1..e_r for the half-integer flavor. The
// half-integer fixed vector v0 = f + e0 - e1 pairs with an inner vector v as
// -v[0], which lets the search stay in the low-dimensional space.
struct SubsetSearch {
    const ChangemakerLattice* L;
    bool half = false;
    std::vector<Vec> forced;
    std::vector<Vec> cands;
    const SearchCaps* caps;
    uint64_t* nodes;

    int inner_dim = 0;
    int slots = 0;
    std::vector<std::vector<uint64_t>> adj;
    std::vector<const Vec*> selected;
    std::vector<int64_t> slack; // S.v per selected v; must end nonnegative
    int64_t slack_v0 = 0;
    RankTracker rank{0};
    std::optional<ObtuseSuperbase> found;

    Vec embed(const Vec& inner) const
    {
        if (!half) return inner;
        Vec v(inner.size() + 2, 0);
        for (size_t i = 0; i < inner.size(); ++i) v[2 + i] = inner[i];
        return v;
    }

    Vec v0_ambient() const
    {
        Vec v(inner_dim + 2, 0);
        v[0] = 1;
        v[1] = 1;
        v[2] = -1;
        return v;
    }

    void push_selected(const Vec& v)
    {
        int64_t self = norm2(v);
        for (size_t i = 0; i < selected.size(); ++i) {
            int64_t d = pairing(*selected[i], v);
            slack[i] += d;
            self += d;
        }
        if (half) {
            int64_t d0 = -v[0];
            slack_v0 += d0;
            self += d0;
        }
        selected.push_back(&v);
        slack.push_back(self);
    }

    void pop_selected(const Vec& v)
    {
        selected.pop_back();
        slack.pop_back();
        for (size_t i = 0; i < selected.size(); ++i) slack[i] -= pairing(*selected[i], v);
        if (half) slack_v0 += v[0];
    }

    bool slacks_ok() const
    {
        if (half && slack_v0 < 0) return false;
        for (int64_t s : slack)
            if (s < 0) return false;
        return true;
    }

    bool run()
    {
        inner_dim = L->sigma.r();
        slots = (L->rank - (half ? 1 : 0)) - static_cast<int>(forced.size());
        if (slots < 0) fail(ErrorCode::PreconditionViolation, "more forced vectors than superbase slots");

        // Fixed candidate order: decreasing norm, then lexicographic. The
        // first superbase found under this order is the canonical result.
        std::sort(cands.begin(), cands.end(), [](const Vec& a, const Vec& b) {
            int64_t na = norm2(a), nb = norm2(b);
            if (na != nb) return na > nb;
            return a < b;
        });

        rank = RankTracker(inner_dim);
        selected.clear();
        slack.clear();
        slack_v0 = 3;
        for (const auto& f : forced) {
            auto f32 = to_i32(f);
            if (!rank.try_add(f32.data())) fail(ErrorCode::PreconditionViolation, "forced vectors are dependent");
            push_selected(f);
        }
        if (!slacks_ok()) return false;

        const size_t n = cands.size();
        if (static_cast<int>(n) < slots) return false;

        if (n > 0 && n <= 8192) {
            kernels::PackedVectors packed = pack(cands, inner_dim);
            const size_t words = (n + 63) / 64;
            adj.assign(n, std::vector<uint64_t>(words, 0));
            std::vector<int32_t> q(packed.stride, 0);
            std::vector<int32_t> dots(n);
            for (size_t i = 0; i < n; ++i) {
                std::memcpy(q.data(), packed.row(static_cast<int>(i)), sizeof(int32_t) * packed.stride);
                kernels::dot_batch(q.data(), packed, dots.data());
                for (size_t j = 0; j < n; ++j)
                    if (j != i && dots[j] <= 0) adj[i][j / 64] |= uint64_t{1} << (j % 64);
            }
        }

        std::vector<uint64_t> allowed;
        if (!adj.empty()) {
            allowed.assign((n + 63) / 64, ~uint64_t{0});
            if (n % 64) allowed.back() = (uint64_t{1} << (n % 64)) - 1;
        }
        return dfs(0, 0, allowed);
    }

    bool dfs(size_t start, int picked, const std::vector<uint64_t>& allowed)
    {
        if (picked == slots) return close();
        const size_t n = cands.size();
        for (size_t i = start; i + (slots - picked) <= n; ++i) {
            if (++*nodes > caps->max_nodes)
                fail(ErrorCode::SearchSpaceOverflow, "subset search exceeded the node budget");
            if (!adj.empty()) {
                if (!(allowed[i / 64] >> (i % 64) & 1)) continue;
            } else {
                bool ok = true;
                for (size_t j = forced.size(); j < selected.size(); ++j)
                    if (pairing(*selected[j], cands[i]) > 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            // Forced-vector compatibility for candidates is prechecked by the
            // caller, so only picked vectors are tested above.
            auto mark = rank.mark();
            auto ci32 = to_i32(cands[i]);
            if (!rank.try_add(ci32.data())) continue;
            push_selected(cands[i]);
            bool hit = false;
            if (slacks_ok()) {
                if (!adj.empty()) {
                    std::vector<uint64_t> next(allowed.size());
                    for (size_t w = 0; w < allowed.size(); ++w) next[w] = allowed[w] & adj[i][w];
                    hit = dfs(i + 1, picked + 1, next);
                } else {
                    hit = dfs(i + 1, picked + 1, allowed);
                }
            }
            if (hit) return true;
            pop_selected(cands[i]);
            rank.rollback(mark);
        }
        return false;
    }

    bool close()
    {
        std::vector<Vec> vs;
        if (half) vs.push_back(v0_ambient());
        for (const Vec* v : selected) vs.push_back(embed(*v));
        Vec u(L->ambient_rank, 0);
        for (const auto& v : vs)
            for (int i = 0; i < L->ambient_rank; ++i) u[i] -= v[i];
        if (std::all_of(u.begin(), u.end(), [](int64_t x) { return x == 0; })) return false;
        if (norm2(u) > L->discriminant) return false;
        vs.push_back(std::move(u));
        try {
            found = validate_superbase(*L, vs);
            return true;
        } catch (const Error&) {
            return false;
        }
    }
};

ExhaustionRecord make_record(const CoordinateBounds& bounds, int64_t vb, int64_t vi, uint64_t nodes,
                             std::chrono::steady_clock::time_point t0)
{
    ExhaustionRecord rec;
    rec.bounds = bounds.b;
    for (auto o : bounds.origin) {
        switch (o) {
            case BoundOrigin::CauchySchwarz: rec.bound_origin.push_back("cauchy_schwarz"); break;
            case BoundOrigin::IrredBound: rec.bound_origin.push_back("irreducible"); break;
            case BoundOrigin::SigmaM: rec.bound_origin.push_back("sigma_m"); break;
            case BoundOrigin::HalfIntColSum: rec.bound_origin.push_back("column_sum"); break;
            case BoundOrigin::QuickBox: rec.bound_origin.push_back("quick_box"); break;
        }
    }
    rec.vbound_count = vb;
    rec.virred_count = vi;
    rec.subsets_examined = nodes;
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    rec.version = kSearchVersion;
    return rec;
}

SearchResult trivial_stable_result(const ChangemakerLattice& L, SearchMode mode)
{
    // Empty stable part: the chain cycle is an explicit obtuse superbase.
    const int r = L.sigma.r();
    std::vector<Vec> vs;
    if (r == 1) {
        vs.push_back(Vec(1, 0));
    } else {
        for (int k = 1; k < r; ++k) {
            Vec v(r, 0);
            v[k - 1] = 1;
            v[k] = -1;
            vs.push_back(std::move(v));
        }
        Vec wrap(r, 0);
        wrap[r - 1] = 1;
        wrap[0] = -1;
        vs.push_back(std::move(wrap));
    }
    SearchResult res;
    res.status = SearchStatus::Found;
    res.mode = mode;
    res.superbase = validate_superbase(L, vs);
    return res;
}

} // namespace

SearchResult search_integer(const ChangemakerLattice& L, SearchMode mode, const SearchCaps& caps)
{
    if (L.flavor != LatticeFlavor::Integer)
        fail(ErrorCode::PreconditionViolation, "search_integer needs an integer lattice");
    if (L.sigma.sigma.back() == 1) return trivial_stable_result(L, mode);

    const auto t0 = std::chrono::steady_clock::now();
    CoordinateBounds bounds = coordinate_bounds(L);
    if (mode == SearchMode::Quick) apply_quick_box(bounds);

    uint64_t nodes = 0;
    std::vector<Vec> vb = enumerate_v_bound(L.sigma, bounds, caps);
    std::vector<Vec> v2 = norm_two_chain(L.sigma);
    std::vector<Vec> virred = filter_v_irred(vb, v2);

    SubsetSearch ss;
    ss.L = &L;
    ss.half = false;
    ss.forced = v2;
    for (const auto& v : virred)
        if (std::find(v2.begin(), v2.end(), v) == v2.end()) ss.cands.push_back(v);
    ss.caps = &caps;
    ss.nodes = &nodes;

    SearchResult res;
    res.mode = mode;
    if (ss.run()) {
        res.status = SearchStatus::Found;
        res.superbase = ss.found;
        return res;
    }
    res.status = mode == SearchMode::Full ? SearchStatus::NoneExists : SearchStatus::Inconclusive;
    res.exhaustion = make_record(bounds, static_cast<int64_t>(vb.size()), static_cast<int64_t>(virred.size()),
                                 nodes, t0);
    return res;
}

SearchResult search_half_integer(const ChangemakerLattice& L, SearchMode mode, const SearchCaps& caps,
                                 const ObtuseSuperbase* inner_witness)
{
    if (L.flavor != LatticeFlavor::HalfInteger)
        fail(ErrorCode::PreconditionViolation, "search_half_integer needs a half-integer lattice");

    const auto t0 = std::chrono::steady_clock::now();
    const int r = L.sigma.r();

    bool cap2 = false;
    if (inner_witness) {
        cap2 = true;
        for (int k = 0; k < r && cap2; ++k) {
            int64_t col = 0;
            for (const auto& v : inner_witness->vectors) col += std::abs(v[k]);
            if (col > 4) cap2 = false;
        }
    }

    CoordinateBounds bounds = half_integer_inner_bounds(L, cap2);
    if (mode == SearchMode::Quick) apply_quick_box(bounds);

    uint64_t nodes = 0;
    std::vector<Vec> vb = enumerate_v_bound(L.sigma, bounds, caps);

    // Only the chain inside the leading run of ones is pinned; the fixed
    // vector v0 takes the slot next to it.
    const int m = L.sigma.m_index();
    std::vector<Vec> slice;
    for (int k = 2; k < m; ++k) {
        Vec v(r, 0);
        v[k - 2] = 1;
        v[k - 1] = -1;
        slice.push_back(std::move(v));
    }
    std::vector<Vec> virred = filter_v_irred(vb, slice);

    SubsetSearch ss;
    ss.L = &L;
    ss.half = true;
    ss.forced = slice;
    for (const auto& v : virred) {
        if (std::find(slice.begin(), slice.end(), v) != slice.end()) continue;
        if (v[0] < 0) continue; // pairing with v0 is -v[0], must stay nonpositive
        ss.cands.push_back(v);
    }
    ss.caps = &caps;
    ss.nodes = &nodes;

    SearchResult res;
    res.mode = mode;
    if (ss.run()) {
        res.status = SearchStatus::Found;
        res.superbase = ss.found;
        return res;
    }
    res.status = mode == SearchMode::Full ? SearchStatus::NoneExists : SearchStatus::Inconclusive;
    res.exhaustion = make_record(bounds, static_cast<int64_t>(vb.size()), static_cast<int64_t>(virred.size()),
                                 nodes, t0);
    return res;
}

bool genus_inequality_check(const ChangemakerVector& sigma, int64_t n)
{
    if (sigma.r() == 0 || sigma.sigma.back() < 3)
        fail(ErrorCode::PreconditionViolation, "genus inequality needs sigma_r >= 3");
    int64_t susum = 0;
    for (int64_t s : sigma.sigma) susum += s * (s - 1);
    return 2 * n <= 8 + 3 * susum;
}

} // namespace altsurg
