#include "altsurg/lattice.hpp"

#include "altsurg/errors.hpp"
#include "altsurg/intmath.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace altsurg {

int64_t pairing(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail(ErrorCode::RankMismatch, "pairing of vectors with different ambient ranks");
    int64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

int64_t norm2(const Vec& a) { return pairing(a, a); }

int64_t SuperbaseGraph::edge_count() const
{
    int64_t e = 0;
    for (int i = 0; i < vcount; ++i)
        for (int j = i + 1; j < vcount; ++j) e += mult[i][j];
    return e;
}

bool SuperbaseGraph::connected() const
{
    if (vcount == 0) return true;
    std::vector<char> seen(vcount, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < vcount; ++v)
            if (!seen[v] && mult[u][v] > 0) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

SuperbaseGraph graph_of(const std::vector<Vec>& vs)
{
    SuperbaseGraph g;
    g.vcount = static_cast<int>(vs.size());
    g.mult.assign(g.vcount, std::vector<int64_t>(g.vcount, 0));
    g.deg.assign(g.vcount, 0);
    for (int i = 0; i < g.vcount; ++i) {
        g.deg[i] = norm2(vs[i]);
        for (int j = i + 1; j < g.vcount; ++j) {
            int64_t p = pairing(vs[i], vs[j]);
            g.mult[i][j] = g.mult[j][i] = -p;
        }
    }
    return g;
}

} // namespace

std::vector<Vec> lattice_basis(const ChangemakerLattice& L)
{
    if (L.flavor == LatticeFlavor::Integer) return standard_basis(L.sigma);

    const int r = L.sigma.r();
    std::vector<Vec> basis;
    Vec v0(r + 2, 0);
    v0[0] = 1;  // f
    v0[1] = 1;  // e0
    v0[2] = -1; // e1
    basis.push_back(std::move(v0));
    for (const auto& b : standard_basis(L.sigma)) {
        Vec v(r + 2, 0);
        for (int i = 0; i < r; ++i) v[2 + i] = b[i];
        basis.push_back(std::move(v));
    }
    return basis;
}

int64_t discriminant(const ChangemakerLattice& L)
{
    auto basis = lattice_basis(L);
    std::vector<std::vector<int64_t>> gram(basis.size(), std::vector<int64_t>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) gram[i][j] = pairing(basis[i], basis[j]);
    return det_bareiss(std::move(gram));
}

namespace {

// Writes v as an integer combination of the lattice basis. The basis is
// triangular against the ambient coordinates: row k of the standard basis is
// the only one touching e_k, and the half-integer extra vector is the only
// one touching f. Returns false if v is not in the integer span.
bool coords_in_basis(const ChangemakerLattice& L, const std::vector<Vec>& basis, const Vec& v,
                     std::vector<int64_t>& out)
{
    Vec rest = v;
    out.assign(basis.size(), 0);
    if (L.flavor == LatticeFlavor::HalfInteger) {
        out[0] = rest[0]; // coefficient of the f-carrying basis vector
        for (size_t i = 0; i < rest.size(); ++i) rest[i] -= out[0] * basis[0][i];
    }
    const size_t first = L.flavor == LatticeFlavor::HalfInteger ? 1 : 0;
    const size_t off = L.flavor == LatticeFlavor::HalfInteger ? 2 : 0;
    // Basis vector first+j kills ambient coordinate off + (j+1) with entry -1.
    for (size_t j = basis.size() - first; j-- > 0;) {
        size_t col = off + j + 1;
        int64_t c = -rest[col];
        out[first + j] = c;
        if (c != 0)
            for (size_t i = 0; i < rest.size(); ++i) rest[i] -= c * basis[first + j][i];
    }
    return std::all_of(rest.begin(), rest.end(), [](int64_t x) { return x == 0; });
}

} // namespace

ObtuseSuperbase validate_superbase(const ChangemakerLattice& L, const std::vector<Vec>& vs)
{
    for (const auto& v : vs) {
        if (static_cast<int>(v.size()) != L.ambient_rank)
            fail(ErrorCode::RankMismatch, "vector has wrong ambient rank");
        if (!L.contains(v)) fail(ErrorCode::VectorNotInLattice, "vector is not orthogonal to the defining vectors");
    }
    Vec sum(L.ambient_rank, 0);
    for (const auto& v : vs)
        for (int i = 0; i < L.ambient_rank; ++i) sum[i] += v[i];
    if (!std::all_of(sum.begin(), sum.end(), [](int64_t x) { return x == 0; }))
        fail(ErrorCode::NonzeroSum, "superbase vectors do not sum to zero");
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (pairing(vs[i], vs[j]) > 0) fail(ErrorCode::PositivePairing, "positive pairing inside superbase");

    if (static_cast<int>(vs.size()) != L.rank + 1)
        fail(ErrorCode::NotSpanning, "superbase must have rank + 1 vectors");

    if (L.rank > 0) {
        for (const auto& v : vs)
            if (norm2(v) == 0) fail(ErrorCode::NotSpanning, "zero vector cannot appear in a superbase");
        // Any rank-many of the vectors must form a unimodular basis; the last
        // one is redundant (sum zero), so test the first rank of them.
        auto basis = lattice_basis(L);
        std::vector<std::vector<int64_t>> coeff;
        for (int i = 0; i < L.rank; ++i) {
            std::vector<int64_t> c;
            if (!coords_in_basis(L, basis, vs[i], c))
                fail(ErrorCode::VectorNotInLattice, "vector is not an integer combination of the lattice basis");
            coeff.push_back(std::move(c));
        }
        int64_t det = det_bareiss(std::move(coeff));
        if (det != 1 && det != -1) fail(ErrorCode::NotSpanning, "vectors do not generate the full lattice");
    }

    ObtuseSuperbase B;
    B.vectors = vs;
    B.graph = graph_of(vs);
    // Forced by the zero sum: degree equals the sum of incident multiplicities.
    for (int i = 0; i < B.graph.vcount; ++i) {
        int64_t s = 0;
        for (int j = 0; j < B.graph.vcount; ++j) s += B.graph.mult[i][j];
        assert(s == B.graph.deg[i]);
    }
    assert(B.graph.connected() || L.rank == 0);
    return B;
}

bool is_irreducible_pm1(const Vec& z, const ChangemakerVector& sigma)
{
    if (static_cast<int>(z.size()) != sigma.r())
        fail(ErrorCode::RankMismatch, "vector and changemaker vector sizes differ");
    std::vector<int64_t> pos, neg;
    for (int i = 0; i < sigma.r(); ++i) {
        if (z[i] == 1) pos.push_back(sigma.sigma[i]);
        else if (z[i] == -1) neg.push_back(sigma.sigma[i]);
        else if (z[i] != 0) fail(ErrorCode::CoordinateOutOfRange, "criterion needs coordinates in {-1,0,1}");
    }
    if (pos.size() + neg.size() <= 1) return true;
    // A one-sided vector with two or more entries splits freely.
    if (pos.empty() || neg.empty()) return false;

    auto proper_sums = [](const std::vector<int64_t>& xs) {
        int64_t total = 0;
        for (int64_t x : xs) total += x;
        std::vector<char> can(total + 1, 0);
        can[0] = 1;
        for (int64_t x : xs)
            for (int64_t s = total - x; s >= 0; --s)
                if (can[s]) can[s + x] = 1;
        // entries are positive, so proper nonempty subsets are exactly the
        // achievable sums in [1, total - 1]
        can[0] = 0;
        if (total <= static_cast<int64_t>(can.size()) - 1) can[total] = 0;
        return can;
    };
    auto pa = proper_sums(pos);
    auto pb = proper_sums(neg);
    size_t lim = std::min(pa.size(), pb.size());
    for (size_t s = 1; s < lim; ++s)
        if (pa[s] && pb[s]) return false;
    return true;
}

std::vector<Vec> superbase_irreducibles(const ObtuseSuperbase& B)
{
    const int n = static_cast<int>(B.vectors.size());
    if (n == 0) return {};
    const int amb = static_cast<int>(B.vectors[0].size());

    auto induced_connected = [&](uint32_t mask) {
        if (mask == 0) return false;
        int start = __builtin_ctz(mask);
        uint32_t seen = 1u << start;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if ((mask >> v & 1) && !(seen >> v & 1) && B.graph.mult[u][v] > 0) {
                    seen |= 1u << v;
                    stack.push_back(v);
                }
        }
        return seen == mask;
    };

    std::set<Vec> out;
    const uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
    for (uint32_t mask = 1; mask < full; ++mask) {
        if (!induced_connected(mask) || !induced_connected(full & ~mask)) continue;
        Vec z(amb, 0);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                for (int i = 0; i < amb; ++i) z[i] += B.vectors[v][i];
        if (norm2(z) != 0) out.insert(std::move(z));
    }
    return {out.begin(), out.end()};
}

bool is_two_connected(const SuperbaseGraph& g)
{
    const int n = g.vcount;
    if (n <= 1) return true;
    if (!g.connected()) return false;
    if (n == 2) return g.mult[0][1] > 0;

    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool has_cut = false;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v = 0; v < n; ++v) {
            if (g.mult[u][v] == 0 || v == u) continue;
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) has_cut = true;
            } else if (v != parent || g.mult[u][v] > 1) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) has_cut = true;
    };
    dfs(0, -1);
    return !has_cut;
}

DecompositionHint indecomposable_hint(const ChangemakerVector& sigma)
{
    auto basis = standard_basis(sigma);
    const int n = static_cast<int>(basis.size());
    if (n <= 1) return DecompositionHint::Indecomposable;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && pairing(basis[u], basis[v]) != 0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n ? DecompositionHint::Indecomposable : DecompositionHint::Unknown;
}

} // namespace altsurg
