#include "altsurg/goeritz.hpp"

#include "altsurg/errors.hpp"
#include "altsurg/intmath.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <cassert>

namespace altsurg {

namespace {

// Faces of a rotation system: orbits of dart -> next dart around a face.
// Dart 2e traverses edge e first->second, dart 2e+1 the reverse.
int count_faces(const PlanarEmbedding& emb)
{
    const int ecount = static_cast<int>(emb.edges.size());
    if (ecount == 0) return 1;

    std::vector<std::vector<int>> out_dart(emb.rotation.size());
    std::vector<int> pos_of_dart(2 * ecount, -1);
    for (size_t v = 0; v < emb.rotation.size(); ++v) {
        out_dart[v].resize(emb.rotation[v].size());
        for (size_t i = 0; i < emb.rotation[v].size(); ++i) {
            int e = emb.rotation[v][i];
            int d = emb.edges[e].first == static_cast<int>(v) ? 2 * e : 2 * e + 1;
            out_dart[v][i] = d;
            pos_of_dart[d] = static_cast<int>(i);
        }
    }

    auto dart_head = [&](int d) {
        int e = d / 2;
        return d % 2 == 0 ? emb.edges[e].second : emb.edges[e].first;
    };

    std::vector<char> seen(2 * ecount, 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * ecount; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        do {
            seen[d] = 1;
            int v = dart_head(d);
            int pos = pos_of_dart[d ^ 1]; // slot of this edge instance at v
            int deg = static_cast<int>(emb.rotation[v].size());
            d = out_dart[v][(pos + 1) % deg];
        } while (d != d0);
    }
    return faces;
}

} // namespace

std::optional<PlanarEmbedding> planarity(const SuperbaseGraph& g)
{
    if (!g.connected()) fail(ErrorCode::PreconditionViolation, "planarity needs a connected graph");
    const int n = g.vcount;

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(n);
    std::vector<std::pair<int, int>> simple_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.mult[i][j] > 0) {
                boost::add_edge(i, j, static_cast<int>(simple_edges.size()), bg);
                simple_edges.emplace_back(i, j);
            }

    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb_storage(n);
    auto emb_map = boost::make_iterator_property_map(emb_storage.begin(), boost::get(boost::vertex_index, bg));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = emb_map);
    if (!planar) return std::nullopt;

    auto eidx = boost::get(boost::edge_index, bg);

    // Expand to edge instances: parallel copies are nested, so the bundle is
    // inserted in order at one endpoint and reversed at the other.
    PlanarEmbedding out;
    std::vector<std::vector<int>> instances(simple_edges.size());
    for (size_t s = 0; s < simple_edges.size(); ++s) {
        auto [i, j] = simple_edges[s];
        for (int64_t c = 0; c < g.mult[i][j]; ++c) {
            instances[s].push_back(static_cast<int>(out.edges.size()));
            out.edges.emplace_back(i, j);
        }
    }
    out.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        for (const EdgeDesc& ed : emb_storage[v]) {
            int s = eidx[ed];
            bool at_first = simple_edges[s].first == v;
            if (at_first) {
                for (int inst : instances[s]) out.rotation[v].push_back(inst);
            } else {
                for (auto it = instances[s].rbegin(); it != instances[s].rend(); ++it)
                    out.rotation[v].push_back(*it);
            }
        }
    }

    out.face_count = count_faces(out);
    const int E = static_cast<int>(out.edges.size());
    if (n - E + out.face_count != 2)
        fail(ErrorCode::PreconditionViolation, "embedding failed the Euler re-check");
    return out;
}

GoeritzMatrix goeritz_matrix(const ObtuseSuperbase& B, int drop)
{
    const int n = static_cast<int>(B.vectors.size());
    if (drop < 0 || drop >= n) fail(ErrorCode::IndexOutOfRange, "dropped vertex out of range");
    GoeritzMatrix gm;
    gm.dropped_vertex = drop;
    for (int i = 0; i < n; ++i) {
        if (i == drop) continue;
        std::vector<int64_t> row;
        for (int j = 0; j < n; ++j) {
            if (j == drop) continue;
            row.push_back(pairing(B.vectors[i], B.vectors[j]));
        }
        gm.m.push_back(std::move(row));
    }
    gm.determinant = det_bareiss(gm.m);
    return gm;
}

GoeritzMatrix goeritz_matrix(const ObtuseSuperbase& B)
{
    int best = 0;
    for (int i = 1; i < static_cast<int>(B.vectors.size()); ++i)
        if (B.graph.deg[i] > B.graph.deg[best]) best = i;
    return goeritz_matrix(B, best);
}

int64_t spanning_tree_count(const SuperbaseGraph& g)
{
    if (!g.connected()) fail(ErrorCode::PreconditionViolation, "spanning tree count needs a connected graph");
    const int n = g.vcount;
    if (n <= 1) return 1;
    std::vector<std::vector<int64_t>> lap(n - 1, std::vector<int64_t>(n - 1, 0));
    for (int i = 0; i + 1 < n; ++i) {
        int64_t d = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) d += g.mult[i][j];
        lap[i][i] = d;
        for (int j = 0; j + 1 < n; ++j)
            if (j != i) lap[i][j] = -g.mult[i][j];
    }
    return det_bareiss(std::move(lap));
}

AlternatingDiagramData emit_branching_set(const PlanarEmbedding& e, const ObtuseSuperbase& B)
{
    AlternatingDiagramData out;
    out.vertices = static_cast<int>(e.rotation.size());
    out.edges = e.edges;
    out.rotation = e.rotation;
    out.determinant = spanning_tree_count(B.graph);

    const int ecount = static_cast<int>(e.edges.size());
    if (ecount == 0) return out;

    // Arc labels: one per corner (vertex, rotation position), 1-indexed in
    // vertex-major order.
    std::vector<int> corner_base(e.rotation.size() + 1, 0);
    for (size_t v = 0; v < e.rotation.size(); ++v)
        corner_base[v + 1] = corner_base[v] + static_cast<int>(e.rotation[v].size());
    auto arc = [&](int v, int pos) {
        int deg = static_cast<int>(e.rotation[v].size());
        return corner_base[v] + ((pos % deg) + deg) % deg + 1;
    };

    // position of each edge instance at each endpoint
    std::vector<int> pos_first(ecount, -1), pos_second(ecount, -1);
    for (size_t v = 0; v < e.rotation.size(); ++v)
        for (size_t i = 0; i < e.rotation[v].size(); ++i) {
            int inst = e.rotation[v][i];
            if (e.edges[inst].first == static_cast<int>(v) && pos_first[inst] < 0)
                pos_first[inst] = static_cast<int>(i);
            else
                pos_second[inst] = static_cast<int>(i);
        }

    // One crossing per edge instance. Counterclockwise around the crossing on
    // edge (u, v): corner before e at u, corner after e at v, corner before e
    // at v, corner after e at u. Opposite entries belong to the same strand.
    std::vector<int> arc_uses(corner_base.back() + 1, 0);
    for (int inst = 0; inst < ecount; ++inst) {
        auto [u, v] = e.edges[inst];
        int pu = pos_first[inst];
        int pv = pos_second[inst];
        std::array<int, 4> x = {arc(u, pu - 1), arc(v, pv), arc(v, pv - 1), arc(u, pu)};
        for (int a : x) ++arc_uses[a];
        out.pd_crossings.push_back(x);
    }
    for (size_t a = 1; a < arc_uses.size(); ++a)
        if (arc_uses[a] != 2) fail(ErrorCode::PreconditionViolation, "medial construction produced an invalid arc");
    return out;
}

} // namespace altsurg
