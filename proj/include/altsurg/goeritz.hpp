#ifndef ALTSURG_GOERITZ_HPP
#define ALTSURG_GOERITZ_HPP

#include "altsurg/lattice.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace altsurg {

// Rotation system of a plane multigraph. Edge instances are numbered; an
// instance appears once in the rotation of each endpoint.
struct PlanarEmbedding {
    std::vector<std::pair<int, int>> edges;  // endpoints per edge instance
    std::vector<std::vector<int>> rotation;  // cyclic edge-instance lists
    int face_count = 0;                      // derived, satisfies V - E + F = 2
};

// Embedding for planar multigraphs, nullopt otherwise. Parallel edges are
// collapsed for the planarity test and reinserted adjacently (nested) in the
// rotation; the result is re-validated with the Euler count.
std::optional<PlanarEmbedding> planarity(const SuperbaseGraph& g);

struct GoeritzMatrix {
    std::vector<std::vector<int64_t>> m;
    int dropped_vertex = 0;
    int64_t determinant = 0;
};

// Gram matrix of all superbase vertices but `drop`; its determinant is the
// lattice discriminant.
GoeritzMatrix goeritz_matrix(const ObtuseSuperbase& B, int drop);
// Default drop: vertex of maximal degree, lowest index on ties.
GoeritzMatrix goeritz_matrix(const ObtuseSuperbase& B);

// Determinant of the reduced Laplacian, exact.
int64_t spanning_tree_count(const SuperbaseGraph& g);

// Combinatorial alternating-diagram data built from an embedded white graph
// by the medial construction: one crossing per edge, arcs joined in the
// cyclic vertex order. Crossing tuples list the four incident arc labels
// counterclockwise starting at the tail-side corner preceding the edge; the
// first and third entries form one strand (the under-strand under the
// uniform incidence convention), the second and fourth the other.
struct AlternatingDiagramData {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<std::array<int, 4>> pd_crossings; // 1-indexed arc labels
    int64_t determinant = 0;
};

AlternatingDiagramData emit_branching_set(const PlanarEmbedding& e, const ObtuseSuperbase& B);

} // namespace altsurg

#endif
