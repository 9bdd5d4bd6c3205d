#ifndef ALTSURG_LATTICE_HPP
#define ALTSURG_LATTICE_HPP

#include "altsurg/changemaker.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace altsurg {

using Vec = std::vector<int64_t>;

// Integer coordinates in the ambient orthonormal basis.
int64_t pairing(const Vec& a, const Vec& b);
int64_t norm2(const Vec& a);

// Multigraph attached to a superbase: e(i,j) = |v_i . v_j|, d(i) = |v_i|^2.
struct SuperbaseGraph {
    int vcount = 0;
    std::vector<std::vector<int64_t>> mult; // symmetric, zero diagonal
    std::vector<int64_t> deg;
    int64_t edge_count() const;
    bool connected() const;
};

struct ObtuseSuperbase {
    std::vector<Vec> vectors; // rank + 1 of them, sum zero, pairwise <= 0
    SuperbaseGraph graph;
};

// Audit record for a completed exhaustive search.
struct ExhaustionRecord {
    std::vector<int64_t> bounds;           // static per-coordinate box
    std::vector<std::string> bound_origin; // provenance per coordinate
    int64_t vbound_count = 0;
    int64_t virred_count = 0;
    uint64_t subsets_examined = 0;
    int64_t wall_ms = 0;
    std::string version;
};

// Checks membership, zero sum, pairwise nonpositivity and span, and returns
// the superbase with its derived graph. Span is verified by writing each
// vector in lattice basis coordinates and requiring the integer coefficient
// matrix to be unimodular.
ObtuseSuperbase validate_superbase(const ChangemakerLattice& L, const std::vector<Vec>& vs);

// Basis of the lattice used for span checks: the standard basis for the
// integer flavor; for the half-integer flavor the vector (1,1,-1,0,...) is
// prepended to the embedded standard basis of the inner lattice.
std::vector<Vec> lattice_basis(const ChangemakerLattice& L);

// Gram determinant of lattice_basis; equals the stored discriminant.
int64_t discriminant(const ChangemakerLattice& L);

// Criterion for vectors with coordinates in {-1,0,1} against sigma
// (integer flavor): reducible exactly when proper nonempty subsets of the
// positive and negative supports have equal sigma-sums.
bool is_irreducible_pm1(const Vec& z, const ChangemakerVector& sigma);

// All irreducible vectors of the lattice presented by a superbase: sums over
// vertex subsets R where both R and its complement induce connected
// subgraphs. Deduplicated; canonical sign (first nonzero coordinate > 0) is
// NOT applied, both signs appear when both arise.
std::vector<Vec> superbase_irreducibles(const ObtuseSuperbase& B);

// No cut vertex.
bool is_two_connected(const SuperbaseGraph& g);

enum class DecompositionHint { Indecomposable, Unknown };

// One-sided test: connected standard-basis pairing graph forces
// indecomposability; anything else stays Unknown.
DecompositionHint indecomposable_hint(const ChangemakerVector& sigma);

} // namespace altsurg

#endif
