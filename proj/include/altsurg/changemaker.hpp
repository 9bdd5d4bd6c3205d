#ifndef ALTSURG_CHANGEMAKER_HPP
#define ALTSURG_CHANGEMAKER_HPP

#include "altsurg/alexpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace altsurg {

// Nondecreasing positive integers with sigma_1 = 1 and
// sigma_i <= 1 + sigma_1 + ... + sigma_{i-1}.
struct ChangemakerVector {
    std::vector<int64_t> sigma;
    int r() const { return static_cast<int>(sigma.size()); }
    int64_t norm() const;
    // Least index (1-based) with sigma_m >= 2, or r+1 if none.
    int m_index() const;
};

// Stable coefficients in canonical decreasing order, every entry >= 2.
// Empty is allowed and means "no stable part".
struct StableCoefficients {
    std::vector<int64_t> rho;
    bool empty() const { return rho.empty(); }
    size_t size() const { return rho.size(); }
    int64_t sum_squares() const;
    // g = 1/2 * sum rho_i (rho_i - 1)
    int64_t genus() const;
};

enum class LatticeFlavor { Integer, HalfInteger };

// Integer flavor: <sigma>^perp in Z^r with |sigma|^2 = n, disc = n.
// Half-integer flavor (slope n - 1/2): the orthogonal complement of
// {f - e0, e0 + sigma} in Z^(r+2) with |sigma|^2 = n - 1, disc = 2n - 1.
// Half-integer ambient coordinates are ordered (f, e0, e1, ..., er).
struct ChangemakerLattice {
    LatticeFlavor flavor = LatticeFlavor::Integer;
    ChangemakerVector sigma;               // inner changemaker vector
    int64_t slope_numerator = 0;           // n (integer) or 2n-1 (half-integer)
    int64_t slope_denominator = 1;         // 1 or 2
    int ambient_rank = 0;                  // r or r+2
    int rank = 0;                          // r-1 or r
    std::vector<std::vector<int64_t>> defining_vectors;
    int64_t discriminant = 0;

    bool contains(const std::vector<int64_t>& v) const;
};

bool is_changemaker(const std::vector<int64_t>& sigma);

// Lexicographically maximal A subset of {1..k} (1-based indices) with
// sum_{i in A} sigma_i = T; greedy from index k downward.
std::vector<int> subset_representation(const ChangemakerVector& sigma, int k, int64_t T);

// The compatible stable coefficients determined by the torsion counts, if any.
// Runs the count-driven extraction loop, then re-derives the expected counts
// from the candidate tuple and returns nullopt on any mismatch.
std::optional<StableCoefficients> stable_coefficients(const TorsionCounts& counts, int64_t g, int64_t t0);

// Counts T_1..T_t0 determined by a stable tuple: each T_k is the maximum of
// sigma . alpha over alpha >= 0 with sum alpha_i (alpha_i + 1) = 2k, taken
// against the stable part padded by unlimited trailing ones (a one
// contributes alpha in {0,1} at budget cost 2). t0 is the least k reaching g.
TorsionCounts expected_counts(const StableCoefficients& rho);

// N = sum rho_i^2 + max_k (rho_k - sum_{i>k} rho_i), rho decreasing.
int64_t n_invariant(const StableCoefficients& rho);

ChangemakerLattice build_integer_lattice(const StableCoefficients& rho, int64_t n);

// Slope n - 1/2; the inner changemaker vector has norm n - 1.
ChangemakerLattice build_half_integer_lattice(const StableCoefficients& rho, int64_t n);

// Basis vectors v^(2)..v^(r) of the integer lattice, each orthogonal to sigma:
// -e_k + e_{k-1} + ... + e_2 + 2 e_1 when sigma_k is tight, else
// -e_k + sum_{i in A_k} e_i with A_k the lexicographically maximal subset
// representation of sigma_k.
std::vector<std::vector<int64_t>> standard_basis(const ChangemakerVector& sigma);

struct ChangemakerFlags {
    bool tight = false;
    bool very_slack = false;
    int m = 0; // least index with sigma_m >= 2, or r+1
};

ChangemakerFlags classify_flags(const ChangemakerVector& sigma);

// Unique expansion p/q = a0 - 1/(a1 - 1/(... - 1/al)) with a0 >= 1, ai >= 2.
std::vector<int64_t> continued_fraction(int64_t p, int64_t q);

} // namespace altsurg

#endif
