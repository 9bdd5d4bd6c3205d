#ifndef ALTSURG_ALEXPOLY_HPP
#define ALTSURG_ALEXPOLY_HPP

#include <cstdint>
#include <vector>

namespace altsurg {

// Symmetrized Alexander polynomial D(x) = a[0] + sum_{i>=1} a[i] (x^i + x^-i),
// normalized so that D(1) = 1. Only the half coefficient list is stored.
struct AlexanderPolynomial {
    std::vector<int64_t> a; // a[0..g], a[g] != 0 unless g == 0
    int genus_degree() const { return static_cast<int>(a.size()) - 1; }
};

// Torsion coefficients t[i] = sum_{j>=1} j * a[i+j], for 0 <= i <= g (t[g] = 0).
struct TorsionProfile {
    std::vector<int64_t> t;
    int degree() const { return static_cast<int>(t.size()) - 1; }
};

// T[k] = #{ 0 <= i < g : 0 < t_i <= k } for 0 <= k <= t_0. T[0] = 0, T[t_0] = g.
struct TorsionCounts {
    std::vector<int64_t> T;
    int64_t g = 0;
    int64_t t0() const { return static_cast<int64_t>(T.size()) - 1; }
};

// Validates and normalizes a half coefficient list (a_0, ..., a_g).
// Trailing zeros are stripped; if D(1) = -1 the sign is flipped first.
AlexanderPolynomial parse_polynomial(const std::vector<int64_t>& raw);

// Accepts a full Laurent list (a_{-g}, ..., a_0, ..., a_g) of odd length and
// folds it by symmetry. Errors on asymmetric input.
AlexanderPolynomial parse_full_laurent(const std::vector<int64_t>& raw);

TorsionProfile torsion_coefficients(const AlexanderPolynomial& p);

// Steps of size at most one, t_{g-1} = 1 when g >= 1, and nonnegativity.
bool is_lspace_form(const TorsionProfile& t);

TorsionCounts torsion_counts(const TorsionProfile& t);

// Inverse of torsion_coefficients via second differences (test aid and
// round-trip check): a_i = t_{i-1} - 2 t_i + t_{i+1} for i >= 1.
AlexanderPolynomial polynomial_from_torsion(const TorsionProfile& t);

} // namespace altsurg

#endif
