#include "altsurg/changemaker.hpp"

#include "altsurg/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace altsurg {

int64_t ChangemakerVector::norm() const
{
    int64_t n = 0;
    for (int64_t s : sigma) n += s * s;
    return n;
}

int ChangemakerVector::m_index() const
{
    for (int i = 0; i < r(); ++i)
        if (sigma[i] >= 2) return i + 1;
    return r() + 1;
}

int64_t StableCoefficients::sum_squares() const
{
    int64_t n = 0;
    for (int64_t x : rho) n += x * x;
    return n;
}

int64_t StableCoefficients::genus() const
{
    int64_t g = 0;
    for (int64_t x : rho) g += x * (x - 1) / 2;
    return g;
}

bool ChangemakerLattice::contains(const std::vector<int64_t>& v) const
{
    if (static_cast<int>(v.size()) != ambient_rank) return false;
    for (const auto& d : defining_vectors) {
        int64_t dot = 0;
        for (int i = 0; i < ambient_rank; ++i) dot += d[i] * v[i];
        if (dot != 0) return false;
    }
    return true;
}

bool is_changemaker(const std::vector<int64_t>& sigma)
{
    if (sigma.empty() || sigma[0] != 1) return false;
    int64_t prefix = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] <= 0) return false;
        if (i > 0 && (sigma[i] < sigma[i - 1] || sigma[i] > 1 + prefix)) return false;
        prefix += sigma[i];
    }
    return true;
}

std::vector<int> subset_representation(const ChangemakerVector& sigma, int k, int64_t T)
{
    if (k < 0 || k > sigma.r()) fail(ErrorCode::OutOfRange, "subset_representation index out of range");
    int64_t prefix = 0;
    for (int i = 0; i < k; ++i) prefix += sigma.sigma[i];
    if (T < 0 || T > prefix) fail(ErrorCode::OutOfRange, "target not representable below index k");

    std::vector<int> A;
    int64_t rem = T;
    for (int i = k; i >= 1 && rem > 0; --i) {
        if (sigma.sigma[i - 1] <= rem) {
            A.push_back(i);
            rem -= sigma.sigma[i - 1];
        }
    }
    assert(rem == 0); // guaranteed by the changemaker inequalities
    std::reverse(A.begin(), A.end());
    return A;
}

namespace {

// Max of rho . alpha over alpha >= 0 with sum alpha_i (alpha_i + 1) == budget,
// entries drawn from the tuple `vals`. Returns nullopt when no alpha fits the
// budget exactly. dp over items.
std::optional<int64_t> max_gain_exact(const std::vector<int64_t>& vals, int64_t budget)
{
    const int64_t NEG = INT64_MIN / 4;
    std::vector<int64_t> dp(budget + 1, NEG);
    dp[0] = 0;
    for (int64_t v : vals) {
        std::vector<int64_t> next = dp;
        for (int64_t b = 0; b <= budget; ++b) {
            if (dp[b] == NEG) continue;
            for (int64_t a = 1;; ++a) {
                int64_t cost = a * (a + 1);
                if (b + cost > budget) break;
                next[b + cost] = std::max(next[b + cost], dp[b] + a * v);
            }
        }
        dp = std::move(next);
    }
    if (dp[budget] == NEG) return std::nullopt;
    return dp[budget];
}

// As above but with unlimited trailing ones: leftover budget 2j yields +j.
int64_t max_gain_with_ones(const std::vector<int64_t>& vals, int64_t budget)
{
    const int64_t NEG = INT64_MIN / 4;
    std::vector<int64_t> dp(budget + 1, NEG);
    dp[0] = 0;
    for (int64_t v : vals) {
        std::vector<int64_t> next = dp;
        for (int64_t b = 0; b <= budget; ++b) {
            if (dp[b] == NEG) continue;
            for (int64_t a = 1;; ++a) {
                int64_t cost = a * (a + 1);
                if (b + cost > budget) break;
                next[b + cost] = std::max(next[b + cost], dp[b] + a * v);
            }
        }
        dp = std::move(next);
    }
    int64_t best = 0;
    for (int64_t b = 0; b <= budget; b += 2) {
        if (dp[b] == NEG) continue;
        best = std::max(best, dp[b] + (budget - b) / 2);
    }
    return best;
}

} // namespace

TorsionCounts expected_counts(const StableCoefficients& rho)
{
    if (rho.empty()) fail(ErrorCode::EmptyStableCoefficients, "expected_counts needs a nonempty stable tuple");
    const int64_t g = rho.genus();
    std::vector<int64_t> T;
    T.push_back(0);
    // t0 <= g always: k ones at alpha = 1 reach gain k.
    for (int64_t k = 1; k <= g + 1; ++k) {
        int64_t m = max_gain_with_ones(rho.rho, 2 * k);
        if (m >= g) {
            T.push_back(g);
            return TorsionCounts{std::move(T), g};
        }
        T.push_back(m);
    }
    fail(ErrorCode::PreconditionViolation, "count sequence failed to reach the genus");
}

std::optional<StableCoefficients> stable_coefficients(const TorsionCounts& counts, int64_t g, int64_t t0)
{
    if (counts.T.empty() || counts.T[0] != 0 || counts.t0() != t0 || counts.g != g) return std::nullopt;
    if (t0 == 0) {
        // Genus zero: no stable part.
        return g == 0 ? std::optional<StableCoefficients>(StableCoefficients{}) : std::nullopt;
    }

    // Extraction loop. The guard admits k == t0: the large-coefficient phase
    // must be allowed to consume the final count step (the all-threes tuples
    // need it), and the step condition alone ends the loop on every other
    // profile.
    std::vector<int64_t> s;
    for (int64_t k = 1; k <= t0; ++k) {
        int64_t step = counts.T[k] - counts.T[k - 1];
        if (step <= 2) break;
        std::optional<int64_t> M = max_gain_exact(s, 2 * k);
        if (M && *M > counts.T[k]) return std::nullopt;
        if (!M || *M < counts.T[k]) s.push_back(step);
    }

    int64_t used = 0;
    for (int64_t x : s) used += x * (x - 1) / 2;
    int64_t d = g - used;
    if (d < 0) return std::nullopt;

    StableCoefficients rho;
    rho.rho = s;
    rho.rho.insert(rho.rho.end(), static_cast<size_t>(d), 2);
    for (size_t i = 1; i < rho.rho.size(); ++i)
        if (rho.rho[i] > rho.rho[i - 1]) return std::nullopt;
    for (int64_t x : rho.rho)
        if (x < 2) return std::nullopt;
    if (rho.empty()) return g == 0 ? std::optional<StableCoefficients>(rho) : std::nullopt;

    // A candidate tuple is only accepted if it regenerates the input counts.
    TorsionCounts regen = expected_counts(rho);
    if (regen.g != g || regen.t0() != t0 || regen.T != counts.T) return std::nullopt;
    return rho;
}

int64_t n_invariant(const StableCoefficients& rho)
{
    if (rho.empty()) fail(ErrorCode::EmptyStableCoefficients, "N is undefined for an empty stable tuple");
    const auto& p = rho.rho;
    int64_t suffix = 0;
    for (int64_t x : p) suffix += x;
    int64_t best = INT64_MIN;
    for (size_t k = 0; k < p.size(); ++k) {
        suffix -= p[k];
        best = std::max(best, p[k] - suffix);
    }
    return rho.sum_squares() + best;
}

ChangemakerLattice build_integer_lattice(const StableCoefficients& rho, int64_t n)
{
    if (rho.empty()) {
        if (n < 1) fail(ErrorCode::SlopeTooSmall, "integer lattice needs n >= 1");
        ChangemakerLattice L;
        L.flavor = LatticeFlavor::Integer;
        L.sigma.sigma.assign(static_cast<size_t>(n), 1);
        L.slope_numerator = n;
        L.ambient_rank = static_cast<int>(n);
        L.rank = static_cast<int>(n) - 1;
        L.defining_vectors = {L.sigma.sigma};
        L.discriminant = n;
        return L;
    }
    const int64_t N = n_invariant(rho);
    if (n < N - 1) fail(ErrorCode::SlopeTooSmall, "no changemaker vector with these stable coefficients at this norm");

    ChangemakerLattice L;
    L.flavor = LatticeFlavor::Integer;
    int64_t ones = n - rho.sum_squares(); // m - 1
    L.sigma.sigma.assign(static_cast<size_t>(ones), 1);
    for (auto it = rho.rho.rbegin(); it != rho.rho.rend(); ++it) L.sigma.sigma.push_back(*it);
    if (!is_changemaker(L.sigma.sigma)) fail(ErrorCode::PreconditionViolation, "constructed vector fails the changemaker inequalities");
    L.slope_numerator = n;
    L.ambient_rank = L.sigma.r();
    L.rank = L.ambient_rank - 1;
    L.defining_vectors = {L.sigma.sigma};
    L.discriminant = n;
    return L;
}

ChangemakerLattice build_half_integer_lattice(const StableCoefficients& rho, int64_t n)
{
    if (rho.empty()) fail(ErrorCode::EmptyStableCoefficients, "half-integer lattice needs stable coefficients");
    const int64_t N = n_invariant(rho);
    if (n < N) fail(ErrorCode::SlopeTooSmall, "half-integer slope below the existence threshold");

    ChangemakerLattice inner = build_integer_lattice(rho, n - 1);
    ChangemakerLattice L;
    L.flavor = LatticeFlavor::HalfInteger;
    L.sigma = inner.sigma;
    L.slope_numerator = 2 * n - 1;
    L.slope_denominator = 2;
    const int r = L.sigma.r();
    L.ambient_rank = r + 2;
    L.rank = r;
    // Coordinates (f, e0, e1..er); defining vectors f - e0 and e0 + sigma.
    std::vector<int64_t> d1(r + 2, 0), d2(r + 2, 0);
    d1[0] = 1;
    d1[1] = -1;
    d2[1] = 1;
    for (int i = 0; i < r; ++i) d2[2 + i] = L.sigma.sigma[i];
    L.defining_vectors = {std::move(d1), std::move(d2)};
    L.discriminant = 2 * n - 1;
    return L;
}

std::vector<std::vector<int64_t>> standard_basis(const ChangemakerVector& sigma)
{
    const int r = sigma.r();
    std::vector<std::vector<int64_t>> basis;
    int64_t prefix = sigma.sigma.empty() ? 0 : sigma.sigma[0];
    for (int k = 2; k <= r; ++k) {
        std::vector<int64_t> v(r, 0);
        v[k - 1] = -1;
        if (sigma.sigma[k - 1] == 1 + prefix) {
            // tight
            v[0] = 2;
            for (int i = 2; i <= k - 1; ++i) v[i - 1] = 1;
        } else {
            for (int i : subset_representation(sigma, k - 1, sigma.sigma[k - 1])) v[i - 1] = 1;
        }
        basis.push_back(std::move(v));
        prefix += sigma.sigma[k - 1];
    }
    return basis;
}

ChangemakerFlags classify_flags(const ChangemakerVector& sigma)
{
    ChangemakerFlags f;
    f.m = sigma.m_index();
    int64_t prefix = 0;
    bool very_slack = true;
    for (int i = 0; i < sigma.r(); ++i) {
        int64_t s = sigma.sigma[i];
        if (i > 0 && s == 1 + prefix) f.tight = true;
        if (s > 1 && s > prefix - 1) very_slack = false;
        prefix += s;
    }
    f.very_slack = very_slack && f.m <= sigma.r();

    // Cross-check: a nontrivial stable part is very slack exactly when the
    // norm clears N by at least one.
    if (f.m <= sigma.r()) {
        StableCoefficients rho;
        for (int i = sigma.r() - 1; i >= 0; --i)
            if (sigma.sigma[i] >= 2) rho.rho.push_back(sigma.sigma[i]);
        assert(f.very_slack == (sigma.norm() >= n_invariant(rho) + 1));
    }
    return f;
}

std::vector<int64_t> continued_fraction(int64_t p, int64_t q)
{
    if (p <= 0 || q <= 0) fail(ErrorCode::InvalidSlope, "continued fraction needs p/q > 0");
    int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    std::vector<int64_t> a;
    while (q != 0) {
        int64_t ai = (p + q - 1) / q; // ceil(p/q)
        a.push_back(ai);
        // a_i - p/q = (a_i q - p)/q; recurse on q / (a_i q - p).
        int64_t num = ai * q - p;
        p = q;
        q = num;
    }
    return a;
}

} // namespace altsurg
