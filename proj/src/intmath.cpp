#include "altsurg/intmath.hpp"

#include "altsurg/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace altsurg {

int64_t isqrt64(int64_t x)
{
    if (x < 0) fail(ErrorCode::OutOfRange, "isqrt64 of negative value");
    if (x < 2) return x;
    // Newton iteration converges from above.
    int64_t r = x;
    int64_t prev = 0;
    // Start from a power-of-two overestimate to avoid overflow in (r + x/r).
    int bits = 0;
    for (int64_t t = x; t > 0; t >>= 1) ++bits;
    r = int64_t{1} << ((bits + 1) / 2);
    while (true) {
        prev = r;
        r = (r + x / r) / 2;
        if (r >= prev) break;
    }
    while (prev * prev > x) --prev;
    while ((prev + 1) * (prev + 1) <= x) ++prev;
    return prev;
}

int64_t isqrt_ratio(int64_t num, int64_t den)
{
    if (num < 0 || den <= 0) fail(ErrorCode::OutOfRange, "isqrt_ratio domain");
    int64_t b = isqrt64(num / den) + 2;
    while (static_cast<__int128>(b) * b * den > num) --b;
    return b;
}

int64_t det_bareiss(std::vector<std::vector<int64_t>> m)
{
    const size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

    __int128 prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    __int128 det = sign * a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) fail(ErrorCode::Overflow, "determinant exceeds 64 bits");
    return static_cast<int64_t>(det);
}

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void gcd_reduce(std::vector<__int128>& row)
{
    __int128 g = 0;
    for (auto x : row) g = gcd128(g, x);
    if (g > 1)
        for (auto& x : row) x /= g;
}

} // namespace

bool RankTracker::try_add(const int32_t* v)
{
    std::vector<__int128> row(dim_);
    for (int i = 0; i < dim_; ++i) row[i] = v[i];

    // Stored rows are each reduced against all earlier rows, so eliminating in
    // insertion order never reintroduces a cleared leading position.
    static const __int128 kLimit = (__int128{1} << 100);
    for (const auto& r : rows_) {
        int lead = 0;
        while (lead < dim_ && r[lead] == 0) ++lead;
        if (lead == dim_) continue;
        if (row[lead] == 0) continue;
        __int128 a = r[lead], b = row[lead];
        __int128 g = gcd128(a, b);
        a /= g;
        b /= g;
        for (int i = 0; i < dim_; ++i) {
            row[i] = row[i] * a - r[i] * b;
            if (row[i] > kLimit || row[i] < -kLimit) fail(ErrorCode::Overflow, "rank tracker entry overflow");
        }
        gcd_reduce(row);
    }
    bool nonzero = false;
    for (int i = 0; i < dim_; ++i)
        if (row[i] != 0) nonzero = true;
    if (!nonzero) return false;
    rows_.push_back(std::move(row));
    return true;
}

uint64_t fnv1a64(std::string_view s)
{
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace altsurg
