#include "altsurg/alexpoly.hpp"

#include "altsurg/errors.hpp"

#include <limits>

namespace altsurg {

namespace {

int64_t checked_add(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in coefficient arithmetic");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in coefficient arithmetic");
    return r;
}

} // namespace

AlexanderPolynomial parse_polynomial(const std::vector<int64_t>& raw)
{
    if (raw.empty()) fail(ErrorCode::EmptyInput, "empty coefficient list");
    std::vector<int64_t> a = raw;
    while (a.size() > 1 && a.back() == 0) a.pop_back();

    int64_t at_one = a[0];
    for (size_t i = 1; i < a.size(); ++i) at_one = checked_add(at_one, checked_mul(2, a[i]));

    if (at_one == -1) {
        for (auto& c : a) c = -c;
        at_one = 1;
    }
    if (at_one != 1) fail(ErrorCode::NormalizationError, "polynomial does not evaluate to 1 at x = 1");
    return AlexanderPolynomial{std::move(a)};
}

AlexanderPolynomial parse_full_laurent(const std::vector<int64_t>& raw)
{
    if (raw.empty()) fail(ErrorCode::EmptyInput, "empty coefficient list");
    if (raw.size() % 2 == 0) fail(ErrorCode::NormalizationError, "full Laurent list must have odd length");
    size_t g = raw.size() / 2;
    std::vector<int64_t> half(g + 1);
    for (size_t i = 0; i <= g; ++i) {
        int64_t hi = raw[g + i];
        int64_t lo = raw[g - i];
        if (hi != lo) fail(ErrorCode::NormalizationError, "coefficient list is not symmetric");
        half[i] = hi;
    }
    return parse_polynomial(half);
}

TorsionProfile torsion_coefficients(const AlexanderPolynomial& p)
{
    const int g = p.genus_degree();
    std::vector<int64_t> t(g + 1, 0);
    for (int i = 0; i <= g; ++i) {
        int64_t acc = 0;
        for (int j = 1; i + j <= g; ++j) acc = checked_add(acc, checked_mul(j, p.a[i + j]));
        t[i] = acc;
    }
    return TorsionProfile{std::move(t)};
}

bool is_lspace_form(const TorsionProfile& tp)
{
    const auto& t = tp.t;
    const int g = tp.degree();
    if (t.empty() || t[g] != 0) return false;
    for (int i = 0; i <= g; ++i)
        if (t[i] < 0) return false;
    for (int i = 1; i <= g; ++i)
        if (!(t[i - 1] >= t[i] && t[i] >= t[i - 1] - 1)) return false;
    if (g >= 1 && t[g - 1] != 1) return false;
    return true;
}

TorsionCounts torsion_counts(const TorsionProfile& tp)
{
    if (!is_lspace_form(tp)) fail(ErrorCode::NotLSpaceForm, "torsion profile is not of L-space form");
    const int g = tp.degree();
    const int64_t t0 = tp.t[0];
    std::vector<int64_t> T(t0 + 1, 0);
    for (int64_t k = 1; k <= t0; ++k) {
        int64_t count = 0;
        for (int i = 0; i < g; ++i)
            if (tp.t[i] > 0 && tp.t[i] <= k) ++count;
        T[k] = count;
    }
    return TorsionCounts{std::move(T), g};
}

AlexanderPolynomial polynomial_from_torsion(const TorsionProfile& tp)
{
    const int g = tp.degree();
    std::vector<int64_t> a(g + 1, 0);
    auto t_at = [&](int i) -> int64_t { return (i >= 0 && i <= g) ? tp.t[i] : 0; };
    int64_t tail = 0;
    for (int i = 1; i <= g; ++i) {
        a[i] = t_at(i - 1) - 2 * t_at(i) + t_at(i + 1);
        tail = checked_add(tail, a[i]);
    }
    a[0] = checked_add(1, checked_mul(-2, tail));
    return AlexanderPolynomial{std::move(a)};
}

} // namespace altsurg
