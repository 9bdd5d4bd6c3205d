#include "altsurg/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace altsurg::kernels::avx2 {

namespace {

// Horizontal sum of 8 int32 lanes.
inline int32_t hsum8(__m256i v)
{
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

inline int32_t dot_row(const int32_t* q, const int32_t* r, int stride)
{
    __m256i acc = _mm256_setzero_si256();
    for (int j = 0; j < stride; j += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + j));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
    }
    return hsum8(acc);
}

} // namespace

void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out)
{
    // Query is padded to the stride by the callers (zero tail).
    for (int i = 0; i < m.rows; ++i) out[i] = dot_row(q, m.row(i), m.stride);
}

bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row)
{
    for (int i = 0; i < m.rows; ++i) {
        if (i == skip_row) continue;
        if (dot_row(q, m.row(i), m.stride) >= thr[i]) return false;
    }
    return true;
}

} // namespace altsurg::kernels::avx2

#endif
