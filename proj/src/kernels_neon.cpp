#include "altsurg/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

namespace altsurg::kernels::neon {

namespace {

inline int32_t dot_row(const int32_t* q, const int32_t* r, int stride)
{
    int32x4_t acc = vdupq_n_s32(0);
    for (int j = 0; j < stride; j += 4) {
        acc = vmlaq_s32(acc, vld1q_s32(q + j), vld1q_s32(r + j));
    }
    return vaddvq_s32(acc);
}

} // namespace

void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out)
{
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

} // namespace altsurg::kernels::neon

#endif
