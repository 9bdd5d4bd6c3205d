#include "altsurg/kernels.hpp"

#include <cassert>

namespace altsurg::kernels {

void PackedVectors::reset(int cols_)
{
    rows = 0;
    cols = cols_;
    stride = (cols_ + 7) & ~7;
    data.clear();
}

void PackedVectors::push_row(const int32_t* v)
{
    data.resize(data.size() + stride, 0);
    int32_t* dst = data.data() + static_cast<size_t>(rows) * stride;
    for (int i = 0; i < cols; ++i) dst[i] = v[i];
    ++rows;
}

namespace scalar {

void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out)
{
    for (int i = 0; i < m.rows; ++i) {
        const int32_t* r = m.row(i);
        int32_t acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += q[j] * r[j];
        out[i] = acc;
    }
}

bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row)
{
    for (int i = 0; i < m.rows; ++i) {
        if (i == skip_row) continue;
        const int32_t* r = m.row(i);
        int32_t acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += q[j] * r[j];
        if (acc >= thr[i]) return false;
    }
    return true;
}

} // namespace scalar
} // namespace altsurg::kernels
