#ifndef ALTSURG_KERNELS_HPP
#define ALTSURG_KERNELS_HPP

#include <cstdint>
#include <vector>

// Batched integer pairing kernels. The search spends nearly all of its matrix
// time computing dot products of one short int32 vector against a packed list
// of candidates, so these have a scalar reference implementation and SIMD
// variants selected at runtime. All variants must produce bit-identical
// results; SIMD is an optimization, never a semantic change.

namespace altsurg::kernels {

// Row-major list of vectors, row stride padded to a multiple of 8 lanes and
// zero-filled so vector loads never read garbage.
struct PackedVectors {
    int rows = 0;
    int cols = 0;
    int stride = 0;
    std::vector<int32_t> data;

    void reset(int cols_);
    void push_row(const int32_t* v);
    const int32_t* row(int i) const { return data.data() + static_cast<size_t>(i) * stride; }
    int32_t* row(int i) { return data.data() + static_cast<size_t>(i) * stride; }
};

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
// Best backend the current CPU supports.
Backend detect_backend();
// Active backend used by the dispatch wrappers below.
Backend active_backend();
// Force a backend (throws if unsupported on this CPU). Used by tests and the
// ALTSURG_SIMD=scalar|avx2|neon environment override.
void set_backend(Backend b);
bool backend_supported(Backend b);

// out[i] = q . M.row(i) for every row.
void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out);

// True iff q . M.row(i) < thr[i] for every row except skip_row.
bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row);

// Reference implementations, kept callable for equivalence tests.
namespace scalar {
void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out);
bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out);
bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row);
} // namespace avx2
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {
void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out);
bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row);
} // namespace neon
#endif

} // namespace altsurg::kernels

#endif
