#include "altsurg/kernels.hpp"

#include "altsurg/errors.hpp"

#include <cstdlib>
#include <cstring>

namespace altsurg::kernels {

namespace {

using DotBatchFn = void (*)(const int32_t*, const PackedVectors&, int32_t*);
using AllBelowFn = bool (*)(const int32_t*, const PackedVectors&, const int32_t*, int);

struct Dispatch {
    Backend backend;
    DotBatchFn dot_batch;
    AllBelowFn all_dots_below;
};

Dispatch make_dispatch(Backend b)
{
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            return {Backend::Avx2, &avx2::dot_batch, &avx2::all_dots_below};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        case Backend::Neon:
            return {Backend::Neon, &neon::dot_batch, &neon::all_dots_below};
#endif
        default:
            return {Backend::Scalar, &scalar::dot_batch, &scalar::all_dots_below};
    }
}

Backend env_or_detected()
{
    if (const char* env = std::getenv("ALTSURG_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::Avx2)) return Backend::Avx2;
        if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::Neon)) return Backend::Neon;
    }
    return detect_backend();
}

Dispatch& dispatch()
{
    static Dispatch d = make_dispatch(env_or_detected());
    return d;
}

} // namespace

const char* backend_name(Backend b)
{
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_supported(Backend b)
{
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend detect_backend()
{
    if (backend_supported(Backend::Avx2)) return Backend::Avx2;
    if (backend_supported(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b)
{
    if (!backend_supported(b)) fail(ErrorCode::PreconditionViolation, "SIMD backend not supported on this CPU");
    dispatch() = make_dispatch(b);
}

void dot_batch(const int32_t* q, const PackedVectors& m, int32_t* out)
{
    dispatch().dot_batch(q, m, out);
}

bool all_dots_below(const int32_t* q, const PackedVectors& m, const int32_t* thr, int skip_row)
{
    return dispatch().all_dots_below(q, m, thr, skip_row);
}

} // namespace altsurg::kernels
