#ifndef ALTSURG_INTMATH_HPP
#define ALTSURG_INTMATH_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace altsurg {

// Floor of sqrt(x) by Newton iteration on integers. No floating point.
int64_t isqrt64(int64_t x);

// Largest b >= 0 with b*b*den <= num (num, den >= 0, den > 0).
int64_t isqrt_ratio(int64_t num, int64_t den);

// Exact determinant of a square integer matrix (Bareiss, fraction-free).
// Intermediate values are minors; __int128 accumulation keeps rank <= 16
// Gram matrices of short vectors exact.
int64_t det_bareiss(std::vector<std::vector<int64_t>> m);

// Incremental exact rank tracker over Q for small integer vectors.
class RankTracker {
  public:
    explicit RankTracker(int dim) : dim_(dim) {}
    // Returns true (and absorbs the vector) if v is independent of the rows so far.
    bool try_add(const int32_t* v);
    int rank() const { return static_cast<int>(rows_.size()); }
    void reset() { rows_.clear(); }

    // Snapshot/restore for DFS backtracking.
    struct Mark { size_t nrows; };
    Mark mark() const { return {rows_.size()}; }
    void rollback(Mark m) { rows_.resize(m.nrows); }

  private:
    int dim_;
    std::vector<std::vector<__int128>> rows_; // row echelon, leading entries nonzero
};

uint64_t fnv1a64(std::string_view s);

} // namespace altsurg

#endif
