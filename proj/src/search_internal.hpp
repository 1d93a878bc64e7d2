#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge::detail {

/// Word-packed view of a matrix for the search kernels. Valid for matrices
/// with at most 64 rows and 64 columns; callers guard with the size cap.
struct BitGrid {
    int n = 0;
    int m = 0;
    std::vector<std::uint64_t> row_mask;        // per row: bitmask over columns
    std::vector<std::pair<int, int>> ones;      // 1-cells in row-major order

    explicit BitGrid(const BinaryMatrix& a);
};

/// Rectangle as a (row bitmask, column bitmask) pair.
struct RectMask {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;

    bool operator==(const RectMask&) const = default;
};

/// First (in canonical depth-first order) partition of the 1-cells into at
/// most k rectangles, or nothing. Identical result for every thread count.
std::optional<std::vector<RectMask>> find_partition(const BitGrid& g, int k, int threads);

/// All partitions into exactly k rectangles, as unordered rectangle sets.
std::vector<std::vector<RectMask>> all_partitions(const BitGrid& g, int k, int threads);

/// All inclusion-maximal all-ones rectangles (unordered).
std::vector<RectMask> maximal_rects(const BitGrid& g);

/// All all-ones rectangles, maximal or not.
std::vector<RectMask> all_rects(const BitGrid& g);

/// Minimum number of rectangles from `rects` covering every 1-cell.
/// `lower` is a known valid lower bound, `upper_hint` a known feasible size.
int min_cover_size(const BitGrid& g, const std::vector<RectMask>& rects, int lower, int threads);

/// First cover of size at most k in canonical depth-first order.
std::optional<std::vector<RectMask>> find_cover(const BitGrid& g, const std::vector<RectMask>& rects,
                                                int k);

/// All covers by exactly k distinct rectangles from `rects`, deduplicated as
/// sets. Redundant members are allowed when k exceeds the cover number.
std::vector<std::vector<RectMask>> all_covers(const BitGrid& g, const std::vector<RectMask>& rects,
                                              int k);

/// Distinct row supports of optimal-size covers: every set of k row masks
/// that can be completed to a cover of the 1-cells by widening each support
/// to its full common-column rectangle.
std::vector<std::vector<std::uint64_t>> cover_support_sets(const BitGrid& g, int k);

int resolve_threads(int requested);

}  // namespace rankforge::detail
