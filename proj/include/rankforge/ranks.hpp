#pragma once

#include <vector>

#include "rankforge/config.hpp"
#include "rankforge/rectangles.hpp"

namespace rankforge {

/// Rank over the rationals, computed with fraction-free integer elimination
/// on arbitrary-precision values. No floating point is involved.
int real_rank(const BinaryMatrix& a);

/// Minimum number of monochromatic rectangles partitioning the 1-entries,
/// with one optimal partition as witness. The all-zero matrix has rank 0.
RankResult binary_rank(const BinaryMatrix& a, const SolverConfig& cfg = default_config());

/// Minimum number of monochromatic rectangles covering the 1-entries
/// (overlap allowed), with one optimal cover as witness.
RankResult boolean_rank(const BinaryMatrix& a, const SolverConfig& cfg = default_config());

/// All inclusion-maximal all-ones rectangles, each once, in canonical order.
std::vector<Rectangle> enumerate_maximal_rectangles(const BinaryMatrix& a);

/// Every partition of the 1-entries into exactly k rectangles, deduplicated
/// up to rectangle order, in canonical order. Empty when infeasible.
std::vector<RectangleSolution> partition_solutions(const BinaryMatrix& a, int k,
                                                   const SolverConfig& cfg = default_config());

/// Every cover of the 1-entries by exactly k distinct all-ones rectangles
/// (not restricted to maximal ones), deduplicated as rectangle sets, in
/// canonical order.
std::vector<RectangleSolution> cover_solutions(const BinaryMatrix& a, int k,
                                               const SolverConfig& cfg = default_config());

/// Communication-style bounds: log2 of the combinatorial ranks.
struct CcBounds {
    double d_lower = 0.0;  // log2(minimum partition size), lower bound flavour
    double n_exact = 0.0;  // log2(minimum cover size)
    int partition_rank = 0;
    int cover_rank = 0;
};

CcBounds cc_bounds(const BinaryMatrix& a, const SolverConfig& cfg = default_config());

/// Greedy fooling-set size: 1-cells no two of which fit in one rectangle.
/// A valid lower bound for both combinatorial ranks; quality is best effort.
int fooling_set_bound(const BinaryMatrix& a);

}  // namespace rankforge
