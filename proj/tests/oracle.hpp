#pragma once

// Brute-force reference oracles for the combinatorial ranks. Deliberately
// naive: colorings are validated from scratch against the rectangle
// definition and covers are tried as plain subsets, so none of the solver's
// pruning, ordering, or propagation machinery is shared.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rankforge/matrix.hpp"

namespace oracle {

inline std::vector<std::pair<int, int>> one_cells(const rankforge::BinaryMatrix& a) {
    std::vector<std::pair<int, int>> ones;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) ones.emplace_back((int)r, (int)c);
    return ones;
}

// A coloring prefix is acceptable when, for every color, the row-set x
// column-set closure of its cells contains no 0-entry and no cell of a
// different color. Checked from scratch on every call.
inline bool coloring_valid(const rankforge::BinaryMatrix& a,
                           const std::vector<std::pair<int, int>>& ones,
                           const std::vector<int>& color, int assigned, int used) {
    for (int t = 0; t < used; ++t) {
        std::vector<int> rows, cols;
        for (int i = 0; i < assigned; ++i) {
            if (color[i] != t) continue;
            rows.push_back(ones[i].first);
            cols.push_back(ones[i].second);
        }
        for (int r : rows)
            for (int c : cols) {
                if (!a.get(r, c)) return false;
                for (int i = 0; i < assigned; ++i)
                    if (ones[i].first == r && ones[i].second == c && color[i] != t) return false;
            }
    }
    return true;
}

inline bool partition_feasible(const rankforge::BinaryMatrix& a,
                               const std::vector<std::pair<int, int>>& ones,
                               std::vector<int>& color, int assigned, int used, int k) {
    if (assigned == (int)ones.size()) return true;
    int options = used < k ? used + 1 : used;
    for (int t = 0; t < options; ++t) {
        color[assigned] = t;
        if (coloring_valid(a, ones, color, assigned + 1, std::max(used, t + 1)) &&
            partition_feasible(a, ones, color, assigned + 1, std::max(used, t + 1), k))
            return true;
    }
    color[assigned] = -1;
    return false;
}

inline int partition_rank(const rankforge::BinaryMatrix& a) {
    auto ones = one_cells(a);
    if (ones.empty()) return 0;
    for (int k = 1; k <= (int)ones.size(); ++k) {
        std::vector<int> color(ones.size(), -1);
        if (partition_feasible(a, ones, color, 0, 0, k)) return k;
    }
    return (int)ones.size();
}

struct Rect {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint64_t cells = 0;  // bitmask over the one-cell list
};

// Every all-ones rectangle, found by trying every nonempty row subset and
// every nonempty subset of its common columns. Requires small matrices.
inline std::vector<Rect> all_rectangles(const rankforge::BinaryMatrix& a, bool maximal_only) {
    auto ones = one_cells(a);
    int n = (int)a.rows();
    std::vector<std::uint64_t> row_mask(n, 0);
    for (int r = 0; r < n; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) row_mask[r] |= std::uint64_t(1) << c;

    std::vector<Rect> rects;
    for (std::uint64_t rows = 1; rows < (std::uint64_t(1) << n); ++rows) {
        std::uint64_t common = ~std::uint64_t(0);
        for (int r = 0; r < n; ++r)
            if ((rows >> r) & 1) common &= row_mask[r];
        common &= (a.cols() >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << a.cols()) - 1);
        if (!common) continue;
        std::uint64_t sub = common;
        while (sub) {
            std::uint64_t cells = 0;
            for (std::size_t i = 0; i < ones.size(); ++i)
                if (((rows >> ones[i].first) & 1) && ((sub >> ones[i].second) & 1))
                    cells |= std::uint64_t(1) << i;
            rects.push_back({rows, sub, cells});
            sub = (sub - 1) & common;
        }
    }
    if (maximal_only) {
        std::vector<Rect> kept;
        for (const Rect& r : rects) {
            bool dominated = false;
            for (const Rect& other : rects)
                if ((r.cells & ~other.cells) == 0 && other.cells != r.cells) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(r);
        }
        return kept;
    }
    return rects;
}

inline bool cover_with(const std::vector<Rect>& rects, std::uint64_t covered, std::uint64_t all,
                       int k, std::size_t start) {
    if (covered == all) return true;
    if (k == 0) return false;
    for (std::size_t i = start; i < rects.size(); ++i)
        if (cover_with(rects, covered | rects[i].cells, all, k - 1, i + 1)) return true;
    return false;
}

inline int cover_rank(const rankforge::BinaryMatrix& a, bool maximal_only) {
    auto ones = one_cells(a);
    if (ones.empty()) return 0;
    auto rects = all_rectangles(a, maximal_only);
    std::uint64_t all =
        ones.size() >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << ones.size()) - 1);
    for (int k = 1; k <= (int)ones.size(); ++k)
        if (cover_with(rects, 0, all, k, 0)) return k;
    return (int)ones.size();
}

inline void partition_count_rec(const rankforge::BinaryMatrix& a,
                                const std::vector<std::pair<int, int>>& ones,
                                std::vector<int>& color, int assigned, int used, int k,
                                long long& count) {
    if (assigned == (int)ones.size()) {
        if (used == k) ++count;
        return;
    }
    int options = used < k ? used + 1 : used;
    for (int t = 0; t < options; ++t) {
        color[assigned] = t;
        if (coloring_valid(a, ones, color, assigned + 1, std::max(used, t + 1)))
            partition_count_rec(a, ones, color, assigned + 1, std::max(used, t + 1), k, count);
    }
    color[assigned] = -1;
}

// Number of distinct partitions into exactly k rectangles: colors indexed by
// first use make one coloring per partition.
inline long long partition_count(const rankforge::BinaryMatrix& a, int k) {
    auto ones = one_cells(a);
    if (ones.empty()) return k == 0 ? 1 : 0;
    std::vector<int> color(ones.size(), -1);
    long long count = 0;
    partition_count_rec(a, ones, color, 0, 0, k, count);
    return count;
}

// Number of k-subsets of all rectangles whose union is every 1-cell.
inline long long cover_count(const rankforge::BinaryMatrix& a, int k) {
    auto ones = one_cells(a);
    if (ones.empty()) return k == 0 ? 1 : 0;
    auto rects = all_rectangles(a, false);
    std::uint64_t all =
        ones.size() >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << ones.size()) - 1);
    long long count = 0;
    std::function<void(std::size_t, std::uint64_t, int)> rec = [&](std::size_t start,
                                                                   std::uint64_t covered,
                                                                   int left) {
        if (left == 0) {
            if (covered == all) ++count;
            return;
        }
        for (std::size_t i = start; i < rects.size(); ++i)
            rec(i + 1, covered | rects[i].cells, left - 1);
    };
    rec(0, 0, k);
    return count;
}

}  // namespace oracle
