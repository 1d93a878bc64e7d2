#include <algorithm>
#include <bit>
#include <cmath>

#include "rankforge/ranks.hpp"
#include "search_internal.hpp"

namespace rankforge {

namespace {

void check_limits(const BinaryMatrix& a, const SolverConfig& cfg) {
    if (a.cells() > cfg.max_cells)
        throw ResourceLimitError("matrix exceeds the configured cell cap");
    if (a.rows() > 64 || a.cols() > 64)
        throw ResourceLimitError("solvers support at most 64 rows and 64 columns");
}

Rectangle to_rectangle(const detail::RectMask& mask) {
    Rectangle rect;
    std::uint64_t rr = mask.rows;
    while (rr) {
        rect.rows.push_back(std::countr_zero(rr));
        rr &= rr - 1;
    }
    std::uint64_t cc = mask.cols;
    while (cc) {
        rect.cols.push_back(std::countr_zero(cc));
        cc &= cc - 1;
    }
    return rect;
}

RectangleSolution to_solution(const std::vector<detail::RectMask>& masks, SolutionKind kind,
                              const BinaryMatrix& a) {
    RectangleSolution sol;
    sol.kind = kind;
    sol.n_rows = a.rows();
    sol.n_cols = a.cols();
    sol.rectangles.reserve(masks.size());
    for (const detail::RectMask& m : masks) sol.rectangles.push_back(to_rectangle(m));
    std::sort(sol.rectangles.begin(), sol.rectangles.end());
    return sol;
}

std::vector<RectangleSolution> to_solutions(std::vector<std::vector<detail::RectMask>> raw,
                                            SolutionKind kind, const BinaryMatrix& a) {
    std::vector<RectangleSolution> out;
    out.reserve(raw.size());
    for (const auto& masks : raw) out.push_back(to_solution(masks, kind, a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<detail::RectMask> sorted_canonical(std::vector<detail::RectMask> rects) {
    std::vector<std::pair<Rectangle, detail::RectMask>> keyed;
    keyed.reserve(rects.size());
    for (const detail::RectMask& m : rects) keyed.emplace_back(to_rectangle(m), m);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<detail::RectMask> out;
    out.reserve(rects.size());
    for (auto& [key, m] : keyed) out.push_back(m);
    return out;
}

// Connected components of the 1-cells under "shares a row or a column".
// No rectangle crosses a component boundary, so every rank is additive over
// components and each component can be solved on its own submatrix.
struct OneComponent {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

std::vector<OneComponent> one_components(const BinaryMatrix& a) {
    std::size_t n = a.rows(), m = a.cols();
    std::vector<std::size_t> parent(n + m);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (a.get(r, c)) parent[find(r)] = find(n + c);

    std::vector<OneComponent> comps;
    std::vector<int> index(n + m, -1);
    for (std::size_t r = 0; r < n; ++r) {
        bool has_one = false;
        for (std::size_t c = 0; c < m; ++c) has_one |= a.get(r, c);
        if (!has_one) continue;
        std::size_t root = find(r);
        if (index[root] < 0) {
            index[root] = (int)comps.size();
            comps.emplace_back();
        }
        comps[index[root]].rows.push_back(r);
    }
    for (std::size_t c = 0; c < m; ++c) {
        bool has_one = false;
        for (std::size_t r = 0; r < n; ++r) has_one |= a.get(r, c);
        if (!has_one) continue;
        comps[index[find(n + c)]].cols.push_back(c);
    }
    return comps;
}

BinaryMatrix submatrix(const BinaryMatrix& a, const OneComponent& comp) {
    BinaryMatrix::Builder b(comp.rows.size(), comp.cols.size());
    for (std::size_t i = 0; i < comp.rows.size(); ++i)
        for (std::size_t j = 0; j < comp.cols.size(); ++j)
            if (a.get(comp.rows[i], comp.cols[j])) b.set(i, j);
    return b.build();
}

RankResult solve_by_components(const BinaryMatrix& a, SolutionKind kind,
                               RankResult (*solver)(const BinaryMatrix&, const SolverConfig&),
                               const SolverConfig& cfg) {
    std::vector<OneComponent> comps = one_components(a);
    RankResult total{0, RectangleSolution{kind, {}, a.rows(), a.cols()}};
    for (const OneComponent& comp : comps) {
        RankResult part = solver(submatrix(a, comp), cfg);
        total.rank += part.rank;
        for (const Rectangle& rect : part.witness->rectangles) {
            Rectangle mapped;
            for (int r : rect.rows) mapped.rows.push_back((int)comp.rows[r]);
            for (int c : rect.cols) mapped.cols.push_back((int)comp.cols[c]);
            total.witness->rectangles.push_back(std::move(mapped));
        }
    }
    std::sort(total.witness->rectangles.begin(), total.witness->rectangles.end());
    return total;
}

}  // namespace

int fooling_set_bound(const BinaryMatrix& a) {
    // Greedy set of 1-cells no two of which fit in one rectangle: for cells
    // (r1,c1),(r2,c2) at least one of (r1,c2),(r2,c1) is a 0.
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a.get(r, c)) continue;
            bool ok = true;
            for (auto [r2, c2] : chosen)
                if (a.get(r, c2) && a.get(r2, c)) {
                    ok = false;
                    break;
                }
            if (ok) chosen.emplace_back(r, c);
        }
    }
    return (int)chosen.size();
}

RankResult binary_rank(const BinaryMatrix& a, const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero())
        return {0, RectangleSolution{SolutionKind::Partition, {}, a.rows(), a.cols()}};
    if (one_components(a).size() > 1)
        return solve_by_components(a, SolutionKind::Partition, &binary_rank, cfg);
    detail::BitGrid grid(a);
    int lb = std::max({1, real_rank(a), fooling_set_bound(a)});
    for (int k = lb; k <= (int)a.ones_count(); ++k) {
        auto found = detail::find_partition(grid, k, cfg.threads);
        if (found) return {k, to_solution(*found, SolutionKind::Partition, a)};
    }
    throw InvariantViolation("no partition found up to the count of 1-entries");
}

RankResult boolean_rank(const BinaryMatrix& a, const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero())
        return {0, RectangleSolution{SolutionKind::Cover, {}, a.rows(), a.cols()}};
    if (one_components(a).size() > 1)
        return solve_by_components(a, SolutionKind::Cover, &boolean_rank, cfg);
    detail::BitGrid grid(a);
    auto rects = sorted_canonical(detail::maximal_rects(grid));
    int lb = std::max(1, fooling_set_bound(a));
    int value = detail::min_cover_size(grid, rects, lb, cfg.threads);
    auto witness = detail::find_cover(grid, rects, value);
    if (!witness) throw InvariantViolation("optimal cover size has no witness");
    return {value, to_solution(*witness, SolutionKind::Cover, a)};
}

std::vector<Rectangle> enumerate_maximal_rectangles(const BinaryMatrix& a) {
    if (a.is_all_zero()) return {};
    if (a.rows() > 64 || a.cols() > 64)
        throw ResourceLimitError("solvers support at most 64 rows and 64 columns");
    detail::BitGrid grid(a);
    std::vector<Rectangle> out;
    for (const detail::RectMask& m : detail::maximal_rects(grid)) out.push_back(to_rectangle(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RectangleSolution> partition_solutions(const BinaryMatrix& a, int k,
                                                   const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero()) {
        if (k == 0) return {RectangleSolution{SolutionKind::Partition, {}, a.rows(), a.cols()}};
        return {};
    }
    if (k <= 0) return {};
    return to_solutions(detail::all_partitions(detail::BitGrid(a), k, cfg.threads),
                        SolutionKind::Partition, a);
}

std::vector<RectangleSolution> cover_solutions(const BinaryMatrix& a, int k,
                                               const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero()) {
        if (k == 0) return {RectangleSolution{SolutionKind::Cover, {}, a.rows(), a.cols()}};
        return {};
    }
    if (k <= 0) return {};
    detail::BitGrid grid(a);
    auto rects = sorted_canonical(detail::all_rects(grid));
    return to_solutions(detail::all_covers(grid, rects, k), SolutionKind::Cover, a);
}

CcBounds cc_bounds(const BinaryMatrix& a, const SolverConfig& cfg) {
    if (a.is_all_zero()) throw InvalidArgument("log bounds are undefined for the all-zero matrix");
    CcBounds out;
    out.partition_rank = binary_rank(a, cfg).rank;
    out.cover_rank = boolean_rank(a, cfg).rank;
    out.d_lower = std::log2((double)out.partition_rank);
    out.n_exact = std::log2((double)out.cover_rank);
    return out;
}

}  // namespace rankforge
