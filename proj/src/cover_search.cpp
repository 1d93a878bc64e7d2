#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rankforge/errors.hpp"
#include "search_internal.hpp"

namespace rankforge::detail {

namespace {

// Bitset over the 1-cell list.
struct CellMask {
    std::vector<std::uint64_t> w;

    explicit CellMask(std::size_t cells) : w((cells + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    void or_with(const CellMask& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    bool covers(const CellMask& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t x : w) n += std::popcount(x);
        return n;
    }
    bool operator==(const CellMask&) const = default;
};

struct CoverContext {
    const BitGrid& g;
    std::vector<RectMask> rects;
    std::vector<CellMask> rect_cells;
    std::vector<std::vector<int>> covering;  // per 1-cell: rectangle indices
    CellMask full;
    std::size_t max_rect_cells = 0;

    CoverContext(const BitGrid& grid, const std::vector<RectMask>& rs)
        : g(grid), rects(rs), full(grid.ones.size()) {
        std::vector<std::vector<int>> cell_at(g.n, std::vector<int>(g.m, -1));
        for (std::size_t i = 0; i < g.ones.size(); ++i) {
            cell_at[g.ones[i].first][g.ones[i].second] = (int)i;
            full.set(i);
        }
        covering.resize(g.ones.size());
        rect_cells.reserve(rects.size());
        for (std::size_t idx = 0; idx < rects.size(); ++idx) {
            CellMask mask(g.ones.size());
            std::uint64_t rr = rects[idx].rows;
            while (rr) {
                int r = std::countr_zero(rr);
                rr &= rr - 1;
                std::uint64_t cc = rects[idx].cols;
                while (cc) {
                    int c = std::countr_zero(cc);
                    cc &= cc - 1;
                    int cell = cell_at[r][c];
                    mask.set(cell);
                    covering[cell].push_back((int)idx);
                }
            }
            max_rect_cells = std::max(max_rect_cells, mask.count());
            rect_cells.push_back(std::move(mask));
        }
    }

    int first_uncovered(const CellMask& covered) const {
        for (std::size_t i = 0; i < covered.w.size(); ++i) {
            std::uint64_t free = full.w[i] & ~covered.w[i];
            if (free) return (int)(i * 64 + std::countr_zero(free));
        }
        return -1;
    }

    // Fail-first branching cell: fewest rectangles cover it.
    int scarcest_uncovered(const CellMask& covered) const {
        int best = -1;
        std::size_t best_options = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < g.ones.size(); ++i) {
            if (covered.get(i)) continue;
            if (covering[i].size() < best_options) {
                best_options = covering[i].size();
                best = (int)i;
            }
        }
        return best;
    }
};

int greedy_cover_size(const CoverContext& ctx) {
    CellMask covered(ctx.g.ones.size());
    int used = 0;
    while (!(covered == ctx.full)) {
        std::size_t best_gain = 0;
        int best_idx = -1;
        for (std::size_t idx = 0; idx < ctx.rects.size(); ++idx) {
            std::size_t gain = 0;
            for (std::size_t w = 0; w < covered.w.size(); ++w)
                gain += std::popcount(ctx.rect_cells[idx].w[w] & ~covered.w[w]);
            if (gain > best_gain) {
                best_gain = gain;
                best_idx = (int)idx;
            }
        }
        if (best_idx < 0) throw InvariantViolation("greedy cover ran out of rectangles");
        covered.or_with(ctx.rect_cells[best_idx]);
        ++used;
    }
    return used;
}

class CoverBnb {
  public:
    CoverBnb(const CoverContext& ctx, std::atomic<int>* shared_best, int lower)
        : ctx_(ctx), shared_best_(shared_best), lower_(lower) {}

    void run(CellMask covered, int depth) { dfs(covered, depth); }

  private:
    int best() const { return shared_best_->load(std::memory_order_relaxed); }

    void dfs(const CellMask& covered, int depth) {
        int cur_best = best();
        if (cur_best <= lower_) return;
        if (depth >= cur_best) return;
        if (covered == ctx_.full) {
            int prev = shared_best_->load(std::memory_order_relaxed);
            while (depth < prev && !shared_best_->compare_exchange_weak(prev, depth)) {
            }
            return;
        }
        std::size_t uncovered = ctx_.full.count() - covered.count();
        std::size_t slots = (std::size_t)(cur_best - 1 - depth);
        if (slots * ctx_.max_rect_cells < uncovered) return;
        int cell = ctx_.scarcest_uncovered(covered);
        for (int idx : ctx_.covering[cell]) {
            CellMask next = covered;
            next.or_with(ctx_.rect_cells[idx]);
            dfs(next, depth + 1);
        }
    }

    const CoverContext& ctx_;
    std::atomic<int>* shared_best_;
    int lower_;
};

}  // namespace

std::vector<RectMask> maximal_rects(const BitGrid& g) {
    // Column sets of maximal rectangles are exactly the nonzero intersection
    // closures of the row masks; the row set is then determined.
    std::vector<std::uint64_t> work;
    std::set<std::uint64_t> seen;
    for (int r = 0; r < g.n; ++r)
        if (g.row_mask[r] && seen.insert(g.row_mask[r]).second) work.push_back(g.row_mask[r]);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t x = work[i] & work[j];
            if (x && seen.insert(x).second) work.push_back(x);
        }
    std::vector<RectMask> out;
    out.reserve(work.size());
    for (std::uint64_t cols : seen) {
        std::uint64_t rows = 0;
        for (int r = 0; r < g.n; ++r)
            if ((g.row_mask[r] & cols) == cols) rows |= std::uint64_t(1) << r;
        out.push_back({rows, cols});
    }
    return out;
}

std::vector<RectMask> all_rects(const BitGrid& g) {
    constexpr std::size_t kRectCap = 4'000'000;
    std::vector<RectMask> out;
    // Depth-first over row subsets with a nonzero running column
    // intersection, then every nonempty column subset.
    struct Walker {
        const BitGrid& g;
        std::vector<RectMask>& out;
        void rec(int next_row, std::uint64_t rows, std::uint64_t common) {
            if (rows) {
                std::uint64_t sub = common;
                while (true) {
                    if (sub) out.push_back({rows, sub});
                    if (out.size() > kRectCap)
                        throw ResourceLimitError("rectangle enumeration exceeds the cap");
                    if (!sub) break;
                    sub = (sub - 1) & common;
                }
            }
            for (int r = next_row; r < g.n; ++r) {
                std::uint64_t next = (rows ? common : ~std::uint64_t(0)) & g.row_mask[r];
                if (next) rec(r + 1, rows | (std::uint64_t(1) << r), next);
            }
        }
    };
    Walker{g, out}.rec(0, 0, 0);
    return out;
}

int min_cover_size(const BitGrid& g, const std::vector<RectMask>& rects, int lower, int threads) {
    CoverContext ctx(g, rects);
    std::atomic<int> best{greedy_cover_size(ctx)};
    if (best.load() <= lower) return best.load();

    int t = resolve_threads(threads);
    CellMask empty(g.ones.size());
    if (t <= 1 || g.ones.size() < 20) {
        CoverBnb(ctx, &best, lower).run(empty, 0);
        return best.load();
    }

    // One- or two-level frontier, then independent subtree searches sharing
    // the incumbent value. The optimum is scheduling-independent.
    struct Node {
        CellMask covered;
        int depth;
    };
    std::vector<Node> frontier;
    int cell0 = ctx.scarcest_uncovered(empty);
    for (int idx : ctx.covering[cell0]) {
        CellMask cov = empty;
        cov.or_with(ctx.rect_cells[idx]);
        frontier.push_back({cov, 1});
    }
    if ((int)frontier.size() < 2 * t) {
        std::vector<Node> deeper;
        for (const Node& node : frontier) {
            if (node.covered == ctx.full) {
                deeper.push_back(node);
                continue;
            }
            int cell = ctx.scarcest_uncovered(node.covered);
            for (int idx : ctx.covering[cell]) {
                CellMask cov = node.covered;
                cov.or_with(ctx.rect_cells[idx]);
                deeper.push_back({cov, node.depth + 1});
            }
        }
        frontier = std::move(deeper);
    }
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (long long i = 0; i < (long long)frontier.size(); ++i) {
        if (frontier[i].covered == ctx.full) {
            int prev = best.load(std::memory_order_relaxed);
            while (frontier[i].depth < prev &&
                   !best.compare_exchange_weak(prev, frontier[i].depth)) {
            }
            continue;
        }
        CoverBnb(ctx, &best, lower).run(frontier[i].covered, frontier[i].depth);
    }
    return best.load();
}

std::optional<std::vector<RectMask>> find_cover(const BitGrid& g, const std::vector<RectMask>& rects,
                                                int k) {
    CoverContext ctx(g, rects);
    std::vector<int> chosen;
    CellMask covered(g.ones.size());

    // Canonical witness: branch on the row-major first uncovered cell and
    // try rectangles in list order.
    std::function<bool()> rec = [&]() -> bool {
        if (covered == ctx.full) return true;
        if ((int)chosen.size() == k) return false;
        std::size_t uncovered = ctx.full.count() - covered.count();
        if ((std::size_t)(k - chosen.size()) * ctx.max_rect_cells < uncovered) return false;
        int cell = ctx.first_uncovered(covered);
        for (int idx : ctx.covering[cell]) {
            CellMask saved = covered;
            covered.or_with(ctx.rect_cells[idx]);
            chosen.push_back(idx);
            if (rec()) return true;
            chosen.pop_back();
            covered = saved;
        }
        return false;
    };
    if (!rec()) return std::nullopt;
    std::vector<RectMask> out;
    out.reserve(chosen.size());
    for (int idx : chosen) out.push_back(ctx.rects[idx]);
    return out;
}

std::vector<std::vector<RectMask>> all_covers(const BitGrid& g, const std::vector<RectMask>& rects,
                                              int k) {
    CoverContext ctx(g, rects);
    std::set<std::vector<int>> sets;
    std::vector<int> chosen;

    std::function<void(const CellMask&, int)> rec = [&](const CellMask& covered, int fill_from) {
        if ((int)chosen.size() == k) {
            if (covered == ctx.full) {
                std::vector<int> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                sets.insert(std::move(sorted));
            }
            return;
        }
        if (covered == ctx.full) {
            // Redundant members are allowed above the cover number; add them
            // in increasing index order so each completion appears once.
            for (int idx = fill_from; idx < (int)ctx.rects.size(); ++idx) {
                if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
                chosen.push_back(idx);
                rec(covered, idx + 1);
                chosen.pop_back();
            }
            return;
        }
        std::size_t uncovered = ctx.full.count() - covered.count();
        if ((std::size_t)(k - chosen.size()) * ctx.max_rect_cells < uncovered) return;
        int cell = ctx.first_uncovered(covered);
        for (int idx : ctx.covering[cell]) {
            if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
            CellMask next = covered;
            next.or_with(ctx.rect_cells[idx]);
            chosen.push_back(idx);
            rec(next, 0);
            chosen.pop_back();
        }
    };
    rec(CellMask(g.ones.size()), 0);

    std::vector<std::vector<RectMask>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<RectMask> sol;
        sol.reserve(s.size());
        for (int idx : s) sol.push_back(ctx.rects[idx]);
        out.push_back(std::move(sol));
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> cover_support_sets(const BitGrid& g, int k) {
    // A row-support family is realizable by an optimal cover exactly when
    // widening every support to its full common-column rectangle covers all
    // 1-cells, so the search works on supports directly.
    std::vector<std::uint64_t> col_support(g.m, 0);
    for (int r = 0; r < g.n; ++r) {
        std::uint64_t cc = g.row_mask[r];
        while (cc) {
            int c = std::countr_zero(cc);
            cc &= cc - 1;
            col_support[c] |= std::uint64_t(1) << r;
        }
    }
    std::vector<std::vector<int>> cell_at(g.n, std::vector<int>(g.m, -1));
    CellMask full(g.ones.size());
    for (std::size_t i = 0; i < g.ones.size(); ++i) {
        cell_at[g.ones[i].first][g.ones[i].second] = (int)i;
        full.set(i);
    }

    auto common_cols = [&](std::uint64_t support) {
        std::uint64_t common = ~std::uint64_t(0);
        std::uint64_t rr = support;
        while (rr) {
            int r = std::countr_zero(rr);
            rr &= rr - 1;
            common &= g.row_mask[r];
        }
        return common;
    };
    auto coverage = [&](std::uint64_t support, std::uint64_t common) {
        CellMask mask(g.ones.size());
        std::uint64_t rr = support;
        while (rr) {
            int r = std::countr_zero(rr);
            rr &= rr - 1;
            std::uint64_t cc = common;
            while (cc) {
                int c = std::countr_zero(cc);
                cc &= cc - 1;
                mask.set(cell_at[r][c]);
            }
        }
        return mask;
    };

    std::size_t max_cells = 1;
    for (const RectMask& rect : maximal_rects(g))
        max_cells = std::max(max_cells,
                             (std::size_t)std::popcount(rect.rows) * std::popcount(rect.cols));

    std::set<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> chosen;

    std::function<void(const CellMask&)> rec = [&](const CellMask& covered) {
        if ((int)chosen.size() == k) {
            if (covered == full) {
                std::vector<std::uint64_t> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                found.insert(std::move(sorted));
            }
            return;
        }
        if (covered == full) return;  // would contradict k being optimal
        std::size_t uncovered = full.count() - covered.count();
        if ((std::size_t)(k - chosen.size()) * max_cells < uncovered) return;
        int cell = -1;
        for (std::size_t i = 0; i < g.ones.size(); ++i)
            if (!covered.get(i)) {
                cell = (int)i;
                break;
            }
        auto [r, c] = g.ones[cell];
        // Next support: any row set containing r whose rows all share column c.
        std::uint64_t pool = col_support[c] & ~(std::uint64_t(1) << r);
        std::uint64_t sub = pool;
        while (true) {
            std::uint64_t support = sub | (std::uint64_t(1) << r);
            if (std::find(chosen.begin(), chosen.end(), support) == chosen.end()) {
                CellMask next = covered;
                next.or_with(coverage(support, common_cols(support)));
                chosen.push_back(support);
                rec(next);
                chosen.pop_back();
            }
            if (!sub) break;
            sub = (sub - 1) & pool;
        }
    };
    rec(CellMask(g.ones.size()));

    return {found.begin(), found.end()};
}

}  // namespace rankforge::detail
