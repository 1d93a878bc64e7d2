#include <atomic>
#include <bit>
#include <cstring>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "search_internal.hpp"

namespace rankforge::detail {

namespace {
constexpr long long kNoIndex = std::numeric_limits<long long>::max();

void atomic_min(std::atomic<long long>& target, long long value) {
    long long cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}
}  // namespace

int resolve_threads(int requested) {
#ifdef _OPENMP
    int hw = omp_get_max_threads();
    if (requested <= 0) return hw;
    return requested < hw ? requested : hw;
#else
    (void)requested;
    return 1;
#endif
}

BitGrid::BitGrid(const BinaryMatrix& a) : n((int)a.rows()), m((int)a.cols()) {
    row_mask.resize(n);
    for (int r = 0; r < n; ++r) {
        row_mask[r] = a.row_mask(r);
        for (int c = 0; c < m; ++c)
            if (a.get(r, c)) ones.emplace_back(r, c);
    }
}

namespace {

// Class under construction: the rows and columns touched so far plus the
// columns every touched row still has a 1 in.
struct Cls {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint64_t allowed = 0;
};

struct PState {
    std::vector<std::int16_t> grid;  // n*m, -1 unassigned
    std::vector<Cls> cls;
    int used = 0;
    int pos = 0;
};

// Depth-first coloring of 1-cells in row-major order. A color class always
// satisfies cells(class) == rows(class) x cols(class) restricted to the
// assigned prefix, so complete colorings are exactly the rectangle
// partitions. A new color is only opened as the next unused index, which
// makes every partition appear exactly once.
class PartitionSearch {
  public:
    PartitionSearch(const BitGrid& g, int k) : g_(g), k_(k) {}

    PState root() const {
        PState st;
        st.grid.assign((std::size_t)g_.n * g_.m, -1);
        st.cls.resize(k_);
        return st;
    }

    void set_cancel(const std::atomic<long long>* best, long long own_index) {
        cancel_best_ = best;
        own_index_ = own_index;
    }

    bool run_first(PState& st) {
        solution_.clear();
        aborted_ = false;
        return dfs_first(st);
    }

    const std::vector<RectMask>& solution() const { return solution_; }
    bool aborted() const { return aborted_; }

    void run_all(PState& st, std::vector<std::vector<RectMask>>& out) {
        out_all_ = &out;
        dfs_all(st);
        out_all_ = nullptr;
    }

    struct Item {
        bool solved = false;
        std::vector<RectMask> solution;
        PState state;
    };

    // Runs the same search but stops after `budget` free choices, collecting
    // the frontier (and any solutions met on the way) in visit order.
    void expand(PState& st, int budget, bool exact_k, std::vector<Item>& items) {
        expand_rec(st, budget, exact_k, items);
    }

  private:
    std::vector<RectMask> extract(const PState& st) const {
        std::vector<RectMask> rects(st.used);
        for (int t = 0; t < st.used; ++t) rects[t] = {st.cls[t].rows, st.cls[t].cols};
        return rects;
    }

    bool cancelled() {
        if (!cancel_best_) return false;
        if ((++tick_ & 1023) != 0) return false;
        return cancel_best_->load(std::memory_order_relaxed) < own_index_;
    }

    // -1: no class forces the cell, -2: two classes claim it (dead end).
    int forced_class(const PState& st, int r, int c) const {
        int forced = -1;
        for (int t = 0; t < st.used; ++t)
            if ((st.cls[t].rows >> r) & 1 && (st.cls[t].cols >> c) & 1) {
                if (forced >= 0) return -2;
                forced = t;
            }
        return forced;
    }

    bool can_join(const PState& st, int t, int r, int c) const {
        const Cls& cl = st.cls[t];
        if (!((cl.allowed >> c) & 1)) return false;
        if (cl.cols & ~g_.row_mask[r]) return false;
        // Cells the grown cross adds were assigned earlier; they must
        // already carry this color.
        std::uint64_t rr = cl.rows & ~(std::uint64_t(1) << r);
        while (rr) {
            int r2 = std::countr_zero(rr);
            rr &= rr - 1;
            if (st.grid[(std::size_t)r2 * g_.m + c] != t) return false;
        }
        std::uint64_t cc = cl.cols & ((std::uint64_t(1) << c) - 1);
        while (cc) {
            int c2 = std::countr_zero(cc);
            cc &= cc - 1;
            if (st.grid[(std::size_t)r * g_.m + c2] != t) return false;
        }
        return true;
    }

    template <typename Recurse>
    bool step(PState& st, Recurse&& recurse, bool stop_on_true) {
        auto [r, c] = g_.ones[st.pos];
        std::size_t cell = (std::size_t)r * g_.m + c;
        int forced = forced_class(st, r, c);
        if (forced == -2) return false;
        if (forced >= 0) {
            st.grid[cell] = (std::int16_t)forced;
            ++st.pos;
            bool hit = recurse();
            --st.pos;
            st.grid[cell] = -1;
            return hit;
        }
        for (int t = 0; t < st.used; ++t) {
            if (!can_join(st, t, r, c)) continue;
            Cls saved = st.cls[t];
            st.cls[t].rows |= std::uint64_t(1) << r;
            st.cls[t].cols |= std::uint64_t(1) << c;
            st.cls[t].allowed &= g_.row_mask[r];
            st.grid[cell] = (std::int16_t)t;
            ++st.pos;
            bool hit = recurse();
            --st.pos;
            st.grid[cell] = -1;
            st.cls[t] = saved;
            if (hit && stop_on_true) return true;
        }
        if (st.used < k_) {
            int t = st.used++;
            st.cls[t] = {std::uint64_t(1) << r, std::uint64_t(1) << c, g_.row_mask[r]};
            st.grid[cell] = (std::int16_t)t;
            ++st.pos;
            bool hit = recurse();
            --st.pos;
            st.grid[cell] = -1;
            --st.used;
            if (hit && stop_on_true) return true;
        }
        return false;
    }

    bool dfs_first(PState& st) {
        if (cancelled()) {
            aborted_ = true;
            return false;
        }
        if (st.pos == (int)g_.ones.size()) {
            solution_ = extract(st);
            return true;
        }
        return step(
            st, [&] { return !aborted_ && dfs_first(st); }, true);
    }

    bool dfs_all(PState& st) {
        if (st.pos == (int)g_.ones.size()) {
            if (st.used == k_) out_all_->push_back(extract(st));
            return false;
        }
        step(
            st, [&] { return dfs_all(st); }, false);
        return false;
    }

    void expand_rec(PState& st, int budget, bool exact_k, std::vector<Item>& items) {
        if (st.pos == (int)g_.ones.size()) {
            if (!exact_k || st.used == k_) items.push_back({true, extract(st), {}});
            return;
        }
        auto [r, c] = g_.ones[st.pos];
        int forced = forced_class(st, r, c);
        if (forced == -1 && budget == 0) {
            items.push_back({false, {}, st});
            return;
        }
        int next_budget = forced >= 0 ? budget : budget - 1;
        step(
            st,
            [&] {
                expand_rec(st, next_budget, exact_k, items);
                return false;
            },
            false);
    }

    const BitGrid& g_;
    int k_;
    std::vector<RectMask> solution_;
    std::vector<std::vector<RectMask>>* out_all_ = nullptr;
    const std::atomic<long long>* cancel_best_ = nullptr;
    long long own_index_ = 0;
    unsigned tick_ = 0;
    bool aborted_ = false;
};

std::vector<PartitionSearch::Item> make_frontier(PartitionSearch& search, PState root, int target,
                                                 bool exact_k) {
    std::vector<PartitionSearch::Item> items;
    std::size_t prev = 0;
    for (int budget = 2; budget <= 14; ++budget) {
        items.clear();
        PState st = root;
        search.expand(st, budget, exact_k, items);
        if ((int)items.size() >= target || items.size() == prev || items.size() > 8192) break;
        prev = items.size();
    }
    return items;
}

}  // namespace

std::optional<std::vector<RectMask>> find_partition(const BitGrid& g, int k, int threads) {
    PartitionSearch search(g, k);
    PState root = search.root();
    int t = resolve_threads(threads);
    if (t <= 1 || g.ones.size() < 20) {
        if (search.run_first(root)) return search.solution();
        return std::nullopt;
    }

    auto items = make_frontier(search, root, 32 * t, false);
    std::atomic<long long> best{kNoIndex};
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].solved) {
            best.store((long long)i);
            break;
        }
    std::vector<std::vector<RectMask>> found(items.size());
    std::vector<char> has_found(items.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (long long i = 0; i < (long long)items.size(); ++i) {
        if (items[i].solved) continue;
        if (best.load(std::memory_order_relaxed) < i) continue;
        PartitionSearch sub(g, k);
        sub.set_cancel(&best, i);
        if (sub.run_first(items[i].state)) {
            found[i] = sub.solution();
            has_found[i] = 1;
            atomic_min(best, i);
        }
    }
    long long b = best.load();
    if (b == kNoIndex) return std::nullopt;
    return items[b].solved ? items[b].solution : found[b];
}

std::vector<std::vector<RectMask>> all_partitions(const BitGrid& g, int k, int threads) {
    PartitionSearch search(g, k);
    PState root = search.root();
    int t = resolve_threads(threads);
    std::vector<std::vector<RectMask>> out;
    if (t <= 1 || g.ones.size() < 20) {
        search.run_all(root, out);
        return out;
    }

    auto items = make_frontier(search, root, 32 * t, true);
    std::vector<std::vector<std::vector<RectMask>>> parts(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (long long i = 0; i < (long long)items.size(); ++i) {
        if (items[i].solved) {
            parts[i].push_back(items[i].solution);
            continue;
        }
        PartitionSearch sub(g, k);
        sub.run_all(items[i].state, parts[i]);
    }
    for (auto& p : parts)
        for (auto& sol : p) out.push_back(std::move(sol));
    return out;
}

}  // namespace rankforge::detail
