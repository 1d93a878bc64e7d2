#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "rankforge/properties.hpp"
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

bool pairwise_disjoint(const std::vector<ColumnVector>& vectors) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (!vectors[i].disjoint_with(vectors[j])) return false;
    return true;
}

// U columns are the rectangle row supports, V rows the column supports, in
// the canonical rectangle order of the solution.
Decomposition decomposition_from_partition(const RectangleSolution& sol) {
    std::size_t k = sol.rectangles.size();
    BinaryMatrix::Builder u(sol.n_rows, k);
    BinaryMatrix::Builder v(k, sol.n_cols);
    for (std::size_t i = 0; i < k; ++i) {
        for (int r : sol.rectangles[i].rows) u.set(r, i);
        for (int c : sol.rectangles[i].cols) v.set(i, c);
    }
    return {u.build(), v.build(), Semiring::Binary};
}

// First nonzero sign is +1, positions tried low to high with 0 before +1
// before -1, so reported violations are deterministic.
bool find_kernel_vector(const BinaryMatrix& v, std::vector<int>& plus, std::vector<int>& minus) {
    std::size_t k = v.rows();
    std::vector<int> sign(k, 0);
    std::vector<int> column_sum(v.cols(), 0);

    std::function<bool(std::size_t, bool)> rec = [&](std::size_t idx, bool any) -> bool {
        if (idx == k) {
            if (!any) return false;
            return std::all_of(column_sum.begin(), column_sum.end(),
                               [](int s) { return s == 0; });
        }
        if (rec(idx + 1, any)) return true;
        for (int s : {+1, -1}) {
            if (s == -1 && !any) continue;  // normalize the overall sign
            sign[idx] = s;
            for (std::size_t c = 0; c < v.cols(); ++c)
                if (v.get(idx, c)) column_sum[c] += s;
            if (rec(idx + 1, true)) return true;
            for (std::size_t c = 0; c < v.cols(); ++c)
                if (v.get(idx, c)) column_sum[c] -= s;
            sign[idx] = 0;
        }
        return false;
    };
    if (!rec(0, false)) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (sign[i] > 0) plus.push_back((int)i);
        if (sign[i] < 0) minus.push_back((int)i);
    }
    return true;
}

// 0/1-coefficient integer combination: a disjoint subset of the candidate
// rows summing exactly to the target.
std::optional<std::vector<std::size_t>> disjoint_row_combination(
    const std::vector<std::uint64_t>& candidates, std::uint64_t target) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t idx,
                                                              std::uint64_t residual) -> bool {
        if (residual == 0) return true;
        if (idx == candidates.size()) return false;
        std::uint64_t m = candidates[idx];
        if (m && (m & ~residual) == 0) {
            chosen.push_back(idx);
            if (rec(idx + 1, residual & ~m)) return true;
            chosen.pop_back();
        }
        return rec(idx + 1, residual);
    };
    if (!rec(0, target)) return std::nullopt;
    return chosen;
}

}  // namespace

std::optional<Base> find_disjoint_in_rows_base(const BinaryMatrix& a, const SolverConfig& cfg) {
    check_limits(a, cfg);
    std::optional<Base> found;
    for (const Base& base : enumerate_bases(a, Semiring::Binary, cfg)) {
        if (!pairwise_disjoint(base.vectors)) continue;
        if (found) throw MultipleDisjointBases("two distinct disjoint-in-rows bases");
        found = base;
    }
    return found;
}

UniqueSumsVerdict has_unique_base_rows_sums(const BinaryMatrix& a, const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero()) return {true, std::nullopt};
    int rank = binary_rank(a, cfg).rank;
    for (const RectangleSolution& sol : partition_solutions(a, rank, cfg)) {
        Decomposition dec = decomposition_from_partition(sol);
        std::vector<int> plus, minus;
        if (find_kernel_vector(dec.v, plus, minus))
            return {false, UniqueSumsViolation{std::move(dec), std::move(plus), std::move(minus)}};
    }
    return {true, std::nullopt};
}

std::optional<Decomposition> rows_of_A_decomposition(const BinaryMatrix& a,
                                                     const SolverConfig& cfg) {
    check_limits(a, cfg);
    std::size_t n = a.rows();
    std::vector<std::uint64_t> row_bits(n);
    for (std::size_t r = 0; r < n; ++r) row_bits[r] = a.row_mask(r);

    // Drop rows expressible from the other remaining rows, later rows first,
    // until none qualifies.
    std::vector<char> kept(n, 1);
    for (;;) {
        int removable = -1;
        for (std::size_t r = 0; r < n; ++r) {
            if (!kept[r]) continue;
            std::vector<std::uint64_t> others;
            for (std::size_t r2 = 0; r2 < n; ++r2)
                if (kept[r2] && r2 != r) others.push_back(row_bits[r2]);
            if (disjoint_row_combination(others, row_bits[r])) removable = (int)r;
        }
        if (removable < 0) break;
        kept[removable] = 0;
    }

    std::vector<std::size_t> survivors;
    for (std::size_t r = 0; r < n; ++r)
        if (kept[r]) survivors.push_back(r);
    if (survivors.empty()) return std::nullopt;  // all-zero matrix

    BinaryMatrix::Builder vb(survivors.size(), a.cols());
    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(survivors[i], c)) vb.set(i, c);
    BinaryMatrix v = vb.build();
    if (binary_rank(v, cfg).rank != (int)survivors.size()) return std::nullopt;

    std::vector<std::uint64_t> survivor_bits;
    for (std::size_t r : survivors) survivor_bits.push_back(row_bits[r]);
    BinaryMatrix::Builder ub(n, survivors.size());
    for (std::size_t r = 0; r < n; ++r) {
        auto it = std::find(survivors.begin(), survivors.end(), r);
        if (it != survivors.end()) {
            ub.set(r, (std::size_t)(it - survivors.begin()));
            continue;
        }
        auto combo = disjoint_row_combination(survivor_bits, row_bits[r]);
        if (!combo) throw InvariantViolation("removed row lost its combination");
        for (std::size_t idx : *combo) ub.set(r, idx);
    }
    Decomposition dec{ub.build(), v, Semiring::Binary};
    ProductResult check = product(dec.u, dec.v, Semiring::Binary);
    if (!check.is_binary || check.binary() != a)
        throw InvariantViolation("rows-of-A decomposition does not reproduce the matrix");
    return dec;
}

bool dependency_transfer_holds(const BinaryMatrix& a, const Decomposition& d) {
    std::size_t n = a.rows();
    std::size_t limit = std::min<std::size_t>(n, 5);

    std::vector<std::size_t> subset;
    // Every subset of size <= limit, every choice of distinguished member.
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (subset.size() >= 1) {
            for (std::size_t pick = 0; pick < subset.size(); ++pick) {
                bool a_dep = true, u_dep = true;
                for (std::size_t c = 0; c < a.cols() && a_dep; ++c) {
                    int sum = 0;
                    for (std::size_t i = 0; i < subset.size(); ++i)
                        if (i != pick) sum += a.get(subset[i], c);
                    if (sum != (int)a.get(subset[pick], c)) a_dep = false;
                }
                for (std::size_t c = 0; c < d.u.cols() && u_dep; ++c) {
                    int sum = 0;
                    for (std::size_t i = 0; i < subset.size(); ++i)
                        if (i != pick) sum += d.u.get(subset[i], c);
                    if (sum != (int)d.u.get(subset[pick], c)) u_dep = false;
                }
                if (a_dep != u_dep) return false;
            }
        }
        if (subset.size() == limit) return true;
        for (std::size_t r = start; r < n; ++r) {
            subset.push_back(r);
            if (!rec(r + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    return rec(0);
}

bool verify_dependency_transfer(const BinaryMatrix& a, const Decomposition& d,
                                const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (d.semiring != Semiring::Binary)
        throw InvalidArgument("dependency transfer is a binary-rank check");
    if (!has_unique_base_rows_sums(a, cfg).holds)
        throw InvalidArgument("matrix lacks the unique base row sums property");
    ProductResult prod = product(d.u, d.v, Semiring::Binary);
    if (!prod.is_binary || prod.binary() != a)
        throw InvalidArgument("decomposition does not reproduce the matrix");
    if ((int)d.u.cols() != binary_rank(a, cfg).rank)
        throw InvalidArgument("decomposition is not optimal");
    return dependency_transfer_holds(a, d);
}

RowsOfAVerdict spanning_base_verdict(const BinaryMatrix& a, const SolverConfig& cfg) {
    check_limits(a, cfg);
    auto dec = rows_of_A_decomposition(a, cfg);
    if (!dec || !has_unique_base_rows_sums(a, cfg).holds) return {false, std::nullopt};

    Base u_base;
    u_base.semiring = Semiring::Binary;
    u_base.dim = a.rows();
    for (std::size_t c = 0; c < dec->u.cols(); ++c) u_base.vectors.push_back(dec->u.column(c));
    std::sort(u_base.vectors.begin(), u_base.vectors.end());

    for (const Base& other : enumerate_bases(a, Semiring::Binary, cfg))
        if (!spans_base(u_base, other))
            throw SpanningBaseViolation("qualifying decomposition fails to span a base");
    return {true, true};
}

}  // namespace rankforge
