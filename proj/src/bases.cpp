#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "rankforge/bases.hpp"
#include "rankforge/ranks.hpp"
#include "search_internal.hpp"

namespace rankforge {

bool Base::operator==(const Base& other) const {
    return semiring == other.semiring && dim == other.dim && vectors == other.vectors;
}

bool Base::operator<(const Base& other) const {
    return std::lexicographical_compare(vectors.begin(), vectors.end(), other.vectors.begin(),
                                        other.vectors.end());
}

namespace {

void check_limits(const BinaryMatrix& a, const SolverConfig& cfg) {
    if (a.cells() > cfg.max_cells)
        throw ResourceLimitError("matrix exceeds the configured cell cap");
    if (a.rows() > 64 || a.cols() > 64)
        throw ResourceLimitError("solvers support at most 64 rows and 64 columns");
}

ColumnVector vector_from_mask(std::uint64_t mask, std::size_t dim) {
    std::vector<std::size_t> support;
    while (mask) {
        support.push_back((std::size_t)std::countr_zero(mask));
        mask &= mask - 1;
    }
    return ColumnVector::of_support(dim, support);
}

std::uint64_t mask_from_vector(const ColumnVector& v) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v.get(i)) mask |= std::uint64_t(1) << i;
    return mask;
}

Base base_from_supports(const std::vector<std::uint64_t>& supports, Semiring s, std::size_t dim) {
    Base base;
    base.semiring = s;
    base.dim = dim;
    base.vectors.reserve(supports.size());
    for (std::uint64_t mask : supports) base.vectors.push_back(vector_from_mask(mask, dim));
    std::sort(base.vectors.begin(), base.vectors.end());
    return base;
}

}  // namespace

std::vector<Base> enumerate_bases(const BinaryMatrix& a, Semiring s, const SolverConfig& cfg) {
    check_limits(a, cfg);
    if (a.is_all_zero()) return {};
    std::set<std::vector<std::uint64_t>> support_sets;
    if (s == Semiring::Binary) {
        int rank = binary_rank(a, cfg).rank;
        detail::BitGrid grid(a);
        for (const auto& partition : detail::all_partitions(grid, rank, cfg.threads)) {
            std::vector<std::uint64_t> supports;
            supports.reserve(partition.size());
            for (const detail::RectMask& rect : partition) supports.push_back(rect.rows);
            std::sort(supports.begin(), supports.end());
            support_sets.insert(std::move(supports));
        }
    } else {
        int rank = boolean_rank(a, cfg).rank;
        detail::BitGrid grid(a);
        for (auto& supports : detail::cover_support_sets(grid, rank))
            support_sets.insert(std::move(supports));
    }
    std::vector<Base> bases;
    bases.reserve(support_sets.size());
    for (const auto& supports : support_sets) bases.push_back(base_from_supports(supports, s, a.rows()));
    std::sort(bases.begin(), bases.end());
    return bases;
}

std::optional<std::vector<ColumnVector>> spans_vector(const Base& x, const ColumnVector& y) {
    if (y.dim() != x.dim) throw DimensionError("vector dimension differs from the base");
    if (x.dim > 64) throw ResourceLimitError("bases support at most 64 rows");
    std::uint64_t target = mask_from_vector(y);
    std::vector<std::uint64_t> masks;
    masks.reserve(x.vectors.size());
    for (const ColumnVector& v : x.vectors) masks.push_back(mask_from_vector(v));

    std::vector<int> chosen;
    bool binary = x.semiring == Semiring::Binary;

    // Exhaustive over the (small) base in canonical order; residual holds the
    // still-uncovered target bits. Under Binary a pick must sit inside the
    // residual, which enforces the disjointness the semiring requires; under
    // Boolean it may overlap already-covered bits but never leave the target.
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t residual) -> bool {
        if (residual == 0) return true;
        if (idx == masks.size()) return false;
        std::uint64_t m = masks[idx];
        bool usable = binary ? (m & ~residual) == 0 : (m & ~target) == 0;
        if (usable && (m & residual)) {
            chosen.push_back((int)idx);
            if (self(self, idx + 1, residual & ~m)) return true;
            chosen.pop_back();
        }
        return self(self, idx + 1, residual);
    };
    if (!rec(rec, 0, target)) return std::nullopt;
    std::vector<ColumnVector> witness;
    witness.reserve(chosen.size());
    for (int idx : chosen) witness.push_back(x.vectors[idx]);
    return witness;
}

bool spans_base(const Base& x, const Base& y) {
    if (x.semiring != y.semiring) throw InvalidArgument("bases use different semirings");
    if (x.dim != y.dim) throw DimensionError("bases have different dimensions");
    for (const ColumnVector& v : y.vectors)
        if (!spans_vector(x, v)) return false;
    return true;
}

BaseGraph base_graph(const BinaryMatrix& a, Semiring s, const SolverConfig& cfg) {
    BaseGraph g;
    g.nodes = enumerate_bases(a, s, cfg);
    int n = (int)g.nodes.size();
    std::vector<char> adj((std::size_t)n * n, 0);
    int t = detail::resolve_threads(cfg.threads);
#pragma omp parallel for schedule(dynamic, 4) num_threads(t) if (n >= 8)
    for (long long p = 0; p < (long long)n * n; ++p) {
        int i = (int)(p / n), j = (int)(p % n);
        if (i != j && spans_base(g.nodes[i], g.nodes[j])) adj[p] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adj[(std::size_t)i * n + j]) g.edges.emplace_back(i, j);

    // The spans relation is a strict partial order, so any cycle is a bug.
    std::vector<int> indegree(n, 0);
    for (auto [i, j] : g.edges) ++indegree[j];
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indegree[i] == 0) queue.push_back(i);
    std::size_t seen = 0;
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        ++seen;
        for (int j = 0; j < n; ++j)
            if (adj[(std::size_t)i * n + j] && --indegree[j] == 0) queue.push_back(j);
    }
    if (seen != (std::size_t)n) throw AcyclicityViolation("base graph contains a cycle");
    return g;
}

std::vector<int> source_indices(const BaseGraph& g) {
    std::vector<char> has_in(g.nodes.size(), 0);
    for (auto [i, j] : g.edges) has_in[j] = 1;
    std::vector<int> out;
    for (int i = 0; i < (int)g.nodes.size(); ++i)
        if (!has_in[i]) out.push_back(i);
    return out;
}

std::vector<Base> sources(const BaseGraph& g) {
    std::vector<Base> out;
    for (int i : source_indices(g)) out.push_back(g.nodes[i]);
    return out;
}

AugmentationVerdict has_augmentation_property(const BinaryMatrix& a, Semiring s,
                                              const SolverConfig& cfg) {
    BaseGraph g = base_graph(a, s, cfg);
    AugmentationVerdict verdict;
    if (g.nodes.empty()) {
        verdict.holds = true;  // all-zero matrix: only zero vectors preserve rank 0
        return verdict;
    }
    std::vector<int> src = source_indices(g);
    if (src.empty()) throw AcyclicityViolation("acyclic base graph without a source");
    if (src.size() == 1) {
        verdict.holds = true;
        verdict.spanning_base = g.nodes[src[0]];
        // A single source must span every other node.
        std::vector<char> spanned(g.nodes.size(), 0);
        spanned[src[0]] = 1;
        for (auto [i, j] : g.edges)
            if (i == src[0]) spanned[j] = 1;
        if (!std::all_of(spanned.begin(), spanned.end(), [](char x) { return x != 0; }))
            throw InvariantViolation("single source fails to span some base");
    } else {
        verdict.holds = false;
        verdict.counterexample_sources = std::make_pair(g.nodes[src[0]], g.nodes[src[1]]);
    }
    return verdict;
}

bool is_rank_preserving(const BinaryMatrix& a, const ColumnVector& x, Semiring s,
                        const SolverConfig& cfg) {
    if (x.dim() != a.rows()) throw DimensionError("vector dimension differs from the row count");
    auto rank_of = [&](const BinaryMatrix& m) {
        return s == Semiring::Binary ? binary_rank(m, cfg).rank : boolean_rank(m, cfg).rank;
    };
    bool preserved = rank_of(augment(a, {x})) == rank_of(a);

    bool spanned = x.is_zero();
    if (!spanned)
        for (const Base& base : enumerate_bases(a, s, cfg))
            if (spans_vector(base, x)) {
                spanned = true;
                break;
            }
    if (preserved != spanned)
        throw InvariantViolation("rank preservation disagrees with base spanning");
    return preserved;
}

std::vector<ColumnVector> sample_spanned_vectors(const BaseGraph& g, std::size_t count,
                                                 std::uint64_t seed) {
    std::set<std::uint64_t> pool;
    for (const Base& base : g.nodes) {
        if (base.dim > 64) throw ResourceLimitError("bases support at most 64 rows");
        std::vector<std::uint64_t> masks;
        for (const ColumnVector& v : base.vectors) masks.push_back(mask_from_vector(v));
        std::size_t k = masks.size();
        for (std::uint64_t pick = 1; pick < (std::uint64_t(1) << k); ++pick) {
            std::uint64_t sum = 0;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                if (!((pick >> i) & 1)) continue;
                if (base.semiring == Semiring::Binary && (sum & masks[i])) ok = false;
                sum |= masks[i];
            }
            if (ok && sum) pool.insert(sum);
        }
    }
    std::vector<std::uint64_t> shuffled(pool.begin(), pool.end());
    // xorshift keeps the choice independent of library shuffle details
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        std::swap(shuffled[i - 1], shuffled[state % i]);
    }
    if (shuffled.size() > count) shuffled.resize(count);
    std::vector<ColumnVector> out;
    std::size_t dim = g.nodes.empty() ? 1 : g.nodes.front().dim;
    for (std::uint64_t mask : shuffled) out.push_back(vector_from_mask(mask, dim));
    return out;
}

std::string to_dot(const BaseGraph& g) {
    std::ostringstream out;
    out << "digraph base_graph {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out << "  " << i << " [label=\"" << i << "\", tooltip=\"";
        for (std::size_t v = 0; v < g.nodes[i].vectors.size(); ++v) {
            if (v) out << ' ';
            out << g.nodes[i].vectors[v].to_string();
        }
        out << "\"];\n";
    }
    for (auto [i, j] : g.edges) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

void to_json(nlohmann::json& j, const Base& b) {
    std::vector<std::string> vectors;
    vectors.reserve(b.vectors.size());
    for (const ColumnVector& v : b.vectors) vectors.push_back(v.to_string());
    j = vectors;
}

void to_json(nlohmann::json& j, const BaseGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, k] : g.edges) edges.push_back({i, k});
    j = nlohmann::json{{"bases", g.nodes}, {"edges", edges}, {"sources", source_indices(g)}};
}

}  // namespace rankforge
