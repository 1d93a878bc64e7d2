#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/config.hpp"
#include "rankforge/matrix.hpp"
#include "rankforge/rectangles.hpp"

namespace rankforge {

/// A minimum-size spanning set for the columns of a matrix under the chosen
/// semiring, kept as lexicographically sorted distinct vectors. Each base is
/// the set of rectangle row supports of one optimal partition or cover.
struct Base {
    Semiring semiring = Semiring::Binary;
    std::size_t dim = 0;
    std::vector<ColumnVector> vectors;

    bool operator==(const Base& other) const;
    bool operator<(const Base& other) const;
};

/// A = U * V with binary factors, exact under the semiring, k = rank.
struct Decomposition {
    BinaryMatrix u;
    BinaryMatrix v;
    Semiring semiring = Semiring::Binary;
};

/// Directed graph on the bases of one matrix: an edge (i, j) means base i
/// spans base j. Always acyclic.
struct BaseGraph {
    std::vector<Base> nodes;
    std::vector<std::pair<int, int>> edges;
};

/// All distinct bases in canonical order. Empty for the all-zero matrix.
std::vector<Base> enumerate_bases(const BinaryMatrix& a, Semiring s,
                                  const SolverConfig& cfg = default_config());

/// Subset of the base's vectors combining to y, if any: disjoint supports
/// with integer sum y under Binary, OR equal to y under Boolean. The zero
/// vector is spanned by the empty subset.
std::optional<std::vector<ColumnVector>> spans_vector(const Base& x, const ColumnVector& y);

/// True when every vector of y is spanned by x.
bool spans_base(const Base& x, const Base& y);

BaseGraph base_graph(const BinaryMatrix& a, Semiring s, const SolverConfig& cfg = default_config());

/// Nodes with no incoming edge, in node order.
std::vector<int> source_indices(const BaseGraph& g);
std::vector<Base> sources(const BaseGraph& g);

struct AugmentationVerdict {
    bool holds = false;
    std::optional<Base> spanning_base;                     // present when holds
    std::optional<std::pair<Base, Base>> counterexample_sources;  // present when not
};

/// Whether rank-preserving augmentation vectors always compose: equivalent
/// to the base graph having a single source. The all-zero matrix holds
/// vacuously.
AugmentationVerdict has_augmentation_property(const BinaryMatrix& a, Semiring s,
                                              const SolverConfig& cfg = default_config());

/// rank(A|x) == rank(A); cross-checked against "some base spans x".
bool is_rank_preserving(const BinaryMatrix& a, const ColumnVector& x, Semiring s,
                        const SolverConfig& cfg = default_config());

/// Up to `count` distinct nonzero vectors spanned by some base of the graph,
/// drawn with a fixed seed. Every returned vector preserves the rank when
/// augmented on its own.
std::vector<ColumnVector> sample_spanned_vectors(const BaseGraph& g, std::size_t count,
                                                 std::uint64_t seed);

std::string to_dot(const BaseGraph& g);
void to_json(nlohmann::json& j, const Base& b);
void to_json(nlohmann::json& j, const BaseGraph& g);

}  // namespace rankforge
