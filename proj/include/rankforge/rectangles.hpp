#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "rankforge/matrix.hpp"

namespace rankforge {

/// All-ones combinatorial rectangle: every (r, c) in rows x cols is a 1.
/// Index lists are kept sorted ascending.
struct Rectangle {
    std::vector<int> rows;
    std::vector<int> cols;

    bool operator==(const Rectangle& other) const = default;
    bool operator<(const Rectangle& other) const;
};

enum class SolutionKind { Partition, Cover };

/// A set of rectangles whose cells are exactly the 1-entries of a matrix.
/// Partitions additionally have pairwise disjoint cell sets.
struct RectangleSolution {
    SolutionKind kind = SolutionKind::Partition;
    std::vector<Rectangle> rectangles;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;

    /// Throws InvariantViolation when a stated invariant fails against m.
    void validate_against(const BinaryMatrix& m) const;

    bool operator==(const RectangleSolution& other) const = default;
    bool operator<(const RectangleSolution& other) const;
};

struct RankResult {
    int rank = 0;
    std::optional<RectangleSolution> witness;  // absent for the real rank
};

void to_json(nlohmann::json& j, const Rectangle& r);
void to_json(nlohmann::json& j, const RectangleSolution& s);
void to_json(nlohmann::json& j, const RankResult& r);

}  // namespace rankforge
