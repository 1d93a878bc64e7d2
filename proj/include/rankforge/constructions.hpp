#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rankforge/config.hpp"
#include "rankforge/matrix.hpp"

namespace rankforge {

enum class RankFn { Real, Binary, Boolean };

const char* to_string(RankFn f);

/// One expected-rank statement about a fixture. The target picks between
/// the bundled matrix, the matrix augmented with every bundled vector at
/// once, and the matrix augmented with each vector separately.
struct RankClaim {
    enum class Target { Matrix, AugmentedAll, AugmentedEach };
    enum class Bound { Exact, AtLeast };

    RankFn fn = RankFn::Binary;
    Target target = Target::Matrix;
    Bound bound = Bound::Exact;
    int value = 0;
};

struct Fixture {
    std::string name;
    BinaryMatrix matrix;
    std::vector<std::pair<std::string, ColumnVector>> vectors;
    std::vector<RankClaim> claims;
};

/// Bundled matrices: sec2_example, boolean_example, single_source,
/// identical_rows, sums_inline, gap_boolean_base.
Fixture fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// Block-diagonal stack of d copies of the two-source example, each block
/// augmented with the vectors of both of its binary sources. Binary rank is
/// at least 4d while the real rank stays 3d.
Fixture build_gap_binary(std::size_t d, const SolverConfig& cfg = default_config());

/// Same layout with one vector from each boolean source per block. Boolean
/// rank 4d, real rank 3d.
Fixture build_gap_boolean(std::size_t d, const SolverConfig& cfg = default_config());

/// k all-ones rows on top of a fixed rank-4 block, plus vectors x_i touching
/// row i and the first block row. Each x_i alone preserves the binary rank 4,
/// all together they push it to k+3.
Fixture build_Ak(std::size_t k);

/// A augmented with all vectors of its first two base-graph sources under s.
/// Requires at least two sources.
Fixture augment_with_source_bases(const BinaryMatrix& a, Semiring s,
                                  const SolverConfig& cfg = default_config());

struct ClaimOutcome {
    bool pass = false;
    std::string detail;
};

/// Recomputes the ranks a claim talks about and compares them against it.
ClaimOutcome check_claim(const Fixture& f, const RankClaim& c,
                         const SolverConfig& cfg = default_config());

void to_json(nlohmann::json& j, const RankClaim& c);
void to_json(nlohmann::json& j, const Fixture& f);

}  // namespace rankforge
