#pragma once

#include <optional>
#include <vector>

#include "rankforge/bases.hpp"
#include "rankforge/config.hpp"
#include "rankforge/matrix.hpp"

namespace rankforge {

/// The unique binary base whose vectors have pairwise disjoint supports, if
/// one exists. Finding two is a bug (MultipleDisjointBases).
std::optional<Base> find_disjoint_in_rows_base(const BinaryMatrix& a,
                                               const SolverConfig& cfg = default_config());

struct UniqueSumsViolation {
    Decomposition decomposition;
    std::vector<int> plus_rows;   // rows of V summing to the same vector
    std::vector<int> minus_rows;  // as this disjoint row set
};

struct UniqueSumsVerdict {
    bool holds = false;
    std::optional<UniqueSumsViolation> counterexample;
};

/// Checks every optimal binary decomposition U*V of A for two disjoint row
/// subsets of V with the same integer sum, i.e. a {-1,0,1} kernel vector.
UniqueSumsVerdict has_unique_base_rows_sums(const BinaryMatrix& a,
                                            const SolverConfig& cfg = default_config());

/// An optimal binary decomposition whose V rows are rows of A, if one
/// exists: rows expressible as 0/1 combinations of other rows are removed
/// (later rows first) to a fixpoint, and the survivors must have full
/// binary rank.
std::optional<Decomposition> rows_of_A_decomposition(const BinaryMatrix& a,
                                                     const SolverConfig& cfg = default_config());

/// Raw check that A and U share their 0/1 row dependencies over subsets of
/// size at most min(n, 5).
bool dependency_transfer_holds(const BinaryMatrix& a, const Decomposition& d);

/// Same check behind its preconditions: A must have unique base row sums and
/// d must be an optimal binary decomposition of A.
bool verify_dependency_transfer(const BinaryMatrix& a, const Decomposition& d,
                                const SolverConfig& cfg = default_config());

struct RowsOfAVerdict {
    bool applies = false;
    std::optional<bool> confirmed;  // present when applies; always true
};

/// When A has a rows-of-A optimal decomposition and unique base row sums,
/// the decomposition's U spans every base. `confirmed` reports that check;
/// a false outcome raises SpanningBaseViolation.
RowsOfAVerdict spanning_base_verdict(const BinaryMatrix& a,
                                     const SolverConfig& cfg = default_config());

}  // namespace rankforge
