#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rankforge/ranks.hpp"
#include "test_util.hpp"

using namespace rankforge;

namespace {
const BinaryMatrix kTwoSource = BinaryMatrix::parse("010\n110\n111\n011\n");
const BinaryMatrix kBooleanExample = BinaryMatrix::parse("111\n111\n011\n001\n");
}  // namespace

TEST_CASE("real rank on known matrices") {
    CHECK(real_rank(BinaryMatrix::identity(5)) == 5);
    CHECK(real_rank(BinaryMatrix::filled(3, 4, true)) == 1);
    CHECK(real_rank(kTwoSource) == 3);
    CHECK(real_rank(BinaryMatrix::filled(2, 2, false)) == 0);
}

TEST_CASE("binary rank on known matrices") {
    RankResult two_source = binary_rank(kTwoSource);
    CHECK(two_source.rank == 3);
    REQUIRE(two_source.witness.has_value());
    two_source.witness->validate_against(kTwoSource);

    ColumnVector x = ColumnVector::from_string("1001");
    ColumnVector y = ColumnVector::from_string("1100");
    CHECK(binary_rank(augment(kTwoSource, {x})).rank == 3);
    CHECK(binary_rank(augment(kTwoSource, {y})).rank == 3);
    CHECK(binary_rank(augment(kTwoSource, {x, y})).rank == 4);

    CHECK(binary_rank(BinaryMatrix::identity(5)).rank == 5);

    RankResult zero = binary_rank(BinaryMatrix::filled(3, 3, false));
    CHECK(zero.rank == 0);
    CHECK(zero.witness->rectangles.empty());
}

TEST_CASE("boolean rank on known matrices") {
    RankResult base = boolean_rank(kBooleanExample);
    CHECK(base.rank == 3);
    base.witness->validate_against(kBooleanExample);
    CHECK(oracle::cover_rank(kBooleanExample, false) == 3);

    ColumnVector x = ColumnVector::from_string("0110");
    ColumnVector y = ColumnVector::from_string("0010");
    CHECK(boolean_rank(augment(kBooleanExample, {x})).rank == 3);
    CHECK(boolean_rank(augment(kBooleanExample, {y})).rank == 3);
    CHECK(boolean_rank(augment(kBooleanExample, {x, y})).rank == 4);

    CHECK(boolean_rank(BinaryMatrix::filled(4, 6, true)).rank == 1);
}

TEST_CASE("size cap") {
    SolverConfig cfg;
    cfg.max_cells = 576;
    BinaryMatrix big = BinaryMatrix::filled(25, 25, true);
    CHECK_THROWS_AS(binary_rank(big, cfg), ResourceLimitError);
    CHECK_THROWS_AS(boolean_rank(big, cfg), ResourceLimitError);
    SolverConfig wide;
    wide.max_cells = 10000;
    CHECK(binary_rank(big, wide).rank == 1);
}

TEST_CASE("maximal rectangles") {
    auto two = enumerate_maximal_rectangles(BinaryMatrix::identity(2));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Rectangle{{0}, {0}});
    CHECK(two[1] == Rectangle{{1}, {1}});

    auto all = enumerate_maximal_rectangles(BinaryMatrix::filled(2, 2, true));
    REQUIRE(all.size() == 1);
    CHECK(all[0] == Rectangle{{0, 1}, {0, 1}});

    auto staircase = enumerate_maximal_rectangles(BinaryMatrix::parse("110\n011\n"));
    REQUIRE(staircase.size() == 3);
    CHECK(staircase[0] == Rectangle{{0}, {0, 1}});
    CHECK(staircase[1] == Rectangle{{0, 1}, {1}});
    CHECK(staircase[2] == Rectangle{{1}, {1, 2}});

    CHECK(enumerate_maximal_rectangles(BinaryMatrix::filled(2, 3, false)).empty());
}

TEST_CASE("maximal rectangles agree with the subset-closure oracle") {
    std::mt19937 rng(81);
    for (int it = 0; it < 40; ++it) {
        BinaryMatrix a = testutil::random_nonzero_matrix(rng, 5, 5, 0.5);
        auto got = enumerate_maximal_rectangles(a);
        auto expected = oracle::all_rectangles(a, true);
        CHECK(got.size() == expected.size());
        for (const Rectangle& rect : got) {
            std::uint64_t rows = 0, cols = 0;
            for (int r : rect.rows) rows |= std::uint64_t(1) << r;
            for (int c : rect.cols) cols |= std::uint64_t(1) << c;
            bool found = false;
            for (const auto& exp : expected)
                if (exp.rows == rows && exp.cols == cols) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("partition enumeration") {
    auto sols = partition_solutions(kTwoSource, 3);
    CHECK(sols.size() == 3);
    for (const auto& sol : sols) sol.validate_against(kTwoSource);

    CHECK(partition_solutions(BinaryMatrix::identity(2), 1).empty());

    auto split = partition_solutions(BinaryMatrix::filled(2, 2, true), 2);
    REQUIRE(split.size() == 2);
    CHECK(split[0].rectangles == std::vector<Rectangle>{{{0}, {0, 1}}, {{1}, {0, 1}}});
    CHECK(split[1].rectangles == std::vector<Rectangle>{{{0, 1}, {0}}, {{0, 1}, {1}}});
}

TEST_CASE("cover enumeration") {
    CHECK(cover_solutions(BinaryMatrix::filled(2, 2, true), 1).size() == 1);
    CHECK(cover_solutions(BinaryMatrix::identity(2), 1).empty());

    auto covers = cover_solutions(kBooleanExample, 3);
    CHECK(covers.size() >= 2);
    for (const auto& sol : covers) sol.validate_against(kBooleanExample);

    // The two covers displayed for the augmented variants restrict to these.
    RectangleSolution first{SolutionKind::Cover,
                            {{{0, 1}, {0, 1, 2}}, {{1, 2}, {1, 2}}, {{3}, {2}}},
                            4,
                            3};
    RectangleSolution second{SolutionKind::Cover,
                             {{{0, 1}, {0, 1, 2}}, {{2}, {1, 2}}, {{3}, {2}}},
                             4,
                             3};
    bool has_first = false, has_second = false;
    for (const auto& sol : covers) {
        if (sol.rectangles == first.rectangles) has_first = true;
        if (sol.rectangles == second.rectangles) has_second = true;
    }
    CHECK(has_first);
    CHECK(has_second);
}

TEST_CASE("cc bounds") {
    CcBounds ones = cc_bounds(BinaryMatrix::filled(3, 3, true));
    CHECK(ones.d_lower == 0.0);
    CHECK(ones.n_exact == 0.0);

    CcBounds id4 = cc_bounds(BinaryMatrix::identity(4));
    CHECK(id4.d_lower == 2.0);
    CHECK(id4.n_exact == 2.0);

    CcBounds two_source = cc_bounds(kTwoSource);
    CHECK(two_source.d_lower == std::log2(3.0));
    CHECK(two_source.partition_rank == 3);

    CHECK_THROWS_AS(cc_bounds(BinaryMatrix::filled(2, 2, false)), InvalidArgument);
}

TEST_CASE("solvers agree with the naive oracles on all 3x3 matrices (sample here)") {
    // The acceptance suite runs the full 512; keep a fast subset in the unit run.
    for (unsigned bits = 0; bits < 512; bits += 7) {
        BinaryMatrix::Builder b(3, 3);
        for (int i = 0; i < 9; ++i)
            if ((bits >> i) & 1) b.set(i / 3, i % 3);
        BinaryMatrix a = b.build();
        CAPTURE(bits);
        CHECK(binary_rank(a).rank == oracle::partition_rank(a));
        CHECK(boolean_rank(a).rank == oracle::cover_rank(a, false));
    }
}

TEST_CASE("solvers agree with the naive oracles on random matrices") {
    std::mt19937 rng(82);
    for (int it = 0; it < 25; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 4, 4, 0.5);
        CAPTURE(a.serialize());
        CHECK(binary_rank(a).rank == oracle::partition_rank(a));
        CHECK(boolean_rank(a).rank == oracle::cover_rank(a, true));
    }
    for (int it = 0; it < 6; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 5, 5, 0.45);
        CAPTURE(a.serialize());
        CHECK(binary_rank(a).rank == oracle::partition_rank(a));
        CHECK(boolean_rank(a).rank == oracle::cover_rank(a, true));
    }
    for (int it = 0; it < 3; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 6, 6, 0.45);
        CAPTURE(a.serialize());
        CHECK(binary_rank(a).rank == oracle::partition_rank(a));
        CHECK(boolean_rank(a).rank == oracle::cover_rank(a, true));
    }
}

TEST_CASE("enumeration counts match the naive oracles") {
    std::mt19937 rng(85);
    for (int it = 0; it < 25; ++it) {
        BinaryMatrix a = testutil::random_nonzero_matrix(rng, 4, 4, 0.5);
        CAPTURE(a.serialize());
        int rank = binary_rank(a).rank;
        for (int k : {rank, rank + 1})
            CHECK((long long)partition_solutions(a, k).size() == oracle::partition_count(a, k));
        int crank = boolean_rank(a).rank;
        CHECK((long long)cover_solutions(a, crank).size() == oracle::cover_count(a, crank));
        CHECK((long long)cover_solutions(a, crank + 1).size() ==
              oracle::cover_count(a, crank + 1));
        CHECK(cover_solutions(a, crank - 1).empty());
        CHECK(partition_solutions(a, rank - 1).empty());
    }
}

TEST_CASE("solutions for the all-zero matrix") {
    BinaryMatrix zero = BinaryMatrix::filled(2, 3, false);
    CHECK(partition_solutions(zero, 0).size() == 1);
    CHECK(partition_solutions(zero, 1).empty());
    CHECK(cover_solutions(zero, 0).size() == 1);
    CHECK(cover_solutions(zero, 2).empty());
}

TEST_CASE("rank order and witness validity on random matrices") {
    std::mt19937 rng(83);
    for (int it = 0; it < 60; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 5, 5, 0.5);
        RankResult bin = binary_rank(a);
        RankResult boo = boolean_rank(a);
        CHECK(real_rank(a) <= bin.rank);
        CHECK(boo.rank <= bin.rank);
        bin.witness->validate_against(a);
        boo.witness->validate_against(a);
        CHECK((int)bin.witness->rectangles.size() == bin.rank);
        CHECK((int)boo.witness->rectangles.size() == boo.rank);
        CHECK(fooling_set_bound(a) <= boo.rank);
    }
}

TEST_CASE("block additivity for all three ranks") {
    std::mt19937 rng(84);
    for (int it = 0; it < 20; ++it) {
        BinaryMatrix b = testutil::random_matrix(rng, 4, 4, 0.5);
        BinaryMatrix c = testutil::random_matrix(rng, 4, 4, 0.5);
        BinaryMatrix m = block_diag(b, c);
        CHECK(real_rank(m) == real_rank(b) + real_rank(c));
        CHECK(binary_rank(m).rank == binary_rank(b).rank + binary_rank(c).rank);
        CHECK(boolean_rank(m).rank == boolean_rank(b).rank + boolean_rank(c).rank);
    }
}

TEST_CASE("tensor scaling of binary and real rank") {
    for (std::size_t d : {1, 2, 3}) {
        BinaryMatrix stacked = tensor_identity(kTwoSource, d);
        CHECK(binary_rank(stacked).rank == (int)d * 3);
        CHECK(real_rank(stacked) == (int)d * 3);
    }
}
