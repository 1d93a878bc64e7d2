#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rankforge/bases.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/ranks.hpp"

using namespace rankforge;

TEST_CASE("fixtures are transcribed as expected") {
    Fixture sec2 = fixture("sec2_example");
    CHECK(sec2.matrix == BinaryMatrix::parse("010\n110\n111\n011\n"));
    REQUIRE(sec2.vectors.size() == 2);
    CHECK(sec2.vectors[0].second == ColumnVector::from_string("1001"));
    CHECK(sec2.vectors[1].second == ColumnVector::from_string("1100"));

    Fixture boolean_ex = fixture("boolean_example");
    CHECK(boolean_ex.matrix == BinaryMatrix::parse("111\n111\n011\n001\n"));
    CHECK(boolean_ex.vectors[0].second == ColumnVector::from_string("0110"));
    CHECK(boolean_ex.vectors[1].second == ColumnVector::from_string("0010"));

    CHECK(fixture("identical_rows").matrix.rows() == 6);
    CHECK(fixture("identical_rows").matrix.cols() == 5);
    CHECK(fixture("single_source").matrix == BinaryMatrix::parse("110\n011\n011\n001\n"));
    CHECK(fixture("sums_inline").matrix == BinaryMatrix::parse("110\n001\n011\n111\n"));
    CHECK(fixture("gap_boolean_base").matrix == fixture("sec2_example").matrix);

    CHECK_THROWS_AS(fixture("unknown"), NotFound);
}

TEST_CASE("every bundled claim re-derives") {
    for (const std::string& name : fixture_names()) {
        Fixture f = fixture(name);
        for (const RankClaim& claim : f.claims) {
            ClaimOutcome outcome = check_claim(f, claim);
            CAPTURE(outcome.detail);
            CHECK(outcome.pass);
        }
    }
}

TEST_CASE("binary gap family") {
    Fixture d1 = build_gap_binary(1);
    CHECK(d1.matrix.rows() == 4);
    CHECK(d1.matrix.cols() == 9);
    CHECK(real_rank(d1.matrix) == 3);
    int rank1 = binary_rank(d1.matrix).rank;
    CHECK(rank1 >= 4);
    CHECK(rank1 == 4);  // the solver pins the exact value

    Fixture d2 = build_gap_binary(2);
    CHECK(d2.matrix.rows() == 8);
    CHECK(d2.matrix.cols() == 18);
    CHECK(real_rank(d2.matrix) == 6);
    int rank2 = binary_rank(d2.matrix).rank;
    CHECK(rank2 >= 8);
    CHECK(rank2 == 2 * rank1);  // block additivity cross-check

    for (const RankClaim& claim : d1.claims) CHECK(check_claim(d1, claim).pass);
}

TEST_CASE("binary gap family is column-permutation invariant") {
    Fixture d2 = build_gap_binary(2);
    BinaryMatrix single = build_gap_binary(1).matrix;
    BinaryMatrix stacked = tensor_identity(single, 2);
    CHECK(binary_rank(d2.matrix).rank == binary_rank(stacked).rank);
    CHECK(real_rank(d2.matrix) == real_rank(stacked));
    CHECK(boolean_rank(d2.matrix).rank == boolean_rank(stacked).rank);
}

TEST_CASE("boolean gap family") {
    Fixture d1 = build_gap_boolean(1);
    CHECK(d1.matrix.rows() == 4);
    CHECK(d1.matrix.cols() == 5);
    CHECK(boolean_rank(d1.matrix).rank == 4);
    CHECK(binary_rank(d1.matrix).rank == 4);
    CHECK(real_rank(d1.matrix) == 3);

    Fixture d2 = build_gap_boolean(2);
    CHECK(d2.matrix.rows() == 8);
    CHECK(d2.matrix.cols() == 10);
    CHECK(boolean_rank(d2.matrix).rank == 8);
    CHECK(real_rank(d2.matrix) == 6);
}

TEST_CASE("row duplication family") {
    Fixture a1 = build_Ak(1);
    CHECK(a1.matrix.rows() == 5);
    CHECK(a1.matrix.cols() == 4);
    std::vector<ColumnVector> xs1;
    for (const auto& [name, v] : a1.vectors) xs1.push_back(v);
    BinaryMatrix augmented1 = augment(a1.matrix, xs1);
    CHECK(augmented1.rows() == 5);
    CHECK(augmented1.cols() == 5);
    CHECK(binary_rank(augmented1).rank == 4);

    Fixture a4 = build_Ak(4);
    std::vector<ColumnVector> xs4;
    for (const auto& [name, v] : a4.vectors) xs4.push_back(v);
    BinaryMatrix augmented4 = augment(a4.matrix, xs4);
    CHECK(augmented4.rows() == 8);
    CHECK(augmented4.cols() == 8);
    CHECK(binary_rank(augmented4).rank == 7);
    CHECK(boolean_rank(augmented4).rank >= 4);
    for (const auto& [name, v] : a4.vectors)
        CHECK(binary_rank(augment(a4.matrix, {v})).rank == 4);

    for (const RankClaim& claim : a4.claims) {
        ClaimOutcome outcome = check_claim(a4, claim);
        CAPTURE(outcome.detail);
        CHECK(outcome.pass);
    }
}

TEST_CASE("every split of the duplicated rows yields a base of the family") {
    // for any 0/1 split (y, z) of the duplicated rows, the four vectors
    // (y,1000), (y,0100), (z,0010), (z,0001) form a base; the augmentation
    // vectors of the fixture are members of such bases
    Fixture a2 = build_Ak(2);
    auto bases = enumerate_bases(a2.matrix, Semiring::Binary);
    for (unsigned y = 0; y < 4; ++y) {
        Base expected;
        expected.semiring = Semiring::Binary;
        expected.dim = 6;
        for (int slot = 0; slot < 4; ++slot) {
            std::vector<std::size_t> support = {(std::size_t)(2 + slot)};
            for (std::size_t i = 0; i < 2; ++i) {
                bool in_y = (y >> i) & 1;
                if ((slot < 2) == in_y) support.push_back(i);
            }
            expected.vectors.push_back(ColumnVector::of_support(6, support));
        }
        std::sort(expected.vectors.begin(), expected.vectors.end());
        CAPTURE(y);
        CHECK(std::find(bases.begin(), bases.end(), expected) != bases.end());
    }
    for (const auto& [name, v] : a2.vectors)
        CHECK(binary_rank(augment(a2.matrix, {v})).rank == 4);
}

TEST_CASE("solvers handle the default cap boundary") {
    BinaryMatrix i24 = BinaryMatrix::identity(24);
    CHECK(binary_rank(i24).rank == 24);
    CHECK(boolean_rank(i24).rank == 24);
    CHECK(real_rank(i24) == 24);
}

TEST_CASE("augmenting with two source bases") {
    BinaryMatrix two_source = fixture("sec2_example").matrix;
    Fixture f = augment_with_source_bases(two_source, Semiring::Binary);
    CHECK(binary_rank(f.matrix).rank >= 4);
    CHECK(real_rank(f.matrix) == 3);
    for (const RankClaim& claim : f.claims) CHECK(check_claim(f, claim).pass);

    Fixture fb = augment_with_source_bases(fixture("boolean_example").matrix, Semiring::Boolean);
    CHECK(boolean_rank(fb.matrix).rank >= 4);

    CHECK_THROWS_AS(augment_with_source_bases(BinaryMatrix::identity(3), Semiring::Binary),
                    InvalidArgument);
}

TEST_CASE("fixture json") {
    nlohmann::json j = fixture("sec2_example");
    CHECK(j["name"] == "sec2_example");
    CHECK(j["matrix"]["data"][0] == "010");
    CHECK(j["vectors"]["x"] == "1001");
    CHECK(j["claims"].is_array());
}
