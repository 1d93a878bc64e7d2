#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rankforge/matrix.hpp"
#include "rankforge/ranks.hpp"
#include "test_util.hpp"

using namespace rankforge;

namespace {
const char* kTwoSourceText = "010\n110\n111\n011\n";
}

TEST_CASE("augment appends columns in order") {
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    BinaryMatrix ax = augment(a, {ColumnVector::from_string("1001")});
    CHECK(ax.rows() == 4);
    CHECK(ax.cols() == 4);
    CHECK(ax == BinaryMatrix::parse("0101\n1100\n1110\n0111\n"));

    CHECK(augment(a, {}) == a);

    BinaryMatrix i2 = BinaryMatrix::identity(2);
    CHECK(augment(i2, {ColumnVector::from_string("11")}) == BinaryMatrix::parse("101\n011\n"));
}

TEST_CASE("augment keeps the original columns verbatim") {
    std::mt19937 rng(71);
    for (int it = 0; it < 30; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 6, 6, 0.5);
        std::vector<ColumnVector> xs;
        for (int j = 0; j < 3; ++j)
            xs.push_back(testutil::random_matrix(rng, 1, 1, 0.5).get(0, 0)
                             ? ColumnVector::of_support(a.rows(), {0})
                             : ColumnVector(a.rows()));
        BinaryMatrix aug = augment(a, xs);
        for (std::size_t c = 0; c < a.cols(); ++c) CHECK(aug.column(c) == a.column(c));
        for (std::size_t j = 0; j < xs.size(); ++j) CHECK(aug.column(a.cols() + j) == xs[j]);
    }
}

TEST_CASE("augment rejects wrong dimensions") {
    BinaryMatrix a = BinaryMatrix::identity(3);
    CHECK_THROWS_AS(augment(a, {ColumnVector::from_string("11")}), DimensionError);
}

TEST_CASE("tensor_identity") {
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    CHECK(tensor_identity(a, 1) == a);

    BinaryMatrix ones2 = BinaryMatrix::filled(2, 2, true);
    CHECK(tensor_identity(ones2, 2) == BinaryMatrix::parse("1100\n1100\n0011\n0011\n"));

    CHECK_THROWS_AS(tensor_identity(a, 0), InvalidArgument);
}

TEST_CASE("tensor_identity triples the binary rank of the two-source matrix") {
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    BinaryMatrix stacked = tensor_identity(a, 3);
    CHECK(stacked.rows() == 12);
    CHECK(stacked.cols() == 9);
    CHECK(binary_rank(stacked).rank == 9);
}

TEST_CASE("tensor_identity equals iterated block_diag") {
    std::mt19937 rng(72);
    for (int it = 0; it < 10; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 4, 4, 0.5);
        BinaryMatrix by_blocks = a;
        for (int d = 2; d <= 3; ++d) {
            by_blocks = block_diag(by_blocks, a);
            CHECK(by_blocks == tensor_identity(a, d));
        }
    }
}

TEST_CASE("block_diag") {
    BinaryMatrix one = BinaryMatrix::filled(1, 1, true);
    CHECK(block_diag(one, one) == BinaryMatrix::identity(2));

    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    CHECK(block_diag(a, a) == tensor_identity(a, 2));

    BinaryMatrix composite = block_diag(BinaryMatrix::filled(2, 2, true), BinaryMatrix::identity(2));
    CHECK(binary_rank(composite).rank == 3);
}

TEST_CASE("product under both semirings") {
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    ProductResult ida = product(BinaryMatrix::identity(4), a, Semiring::Binary);
    CHECK(ida.is_binary);
    CHECK(ida.binary() == a);

    ProductResult outer = product(BinaryMatrix::parse("1\n1\n"), BinaryMatrix::parse("11\n"),
                                  Semiring::Binary);
    CHECK(outer.is_binary);
    CHECK(outer.binary() == BinaryMatrix::filled(2, 2, true));

    ProductResult inner_bin = product(BinaryMatrix::parse("11\n"), BinaryMatrix::parse("1\n1\n"),
                                      Semiring::Binary);
    CHECK(!inner_bin.is_binary);
    CHECK(inner_bin.counts.at(0, 0) == 2);

    ProductResult inner_bool = product(BinaryMatrix::parse("11\n"), BinaryMatrix::parse("1\n1\n"),
                                       Semiring::Boolean);
    CHECK(inner_bool.is_binary);
    CHECK(inner_bool.binary() == BinaryMatrix::filled(1, 1, true));

    CHECK_THROWS_AS(product(BinaryMatrix::identity(2), BinaryMatrix::identity(3), Semiring::Binary),
                    DimensionError);
}

TEST_CASE("boolean products are always 0/1, binary counts never negative") {
    std::mt19937 rng(73);
    for (int it = 0; it < 30; ++it) {
        BinaryMatrix u = testutil::random_matrix(rng, 5, 4, 0.5);
        BinaryMatrix::Builder vb(u.cols(), 3);
        for (std::size_t r = 0; r < u.cols(); ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (rng() & 1) vb.set(r, c);
        BinaryMatrix v = vb.build();
        CHECK(product(u, v, Semiring::Boolean).is_binary);
        for (std::int64_t x : product(u, v, Semiring::Binary).counts.v) CHECK(x >= 0);
    }
}

TEST_CASE("parse and serialize") {
    CHECK(BinaryMatrix::parse("10\n01\n") == BinaryMatrix::identity(2));
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    CHECK(a.rows() == 4);
    CHECK(a.cols() == 3);
    CHECK(a.get(2, 2));
    CHECK(!a.get(0, 0));

    CHECK_THROWS_AS(BinaryMatrix::parse("10\n011\n"), FormatError);
    CHECK_THROWS_AS(BinaryMatrix::parse(""), FormatError);
    CHECK_THROWS_AS(BinaryMatrix::parse("10\n0x\n"), FormatError);

    CHECK(BinaryMatrix::parse("10\n01") == BinaryMatrix::identity(2));  // no trailing newline
}

TEST_CASE("parse and serialize are inverse on random matrices") {
    std::mt19937 rng(74);
    for (int it = 0; it < 50; ++it) {
        BinaryMatrix a = testutil::random_matrix(rng, 8, 8, 0.4);
        CHECK(BinaryMatrix::parse(a.serialize()) == a);
    }
    std::string text = "010\n110\n111\n011\n";
    CHECK(BinaryMatrix::parse(text).serialize() == text);
}

TEST_CASE("matrix json round trip") {
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    nlohmann::json j = a;
    CHECK(j["rows"] == 4);
    CHECK(j["cols"] == 3);
    CHECK(j["data"][0] == "010");
    CHECK(matrix_from_json(j) == a);
}

TEST_CASE("empty matrices are rejected") {
    CHECK_THROWS_AS(BinaryMatrix::Builder(0, 3), InvalidArgument);
    CHECK_THROWS_AS(BinaryMatrix::Builder(3, 0), InvalidArgument);
    CHECK_THROWS_AS(ColumnVector(0), InvalidArgument);
}

TEST_CASE("column vector ordering is lexicographic") {
    ColumnVector a = ColumnVector::from_string("0011");
    ColumnVector b = ColumnVector::from_string("0110");
    ColumnVector c = ColumnVector::from_string("1001");
    CHECK(a < b);
    CHECK(b < c);
    CHECK(!(c < a));
    CHECK(a.to_string() == "0011");
}
