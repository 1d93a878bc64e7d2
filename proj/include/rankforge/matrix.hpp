#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rankforge/errors.hpp"

namespace rankforge {

/// Addition rule used by the combinatorial rank functions. Binary means
/// integer addition whose sums must stay in {0,1}; Boolean means OR.
enum class Semiring { Binary, Boolean };

const char* to_string(Semiring s);

/// Immutable 0/1 column vector. Bit i is row i.
class ColumnVector {
  public:
    explicit ColumnVector(std::size_t dim);  // all zeros
    static ColumnVector from_string(std::string_view bits);
    static ColumnVector of_support(std::size_t dim, std::initializer_list<std::size_t> ones);
    static ColumnVector of_support(std::size_t dim, const std::vector<std::size_t>& ones);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t i) const;
    std::size_t popcount() const;
    bool is_zero() const;

    bool disjoint_with(const ColumnVector& other) const;
    bool subset_of(const ColumnVector& other) const;
    ColumnVector or_with(const ColumnVector& other) const;

    std::string to_string() const;

    bool operator==(const ColumnVector& other) const;
    /// Lexicographic on the bit string, entry 0 first.
    bool operator<(const ColumnVector& other) const;

  private:
    std::size_t dim_;
    std::vector<std::uint64_t> bits_;
};

/// Immutable dense 0/1 matrix with word-packed rows. Construct through the
/// factories or a Builder; all operations return new values.
class BinaryMatrix {
  public:
    class Builder {
      public:
        Builder(std::size_t rows, std::size_t cols);
        void set(std::size_t r, std::size_t c, bool value = true);
        BinaryMatrix build();

      private:
        std::size_t rows_;
        std::size_t cols_;
        std::vector<std::uint64_t> bits_;
    };

    /// One text row per line, characters '0'/'1', equal lengths.
    static BinaryMatrix parse(std::string_view text);
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);
    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix filled(std::size_t rows, std::size_t cols, bool value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t cells() const { return rows_ * cols_; }
    bool get(std::size_t r, std::size_t c) const;
    std::size_t ones_count() const;
    bool is_all_zero() const;

    /// Column c bitmask over rows. Requires rows() <= 64.
    std::uint64_t col_mask(std::size_t c) const;
    /// Row r bitmask over columns. Requires cols() <= 64.
    std::uint64_t row_mask(std::size_t r) const;

    ColumnVector column(std::size_t c) const;
    /// Row r as a vector of dimension cols().
    ColumnVector row_vector(std::size_t r) const;

    std::string serialize() const;

    bool operator==(const BinaryMatrix& other) const;
    bool operator!=(const BinaryMatrix& other) const { return !(*this == other); }

  private:
    BinaryMatrix(std::size_t rows, std::size_t cols);
    void set_(std::size_t r, std::size_t c, bool value);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// (A | x_1 ... x_t): columns appended in order. Empty list returns A.
BinaryMatrix augment(const BinaryMatrix& a, const std::vector<ColumnVector>& xs);

/// Block-diagonal matrix with d copies of A on the diagonal.
BinaryMatrix tensor_identity(const BinaryMatrix& a, std::size_t d);

/// B top-left, C bottom-right, zeros elsewhere.
BinaryMatrix block_diag(const BinaryMatrix& b, const BinaryMatrix& c);

/// Integer matrix holding entrywise product counts.
struct NatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> v;

    std::int64_t at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

struct ProductResult {
    NatMatrix counts;
    bool is_binary = false;

    /// The product as a BinaryMatrix. Throws InvalidArgument when a Binary
    /// semiring sum left {0,1}.
    BinaryMatrix binary() const;
};

/// U * V under the chosen semiring. Binary keeps integer counts and flags
/// whether they all stayed in {0,1}; Boolean is the OR-AND product.
ProductResult product(const BinaryMatrix& u, const BinaryMatrix& v, Semiring s);

void to_json(nlohmann::json& j, const BinaryMatrix& m);
BinaryMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace rankforge
