#include "rankforge/matrix.hpp"

#include <algorithm>
#include <bit>

namespace rankforge {

const char* to_string(Semiring s) {
    return s == Semiring::Binary ? "binary" : "boolean";
}

namespace {

std::size_t words_for(std::size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

ColumnVector::ColumnVector(std::size_t dim) : dim_(dim), bits_(words_for(dim), 0) {
    if (dim == 0) throw InvalidArgument("column vector needs dimension >= 1");
}

ColumnVector ColumnVector::from_string(std::string_view bits) {
    ColumnVector v(bits.empty() ? 1 : bits.size());
    if (bits.empty()) throw FormatError("empty vector string");
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.bits_[i / 64] |= std::uint64_t(1) << (i % 64);
        else if (bits[i] != '0')
            throw FormatError("vector characters must be '0' or '1'");
    }
    return v;
}

ColumnVector ColumnVector::of_support(std::size_t dim, std::initializer_list<std::size_t> ones) {
    return of_support(dim, std::vector<std::size_t>(ones));
}

ColumnVector ColumnVector::of_support(std::size_t dim, const std::vector<std::size_t>& ones) {
    ColumnVector v(dim);
    for (std::size_t i : ones) {
        if (i >= dim) throw InvalidArgument("support index out of range");
        v.bits_[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    return v;
}

bool ColumnVector::get(std::size_t i) const {
    return (bits_[i / 64] >> (i % 64)) & 1;
}

std::size_t ColumnVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

bool ColumnVector::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ColumnVector::disjoint_with(const ColumnVector& other) const {
    if (dim_ != other.dim_) throw DimensionError("vector dimensions differ");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & other.bits_[w]) return false;
    return true;
}

bool ColumnVector::subset_of(const ColumnVector& other) const {
    if (dim_ != other.dim_) throw DimensionError("vector dimensions differ");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

ColumnVector ColumnVector::or_with(const ColumnVector& other) const {
    if (dim_ != other.dim_) throw DimensionError("vector dimensions differ");
    ColumnVector out(dim_);
    for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] | other.bits_[w];
    return out;
}

std::string ColumnVector::to_string() const {
    std::string s(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool ColumnVector::operator==(const ColumnVector& other) const {
    return dim_ == other.dim_ && bits_ == other.bits_;
}

bool ColumnVector::operator<(const ColumnVector& other) const {
    std::size_t n = std::min(dim_, other.dim_);
    for (std::size_t i = 0; i < n; ++i) {
        bool a = get(i), b = other.get(i);
        if (a != b) return b;  // '0' < '1'
    }
    return dim_ < other.dim_;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), bits_(rows * words_for(cols), 0) {
    if (rows == 0 || cols == 0)
        throw InvalidArgument("matrix needs at least one row and one column");
}

void BinaryMatrix::set_(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

BinaryMatrix::Builder::Builder(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * words_for(cols), 0) {
    if (rows == 0 || cols == 0)
        throw InvalidArgument("matrix needs at least one row and one column");
}

void BinaryMatrix::Builder::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw InvalidArgument("builder index out of range");
    std::uint64_t& w = bits_[r * words_for(cols_) + c / 64];
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

BinaryMatrix BinaryMatrix::Builder::build() {
    BinaryMatrix m(rows_, cols_);
    m.bits_ = bits_;
    return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    return from_rows(rows);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw FormatError("matrix text is empty");
    std::size_t cols = rows[0].size();
    if (cols == 0) throw FormatError("matrix rows are empty");
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw FormatError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] == '1')
                m.set_(r, c, true);
            else if (rows[r][c] != '0')
                throw FormatError("matrix characters must be '0' or '1'");
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::filled(std::size_t rows, std::size_t cols, bool value) {
    BinaryMatrix m(rows, cols);
    if (value)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set_(r, c, true);
    return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

std::size_t BinaryMatrix::ones_count() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

bool BinaryMatrix::is_all_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t BinaryMatrix::col_mask(std::size_t c) const {
    if (rows_ > 64) throw ResourceLimitError("col_mask needs <= 64 rows");
    std::uint64_t mask = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) mask |= std::uint64_t(1) << r;
    return mask;
}

std::uint64_t BinaryMatrix::row_mask(std::size_t r) const {
    if (cols_ > 64) throw ResourceLimitError("row_mask needs <= 64 columns");
    return bits_[r * words_per_row_];
}

ColumnVector BinaryMatrix::column(std::size_t c) const {
    if (c >= cols_) throw InvalidArgument("column index out of range");
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) support.push_back(r);
    return ColumnVector::of_support(rows_, support);
}

ColumnVector BinaryMatrix::row_vector(std::size_t r) const {
    if (r >= rows_) throw InvalidArgument("row index out of range");
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) support.push_back(c);
    return ColumnVector::of_support(cols_, support);
}

std::string BinaryMatrix::serialize() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

BinaryMatrix augment(const BinaryMatrix& a, const std::vector<ColumnVector>& xs) {
    for (const ColumnVector& x : xs)
        if (x.dim() != a.rows()) throw DimensionError("augmentation vector dimension mismatch");
    BinaryMatrix::Builder b(a.rows(), a.cols() + xs.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) b.set(r, c);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (xs[i].get(r)) b.set(r, a.cols() + i);
    return b.build();
}

BinaryMatrix tensor_identity(const BinaryMatrix& a, std::size_t d) {
    if (d == 0) throw InvalidArgument("tensor_identity needs d >= 1");
    BinaryMatrix::Builder b(a.rows() * d, a.cols() * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a.get(r, c)) b.set(k * a.rows() + r, k * a.cols() + c);
    return b.build();
}

BinaryMatrix block_diag(const BinaryMatrix& top, const BinaryMatrix& bottom) {
    BinaryMatrix::Builder b(top.rows() + bottom.rows(), top.cols() + bottom.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c)
            if (top.get(r, c)) b.set(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c)
            if (bottom.get(r, c)) b.set(top.rows() + r, top.cols() + c);
    return b.build();
}

BinaryMatrix ProductResult::binary() const {
    if (!is_binary) throw InvalidArgument("product is not a 0/1 matrix");
    BinaryMatrix::Builder b(counts.rows, counts.cols);
    for (std::size_t r = 0; r < counts.rows; ++r)
        for (std::size_t c = 0; c < counts.cols; ++c)
            if (counts.at(r, c)) b.set(r, c);
    return b.build();
}

ProductResult product(const BinaryMatrix& u, const BinaryMatrix& v, Semiring s) {
    if (u.cols() != v.rows()) throw DimensionError("inner dimensions differ");
    ProductResult out;
    out.counts.rows = u.rows();
    out.counts.cols = v.cols();
    out.counts.v.assign(u.rows() * v.cols(), 0);
    out.is_binary = true;
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < v.cols(); ++c) {
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < u.cols(); ++k) {
                std::int64_t term = std::int64_t(u.get(r, k)) * std::int64_t(v.get(k, c));
                if (s == Semiring::Boolean)
                    sum = sum | term;
                else
                    sum += term;
            }
            out.counts.v[r * v.cols() + c] = sum;
            if (sum > 1) out.is_binary = false;
        }
    }
    return out;
}

void to_json(nlohmann::json& j, const BinaryMatrix& m) {
    std::vector<std::string> data;
    data.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) data.push_back(m.row_vector(r).to_string());
    j = nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

BinaryMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw FormatError("matrix json needs rows, cols and data");
    auto data = j.at("data").get<std::vector<std::string>>();
    BinaryMatrix m = BinaryMatrix::from_rows(data);
    if (m.rows() != j.at("rows").get<std::size_t>() || m.cols() != j.at("cols").get<std::size_t>())
        throw FormatError("matrix json dimensions disagree with data");
    return m;
}

}  // namespace rankforge
