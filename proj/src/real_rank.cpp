#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "rankforge/ranks.hpp"

namespace rankforge {

// Bareiss fraction-free elimination. Intermediates are minors of the input,
// so they stay integral; cpp_int keeps them exact at any size.
int real_rank(const BinaryMatrix& a) {
    using boost::multiprecision::cpp_int;
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    std::vector<std::vector<cpp_int>> w(n, std::vector<cpp_int>(m));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) w[r][c] = a.get(r, c) ? 1 : 0;

    std::size_t rank = 0;
    cpp_int prev = 1;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && w[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(w[pivot], w[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < m; ++c)
                w[r][c] = (w[rank][col] * w[r][c] - w[r][col] * w[rank][c]) / prev;
            w[r][col] = 0;
        }
        prev = w[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace rankforge
