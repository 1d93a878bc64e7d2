#pragma once

#include <random>

#include "rankforge/matrix.hpp"

namespace testutil {

inline rankforge::BinaryMatrix random_matrix(std::mt19937& rng, std::size_t max_rows,
                                             std::size_t max_cols, double density) {
    std::uniform_int_distribution<std::size_t> rows_dist(1, max_rows);
    std::uniform_int_distribution<std::size_t> cols_dist(1, max_cols);
    std::bernoulli_distribution bit(density);
    rankforge::BinaryMatrix::Builder b(rows_dist(rng), cols_dist(rng));
    rankforge::BinaryMatrix zero = b.build();
    rankforge::BinaryMatrix::Builder filled(zero.rows(), zero.cols());
    for (std::size_t r = 0; r < zero.rows(); ++r)
        for (std::size_t c = 0; c < zero.cols(); ++c)
            if (bit(rng)) filled.set(r, c);
    return filled.build();
}

inline rankforge::BinaryMatrix random_nonzero_matrix(std::mt19937& rng, std::size_t max_rows,
                                                     std::size_t max_cols, double density) {
    for (;;) {
        rankforge::BinaryMatrix m = random_matrix(rng, max_rows, max_cols, density);
        if (!m.is_all_zero()) return m;
    }
}

}  // namespace testutil
