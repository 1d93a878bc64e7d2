#pragma once

#include <cstddef>

namespace rankforge {

/// Runtime limits and scheduling knobs for the exact solvers.
///
/// The decision problems behind the combinatorial ranks are NP-hard, so the
/// solvers refuse inputs above `max_cells` instead of running forever.
/// `threads == 1` selects the serial reference path, `threads == 0` lets
/// OpenMP pick, any other value caps the worker count. Results are identical
/// for every thread count.
struct SolverConfig {
    std::size_t max_cells = 576;  // 24 x 24 by default
    int threads = 0;
};

/// Process-wide default used when no explicit config is passed.
SolverConfig& default_config();

}  // namespace rankforge
