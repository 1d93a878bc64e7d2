#include "rankforge/config.hpp"

namespace rankforge {

SolverConfig& default_config() {
    static SolverConfig cfg;
    return cfg;
}

}  // namespace rankforge
