#pragma once

// Shared solved pipeline for the bundled example, built once per test binary.

#include "dehnext/pipeline.hpp"

namespace dehnext::testing {

inline const Pipeline& bundled() {
    static const Pipeline p = prepare(default_config(), true);
    return p;
}

inline const ExperimentConfig& bundled_config() {
    static const ExperimentConfig c = default_config();
    return c;
}

}  // namespace dehnext::testing
