#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "rforge/graph.hpp"

namespace rforge {

// End-to-end run: obtain a palette (construct one or use the given graph),
// then repeatedly color, build the triple system, certify every link against
// the odd cycles up to g, and decide the tripartite-hole question. A trial is
// an instance when the links are clean and hole absence is certified.
struct PipelineParams {
    int g = 3;
    int m = 10;
    std::optional<int> t;          // biset order passed to the constructor
    std::optional<Graph> palette;  // skip construction when provided
    int N = 12;                    // points to color
    int n = 2;                     // hole order sought in the complement
    int trials = 50;
    uint64_t seed = 0;
    int hole_exhaustive_limit = 24;
    int parallel = 1;  // worker threads over trials; the report is order-stable
};

// Deterministic given params (no clocks in the payload).
nlohmann::json run_pipeline(const PipelineParams& params);

} // namespace rforge
