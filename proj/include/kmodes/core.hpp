#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kmodes/dataset.hpp"
#include "kmodes/types.hpp"

namespace kmodes {

inline constexpr std::size_t kDefaultMaxIters = 100;

// Outcome of one k-modes run.
struct RunResult {
    std::vector<Center> centers;
    Assignment assignment;
    std::uint64_t objective = 0;       // final cost, recomputable from scratch
    std::size_t iterations = 0;        // completed (update, reassign) cycles
    std::optional<double> accuracy;    // filled by the evaluation layer

    bool operator==(const RunResult&) const = default;
};

// Assign every object to a nearest center; distance ties break to the lowest
// cluster index. Throws ConfigError on zero centers.
Assignment assign_step(const Dataset& ds, std::span<const Center> centers);

// Recompute each non-empty cluster's center as the per-attribute mode of its
// members (frequency ties break to the lowest code). Empty clusters retain
// their previous center.
std::vector<Center> update_modes(const Dataset& ds, const Assignment& assignment,
                                 std::span<const Center> previous);

// Total cost: sum over objects of the simple matching distance to the
// assigned center.
std::uint64_t objective(const Dataset& ds, const Assignment& assignment,
                        std::span<const Center> centers);

// Alternate assignment and mode-update steps from the given initial centers
// until the assignment stops changing or max_iters cycles have run.
RunResult kmodes(const Dataset& ds, std::vector<Center> initial,
                 std::size_t max_iters = kDefaultMaxIters);

}  // namespace kmodes
