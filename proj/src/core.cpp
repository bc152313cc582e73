#include "kmodes/core.hpp"

#include <utility>

#include "kmodes/metric.hpp"

namespace kmodes {

namespace {

void check_centers(const Dataset& ds, std::span<const Center> centers) {
    if (centers.empty()) throw ConfigError("zero centers");
    for (const Center& c : centers) {
        if (c.codes.size() != ds.m()) {
            throw DimensionError("center length differs from attribute count");
        }
    }
}

void check_assignment(const Dataset& ds, const Assignment& assignment, std::size_t k) {
    if (assignment.cluster_of.size() != ds.n()) {
        throw DimensionError("assignment length differs from object count");
    }
    if (assignment.k != k) {
        throw DimensionError("assignment cluster count differs from k");
    }
}

}  // namespace

Assignment assign_step(const Dataset& ds, std::span<const Center> centers) {
    check_centers(ds, centers);
    Assignment out;
    out.k = static_cast<std::uint32_t>(centers.size());
    out.cluster_of.resize(ds.n());
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto row = ds.row(i);
        std::uint32_t best = 0;
        std::uint32_t best_dist = simple_matching(row, std::span<const Code>(centers[0].codes));
        for (std::uint32_t l = 1; l < centers.size(); ++l) {
            std::uint32_t d = simple_matching(row, std::span<const Code>(centers[l].codes));
            if (d < best_dist) {  // strict: ties stay with the lowest index
                best = l;
                best_dist = d;
            }
        }
        out.cluster_of[i] = best;
    }
    return out;
}

std::vector<Center> update_modes(const Dataset& ds, const Assignment& assignment,
                                 std::span<const Center> previous) {
    if (previous.empty()) throw ConfigError("zero clusters");
    check_assignment(ds, assignment, previous.size());
    check_centers(ds, previous);

    const std::size_t k = previous.size();
    const std::size_t m = ds.m();

    // counts[l][j][code], one pass over the data
    std::vector<std::vector<std::vector<std::uint32_t>>> counts(k);
    for (std::size_t l = 0; l < k; ++l) {
        counts[l].resize(m);
        for (std::size_t j = 0; j < m; ++j) counts[l][j].resize(ds.domain_size(j), 0);
    }
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const std::uint32_t l = assignment.cluster_of[i];
        auto row = ds.row(i);
        ++sizes[l];
        for (std::size_t j = 0; j < m; ++j) ++counts[l][j][row[j]];
    }

    std::vector<Center> modes(k);
    for (std::size_t l = 0; l < k; ++l) {
        if (sizes[l] == 0) {
            modes[l] = previous[l];  // empty cluster keeps its center
            continue;
        }
        modes[l].codes.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            const auto& freq = counts[l][j];
            Code best = 0;
            for (Code c = 1; c < freq.size(); ++c) {
                if (freq[c] > freq[best]) best = c;  // ties stay with the lowest code
            }
            modes[l].codes[j] = best;
        }
    }
    return modes;
}

std::uint64_t objective(const Dataset& ds, const Assignment& assignment,
                        std::span<const Center> centers) {
    check_centers(ds, centers);
    check_assignment(ds, assignment, centers.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const std::uint32_t l = assignment.cluster_of[i];
        if (l >= centers.size()) throw std::out_of_range("cluster index out of range");
        total += simple_matching(ds.row(i), std::span<const Code>(centers[l].codes));
    }
    return total;
}

RunResult kmodes(const Dataset& ds, std::vector<Center> initial, std::size_t max_iters) {
    if (initial.empty()) throw ConfigError("k must be at least 1");
    if (initial.size() > ds.n()) throw ConfigError("k exceeds object count");
    if (max_iters < 1) throw ConfigError("max_iters must be at least 1");

    std::vector<Center> centers = std::move(initial);
    Assignment assignment = assign_step(ds, centers);
    std::size_t iterations = 0;
    for (;;) {
        ++iterations;
        centers = update_modes(ds, assignment, centers);
        Assignment next = assign_step(ds, centers);
        const bool unchanged = next == assignment;
        assignment = std::move(next);
        if (unchanged || iterations >= max_iters) break;
    }

    RunResult result;
    result.objective = objective(ds, assignment, centers);
    result.centers = std::move(centers);
    result.assignment = std::move(assignment);
    result.iterations = iterations;
    return result;
}

}  // namespace kmodes
