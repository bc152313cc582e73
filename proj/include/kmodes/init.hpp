#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "kmodes/dataset.hpp"
#include "kmodes/types.hpp"

namespace kmodes {

enum class InitMethod { random, bfph, nfph };

std::string_view to_string(InitMethod method);
InitMethod init_method_from_string(std::string_view name);  // throws ConfigError

// How to produce the k initial centers. nfph ignores the seed entirely.
struct InitSpec {
    InitMethod method = InitMethod::random;
    std::uint64_t seed = 0;
    std::size_t k = 1;
};

// Selected initial centers. `rows` holds the source row indices in selection
// order; `distance_evals` counts metric evaluations spent by the farthest
// point chain: exactly (k-1)*n for chain-based methods, 0 for random.
struct InitResult {
    std::vector<std::size_t> rows;
    std::vector<Center> centers;
    std::uint64_t distance_evals = 0;
};

// Unbiased draw from [0, bound) via rejection sampling. mt19937_64's output
// sequence is pinned by the standard and uniform_int_distribution is not, so
// this is what keeps "same seed, same result" true across platforms.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound);

// k distinct row indices sampled uniformly without replacement.
InitResult init_random(const Dataset& ds, std::size_t k, std::uint64_t seed);

// Greedy max-min selection: start at `first`, then repeatedly take the row
// maximizing the distance to the nearest already-chosen center. Ties break to
// the lowest row index. Maintains an incremental min-distance array, so the
// cost is exactly (k-1)*n distance evaluations.
InitResult farthest_point_chain(const Dataset& ds, std::size_t first, std::size_t k);

// Basic farthest-point heuristic: seeded random first row, then the chain.
InitResult init_bfph(const Dataset& ds, std::size_t k, std::uint64_t seed);

// score[i] = sum over attributes of the whole-dataset frequency of row i's
// value. Throws DimensionError when the table does not match the dataset.
std::vector<std::uint64_t> point_scores(const Dataset& ds, const FrequencyTable& freq);

// Deterministic farthest-point heuristic: the first row is the one with the
// highest frequency score (ties to the lowest row index), then the chain.
// A pure function of (ds, k).
InitResult init_nfph(const Dataset& ds, std::size_t k);

// Dispatch on spec.method.
InitResult make_centers(const Dataset& ds, const InitSpec& spec);

// k-center objective of a center set: the maximum over objects of the
// distance to the nearest center.
std::uint32_t partition_radius(const Dataset& ds, std::span<const Center> centers);

}  // namespace kmodes
