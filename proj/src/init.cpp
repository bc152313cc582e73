#include "kmodes/init.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "kmodes/metric.hpp"

namespace kmodes {

std::string_view to_string(InitMethod method) {
    switch (method) {
        case InitMethod::random: return "random";
        case InitMethod::bfph: return "bfph";
        case InitMethod::nfph: return "nfph";
    }
    return "?";
}

InitMethod init_method_from_string(std::string_view name) {
    if (name == "random") return InitMethod::random;
    if (name == "bfph") return InitMethod::bfph;
    if (name == "nfph") return InitMethod::nfph;
    throw ConfigError("unknown init method: " + std::string(name));
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    if (bound == 0) throw ConfigError("uniform_index: bound must be positive");
    const std::uint64_t b = bound;
    // reject draws below 2^64 mod b so the remaining range is a whole number
    // of cycles
    const std::uint64_t reject_below = (0 - b) % b;
    std::uint64_t v = rng();
    while (v < reject_below) v = rng();
    return static_cast<std::size_t>(v % b);
}

namespace {

void check_k(const Dataset& ds, std::size_t k) {
    if (k < 1) throw ConfigError("k must be at least 1");
    if (k > ds.n()) {
        throw ConfigError("k = " + std::to_string(k) + " exceeds object count " +
                          std::to_string(ds.n()));
    }
}

std::vector<Center> copy_rows(const Dataset& ds, const std::vector<std::size_t>& rows) {
    std::vector<Center> centers;
    centers.reserve(rows.size());
    for (std::size_t r : rows) {
        auto row = ds.row(r);
        centers.push_back(Center{{row.begin(), row.end()}});
    }
    return centers;
}

}  // namespace

InitResult init_random(const Dataset& ds, std::size_t k, std::uint64_t seed) {
    check_k(ds, k);
    std::mt19937_64 rng(seed);
    // partial Fisher-Yates: first k slots end up a uniform sample without
    // replacement
    std::vector<std::size_t> indices(ds.n());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + uniform_index(rng, ds.n() - i);
        std::swap(indices[i], indices[j]);
    }
    InitResult result;
    result.rows.assign(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(k));
    result.centers = copy_rows(ds, result.rows);
    return result;
}

InitResult farthest_point_chain(const Dataset& ds, std::size_t first, std::size_t k) {
    check_k(ds, k);
    if (first >= ds.n()) throw ConfigError("first row index out of range");

    InitResult result;
    result.rows.reserve(k);
    result.rows.push_back(first);

    std::vector<std::uint32_t> min_dist(ds.n(), std::numeric_limits<std::uint32_t>::max());
    while (result.rows.size() < k) {
        // fold the newest center into the min-distance array: n evaluations
        auto newest = ds.row(result.rows.back());
        for (std::size_t i = 0; i < ds.n(); ++i) {
            std::uint32_t d = simple_matching(ds.row(i), newest);
            ++result.distance_evals;
            if (d < min_dist[i]) min_dist[i] = d;
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < ds.n(); ++i) {
            if (min_dist[i] > min_dist[best]) best = i;  // ties stay with the lowest index
        }
        result.rows.push_back(best);
    }
    result.centers = copy_rows(ds, result.rows);
    return result;
}

InitResult init_bfph(const Dataset& ds, std::size_t k, std::uint64_t seed) {
    check_k(ds, k);
    std::mt19937_64 rng(seed);
    return farthest_point_chain(ds, uniform_index(rng, ds.n()), k);
}

std::vector<std::uint64_t> point_scores(const Dataset& ds, const FrequencyTable& freq) {
    if (freq.attribute_count() != ds.m()) {
        throw DimensionError("frequency table attribute count differs from dataset");
    }
    for (std::size_t j = 0; j < ds.m(); ++j) {
        if (freq.domain_size(j) != ds.domain_size(j)) {
            throw DimensionError("frequency table domain differs from dataset dictionary");
        }
    }
    std::vector<std::uint64_t> scores(ds.n(), 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto row = ds.row(i);
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < ds.m(); ++j) s += freq.count(j, row[j]);
        scores[i] = s;
    }
    return scores;
}

InitResult init_nfph(const Dataset& ds, std::size_t k) {
    check_k(ds, k);
    const FrequencyTable freq = global_frequency_table(ds);
    const std::vector<std::uint64_t> scores = point_scores(ds, freq);
    std::size_t first = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[first]) first = i;  // ties stay with the lowest index
    }
    return farthest_point_chain(ds, first, k);
}

InitResult make_centers(const Dataset& ds, const InitSpec& spec) {
    switch (spec.method) {
        case InitMethod::random: return init_random(ds, spec.k, spec.seed);
        case InitMethod::bfph: return init_bfph(ds, spec.k, spec.seed);
        case InitMethod::nfph: return init_nfph(ds, spec.k);
    }
    throw ConfigError("unknown init method");
}

std::uint32_t partition_radius(const Dataset& ds, std::span<const Center> centers) {
    if (centers.empty()) throw ConfigError("zero centers");
    std::uint32_t radius = 0;
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto row = ds.row(i);
        std::uint32_t nearest = std::numeric_limits<std::uint32_t>::max();
        for (const Center& c : centers) {
            nearest = std::min(nearest, simple_matching(row, std::span<const Code>(c.codes)));
        }
        radius = std::max(radius, nearest);
    }
    return radius;
}

}  // namespace kmodes
