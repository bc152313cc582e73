#pragma once

#include <cstdint>
#include <span>

#include "kmodes/error.hpp"
#include "kmodes/types.hpp"

namespace kmodes {

// Simple matching dissimilarity: the number of attributes on which two
// encoded vectors disagree. Exact integer (Hamming distance over codes), so
// every downstream tie-break is reproducible.
inline std::uint32_t simple_matching(std::span<const Code> x, std::span<const Code> z) {
    if (x.size() != z.size()) {
        throw DimensionError("simple_matching: vector lengths differ");
    }
    std::uint32_t d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        d += static_cast<std::uint32_t>(x[j] != z[j]);
    }
    return d;
}

inline std::uint32_t simple_matching(const Center& a, const Center& b) {
    return simple_matching(std::span<const Code>(a.codes), std::span<const Code>(b.codes));
}

}  // namespace kmodes
