#pragma once

#include <cstdint>
#include <vector>

namespace kmodes {

// Dense integer code of a categorical attribute value. Code j in column a
// indexes position j of attribute a's dictionary.
using Code = std::uint32_t;

// One cluster representative: a length-m vector of attribute codes, either a
// mode or a selected data row.
struct Center {
    std::vector<Code> codes;

    bool operator==(const Center&) const = default;
};

// Dense realization of the partition matrix: exactly one cluster per object,
// cluster indices in [0, k).
struct Assignment {
    std::vector<std::uint32_t> cluster_of;
    std::uint32_t k = 0;

    bool operator==(const Assignment&) const = default;
};

}  // namespace kmodes
