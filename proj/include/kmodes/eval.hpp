#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kmodes/types.hpp"

namespace kmodes {

// Per-cluster slice of an accuracy computation. An empty cluster has no
// dominant class and contributes zero.
struct ClusterReport {
    std::size_t size = 0;
    std::optional<Code> dominant_class;
    std::size_t dominant_count = 0;  // a_l

    bool operator==(const ClusterReport&) const = default;
};

struct AccuracyReport {
    double accuracy = 0.0;  // (sum of dominant counts) / n
    std::vector<ClusterReport> per_cluster;

    bool operator==(const AccuracyReport&) const = default;
};

// Majority-class purity: each cluster independently maps to its most frequent
// class (ties to the lowest class code); two clusters may map to the same
// class. Throws EvalError when labels are missing or sized wrong.
AccuracyReport clustering_accuracy(const Assignment& assignment, std::span<const Code> labels);

}  // namespace kmodes
