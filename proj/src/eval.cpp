#include "kmodes/eval.hpp"

#include <algorithm>

#include "kmodes/error.hpp"

namespace kmodes {

AccuracyReport clustering_accuracy(const Assignment& assignment, std::span<const Code> labels) {
    const std::size_t n = assignment.cluster_of.size();
    if (labels.empty()) throw EvalError("no class labels to evaluate against");
    if (labels.size() != n) throw EvalError("labels length differs from assignment length");
    if (assignment.k == 0) throw EvalError("assignment has zero clusters");

    const std::size_t classes =
        static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
    std::vector<std::vector<std::size_t>> confusion(assignment.k,
                                                    std::vector<std::size_t>(classes, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ++confusion[assignment.cluster_of[i]][labels[i]];
    }

    AccuracyReport report;
    report.per_cluster.resize(assignment.k);
    std::size_t dominated = 0;
    for (std::uint32_t l = 0; l < assignment.k; ++l) {
        ClusterReport& cluster = report.per_cluster[l];
        for (std::size_t c = 0; c < classes; ++c) {
            cluster.size += confusion[l][c];
            if (confusion[l][c] > cluster.dominant_count) {  // ties stay with the lowest class
                cluster.dominant_count = confusion[l][c];
                cluster.dominant_class = static_cast<Code>(c);
            }
        }
        dominated += cluster.dominant_count;
    }
    report.accuracy = static_cast<double>(dominated) / static_cast<double>(n);
    return report;
}

}  // namespace kmodes
