#include <random>
#include <vector>

#include "doctest.h"

#include "kmodes/eval.hpp"
#include "kmodes/error.hpp"
#include "oracles.hpp"

using kmodes::Assignment;
using kmodes::Code;

TEST_SUITE("eval") {

TEST_CASE("pure clusters score 1.0") {
    Assignment asg{{0, 0, 1, 1}, 2};
    std::vector<Code> labels = {0, 0, 1, 1};
    auto report = kmodes::clustering_accuracy(asg, labels);
    CHECK(report.accuracy == 1.0);
    CHECK(report.per_cluster[0].dominant_class == Code{0});
    CHECK(report.per_cluster[1].dominant_class == Code{1});
}

TEST_CASE("majority counting: {A,A,B} and {B,B} give 0.8") {
    Assignment asg{{0, 0, 0, 1, 1}, 2};
    std::vector<Code> labels = {0, 0, 1, 1, 1};
    auto report = kmodes::clustering_accuracy(asg, labels);
    CHECK(report.accuracy == doctest::Approx(0.8));
    CHECK(report.per_cluster[0].dominant_count == 2);
    CHECK(report.per_cluster[1].dominant_count == 2);
}

TEST_CASE("one cluster over the voting class distribution") {
    // 168 of one class, 267 of the other, all in a single cluster
    std::vector<std::uint32_t> cluster_of(435, 0);
    std::vector<Code> labels;
    labels.insert(labels.end(), 168, 0);
    labels.insert(labels.end(), 267, 1);
    auto report = kmodes::clustering_accuracy(Assignment{cluster_of, 1}, labels);
    CHECK(report.accuracy == doctest::Approx(267.0 / 435.0));
    CHECK(report.per_cluster[0].dominant_class == Code{1});
}

TEST_CASE("empty cluster contributes zero and has no dominant class") {
    Assignment asg{{0, 0}, 2};
    std::vector<Code> labels = {0, 1};
    auto report = kmodes::clustering_accuracy(asg, labels);
    CHECK(report.per_cluster[1].size == 0);
    CHECK(report.per_cluster[1].dominant_count == 0);
    CHECK_FALSE(report.per_cluster[1].dominant_class.has_value());
    CHECK(report.accuracy == doctest::Approx(0.5));
}

TEST_CASE("dominant-class ties break to the lowest class code") {
    Assignment asg{{0, 0}, 1};
    std::vector<Code> labels = {1, 0};
    auto report = kmodes::clustering_accuracy(asg, labels);
    CHECK(report.per_cluster[0].dominant_class == Code{0});
}

TEST_CASE("missing labels throw") {
    Assignment asg{{0}, 1};
    CHECK_THROWS_AS(kmodes::clustering_accuracy(asg, {}), kmodes::EvalError);
    std::vector<Code> short_labels = {0};
    Assignment two{{0, 0}, 1};
    CHECK_THROWS_AS(kmodes::clustering_accuracy(two, short_labels), kmodes::EvalError);
}

TEST_CASE("permuting cluster indices leaves accuracy unchanged") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 5 + rng() % 30;
        const std::uint32_t k = 2 + rng() % 4;
        Assignment asg;
        asg.k = k;
        asg.cluster_of.resize(n);
        std::vector<Code> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            asg.cluster_of[i] = rng() % k;
            labels[i] = static_cast<Code>(rng() % 3);
        }
        std::vector<std::uint32_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        Assignment permuted = asg;
        for (auto& c : permuted.cluster_of) c = perm[c];
        CHECK(kmodes::clustering_accuracy(asg, labels).accuracy ==
              kmodes::clustering_accuracy(permuted, labels).accuracy);
    }
}

TEST_CASE("agrees with the confusion-matrix oracle") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 4 + rng() % 40;
        const std::uint32_t k = 1 + rng() % 5;
        Assignment asg;
        asg.k = k;
        asg.cluster_of.resize(n);
        std::vector<Code> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            asg.cluster_of[i] = rng() % k;
            labels[i] = static_cast<Code>(rng() % 4);
        }
        auto report = kmodes::clustering_accuracy(asg, labels);
        CHECK(report.accuracy ==
              doctest::Approx(oracle::confusion_accuracy(asg.cluster_of, labels, k)));
        CHECK(report.accuracy >= 0.0);
        CHECK(report.accuracy <= 1.0);

        // r = 1 iff every cluster is pure
        bool pure = true;
        for (std::uint32_t l = 0; l < k; ++l) {
            if (report.per_cluster[l].dominant_count != report.per_cluster[l].size) pure = false;
        }
        CHECK((report.accuracy == 1.0) == pure);
    }
}

}  // TEST_SUITE
